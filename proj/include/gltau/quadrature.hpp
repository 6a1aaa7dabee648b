#pragma once

#include <cmath>
#include <complex>

#include "gltau/errors.hpp"

namespace gltau {

namespace detail {

template <typename F, typename T>
T adaptive_simpson_rec(F& f, double a, double b, T fa, T fm, T fb, T whole,
                       double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (depth <= 0) throw QuadratureError("adaptive quadrature depth exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction; T is double or complex.
// The interval is pre-split into a few panels so symmetric integrands do
// not fool the initial error estimate.
template <typename T = double, typename F>
T adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
    if (!(b > a)) return T(0);
    T total(0);
    const int panels = 4;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        const double m = 0.5 * (x0 + x1);
        const T f0 = f(x0);
        const T fm = f(m);
        const T f1 = f(x1);
        const T whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += detail::adaptive_simpson_rec(f, x0, x1, f0, fm, f1, whole,
                                              tol / panels, max_depth);
    }
    return total;
}

}  // namespace gltau
