#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gltau/errors.hpp"

namespace gltau {

// Adaptive Dormand-Prince 5(4) for the linear coefficient flows v' = L v.
// Rhs is a functor void(const VectorXcd& v, VectorXcd& dv). Error control is
// a mixed absolute/relative RMS norm at tolerance tol.
template <typename Rhs>
void integrate_ode(Rhs&& rhs, Eigen::VectorXcd& y, double t_final, double tol) {
    using Vec = Eigen::VectorXcd;
    if (t_final == 0.0) return;
    if (t_final < 0.0) throw ContractError("ode horizon must be >= 0");

    const Eigen::Index n = y.size();
    Vec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), yerr(n);

    double t = 0.0;
    double h = std::min(t_final, 0.1);
    rhs(y, k1);  // stays valid across rejected steps, swapped on acceptance (FSAL)
    const int max_steps = 2000000;
    int steps = 0;

    while (t < t_final) {
        if (++steps > max_steps)
            throw ToleranceError("ode integrator exceeded the step budget");
        h = std::min(h, t_final - t);
        if (h < 1e-14 * std::max(1.0, t_final))
            throw ToleranceError("ode step size underflow");

        ytmp = y + h * (1.0 / 5.0) * k1;
        rhs(ytmp, k2);
        ytmp = y + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2);
        rhs(ytmp, k3);
        ytmp = y + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * k2 + (32.0 / 9.0) * k3);
        rhs(ytmp, k4);
        ytmp = y + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * k2 +
                        (64448.0 / 6561.0) * k3 + (-212.0 / 729.0) * k4);
        rhs(ytmp, k5);
        ytmp = y + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * k2 +
                        (46732.0 / 5247.0) * k3 + (49.0 / 176.0) * k4 +
                        (-5103.0 / 18656.0) * k5);
        rhs(ytmp, k6);
        ynew = y + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 +
                        (125.0 / 192.0) * k4 + (-2187.0 / 6784.0) * k5 +
                        (11.0 / 84.0) * k6);
        rhs(ynew, k7);
        yerr = h * ((35.0 / 384.0 - 5179.0 / 57600.0) * k1 +
                    (500.0 / 1113.0 - 7571.0 / 16695.0) * k3 +
                    (125.0 / 192.0 - 393.0 / 640.0) * k4 +
                    (-2187.0 / 6784.0 + 92097.0 / 339200.0) * k5 +
                    (11.0 / 84.0 - 187.0 / 2100.0) * k6 + (-1.0 / 40.0) * k7);

        double err_sq = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double scale =
                tol + tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            const double e = std::abs(yerr[i]) / scale;
            err_sq += e * e;
        }
        const double err = std::sqrt(err_sq / static_cast<double>(std::max<Eigen::Index>(n, 1)));

        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7);
        }
        const double factor =
            std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
    }
}

}  // namespace gltau
