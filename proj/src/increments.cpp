#include "gltau/increments.hpp"

#include <cmath>

#include "gltau/errors.hpp"

namespace gltau {

Matrix sample_hermitian_increment(int n, double dt, Rng& rng) {
    if (n < 1) throw ContractError("dimension must be >= 1");
    if (!(dt > 0.0)) throw ContractError("dt must be positive");
    Matrix h(n, n);
    const double diag_sd = std::sqrt(dt / n);
    const double off_sd = std::sqrt(dt / (2.0 * n));
    for (int j = 0; j < n; ++j) {
        h(j, j) = Complex(diag_sd * rng.gaussian(), 0.0);
        for (int i = j + 1; i < n; ++i) {
            const Complex v(off_sd * rng.gaussian(), off_sd * rng.gaussian());
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

Matrix sample_elliptic_increment(const ModelParams& params, int n, double dt,
                                 Rng& rng) {
    const Complex phase = std::exp(Complex(0.0, params.theta));
    Matrix z;
    if (params.a != 0.0) {
        z = (phase * params.a) * sample_hermitian_increment(n, dt, rng);
        if (params.b != 0.0)
            z += (phase * Complex(0.0, params.b)) * sample_hermitian_increment(n, dt, rng);
    } else {
        z = (phase * Complex(0.0, params.b)) * sample_hermitian_increment(n, dt, rng);
    }
    return z;
}

}  // namespace gltau
