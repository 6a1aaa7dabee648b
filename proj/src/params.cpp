#include "gltau/params.hpp"

#include <cmath>

#include "gltau/errors.hpp"

namespace gltau {

namespace {

void check_sigmas(const std::vector<double>& sigmas) {
    if (sigmas.empty()) throw ScaleError("at least one time scale sigma is required");
    for (double s : sigmas) {
        if (!(s > 0.0)) throw ScaleError("time scale sigma must be positive, got " + std::to_string(s));
    }
}

}  // namespace

ModelParams validate_params(double lambda, Complex tau,
                            const std::vector<double>& sigmas) {
    if (!(lambda >= 0.0)) {
        throw AdmissibilityError("variance lambda must be nonnegative, got " + std::to_string(lambda));
    }
    const Complex w = lambda - tau;
    const double r = std::abs(w);
    // Allow a sliver of rounding at the disk boundary (|tau - lambda| = lambda
    // is admissible, e.g. tau = 0 or tau = 2 lambda).
    if (r > lambda * (1.0 + 64.0 * 1e-16)) {
        throw AdmissibilityError("(lambda, tau) outside the admissibility disk: |tau - lambda| = " +
                                 std::to_string(r) + " > lambda = " + std::to_string(lambda));
    }
    check_sigmas(sigmas);

    ModelParams p;
    p.lambda = lambda;
    p.tau = tau;
    p.sigmas = sigmas;
    if (r == 0.0) {
        p.theta = 0.0;
        p.a = p.b = std::sqrt(lambda / 2.0);
    } else {
        // std::arg lands in (-pi, pi], so theta lands in (-pi/2, pi/2].
        p.theta = std::arg(w) / 2.0;
        p.a = std::sqrt((lambda + r) / 2.0);
        p.b = std::sqrt(std::max(0.0, (lambda - r) / 2.0));
    }
    return p;
}

ModelParams params_from_abtheta(double a, double b, double theta,
                                const std::vector<double>& sigmas) {
    if (a < 0.0 || b < 0.0) throw DegenerateError("a and b must be nonnegative");
    if (a == 0.0 && b == 0.0) throw DegenerateError("a and b must not both be zero");
    check_sigmas(sigmas);

    ModelParams p;
    p.a = a;
    p.b = b;
    p.theta = theta;
    p.sigmas = sigmas;
    p.lambda = a * a + b * b;
    p.tau = p.lambda - std::exp(Complex(0.0, 2.0 * theta)) * (a * a - b * b);
    return p;
}

}  // namespace gltau
