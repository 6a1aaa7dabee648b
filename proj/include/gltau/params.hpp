#pragma once

#include <complex>
#include <vector>

namespace gltau {

using Complex = std::complex<double>;

// Parameter set of the rotated elliptic Brownian motion driving the
// multiplicative process: variance lambda >= 0, complex covariance tau with
// |tau - lambda| <= lambda, and the (a, b, theta) representative realizing
// them via lambda = a^2 + b^2, tau = lambda - e^{2 i theta} (a^2 - b^2).
// sigmas holds the per-process time scales sigma_l > 0.
struct ModelParams {
    double lambda = 1.0;
    Complex tau = 0.0;
    double theta = 0.0;
    double a = 1.0;
    double b = 0.0;
    std::vector<double> sigmas = {1.0};

    int process_count() const { return static_cast<int>(sigmas.size()); }
};

// Solves (a, b, theta) from (lambda, tau) with the canonical branch
// theta = arg(lambda - tau) / 2 in (-pi/2, pi/2], a^2 = (lambda + |lambda - tau|)/2,
// b^2 = (lambda - |lambda - tau|)/2; theta = 0 and a = b when tau = lambda.
// Throws AdmissibilityError when lambda < 0 or |tau - lambda| > lambda,
// ScaleError when some sigma_l <= 0.
ModelParams validate_params(double lambda, Complex tau,
                            const std::vector<double>& sigmas);

// Builds the parameter set from the (a, b, theta) representation.
// Throws DegenerateError when a = b = 0, ScaleError on bad sigmas.
ModelParams params_from_abtheta(double a, double b, double theta,
                                const std::vector<double>& sigmas);

}  // namespace gltau
