#pragma once

#include <Eigen/Dense>

#include "gltau/params.hpp"

namespace gltau {

// Scratch buffers for expm so per-step calls in the integrator loop do not
// reallocate. All members are resized lazily to the argument's dimension.
struct ExpmWorkspace {
    Eigen::MatrixXcd a2, a4, a6, u, v, w, x;
};

// Matrix exponential by scaling-and-squaring with diagonal Pade
// approximants, degree {3, 5, 7, 9, 13} selected from the 1-norm
// (backward error below 1e-15, well inside the 1e-12 contract).
// Diagonal degrees make exp of a skew-Hermitian argument unitary up to
// rounding, which the Geometric scheme relies on.
void expm_into(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& out, ExpmWorkspace& ws);

// exp(a) and exp(-a) from a single Pade evaluation: the diagonal
// approximant satisfies r(-a) = r(a)^-1, so both directions come from the
// same numerator/denominator pair with the two solve sides swapped.
void expm_pair_into(const Eigen::MatrixXcd& a, Eigen::MatrixXcd& fwd,
                    Eigen::MatrixXcd& inv, ExpmWorkspace& ws);

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace gltau
