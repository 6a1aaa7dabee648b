#pragma once

#include <Eigen/Dense>

#include "gltau/params.hpp"
#include "gltau/rng.hpp"

namespace gltau {

using Matrix = Eigen::MatrixXcd;

// Hermitian Brownian increment over a step of length dt, normalized so that
// E[(H)_ij (H)_kl] = (dt/N) delta_il delta_jk: real N(0, dt/N) on the
// diagonal, complex entries with E|h_ij|^2 = dt/N above it, mirrored by
// conjugation below.
Matrix sample_hermitian_increment(int n, double dt, Rng& rng);

// Rotated elliptic increment e^{i theta} (a dH + i b dHt) for independent
// Hermitian increments dH, dHt. Skips whichever of the two draws has a zero
// coefficient.
Matrix sample_elliptic_increment(const ModelParams& params, int n, double dt,
                                 Rng& rng);

}  // namespace gltau
