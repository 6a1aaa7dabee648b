#pragma once

#include <array>

#include "gltau/sde.hpp"

namespace gltau {

// Quadratic-covariation cell for a pair of variants (eps1, eps2): the
// one-step covariation d<G^eps1, G^eps2> # V equals
// coefficient * template(state, V) dt.
struct BracketCell {
    Variant eps1 = Variant::Id;
    Variant eps2 = Variant::Id;

    // sigma^2 (tau - lambda), sigma^2 lambda, ... depending on the cell.
    Complex coefficient(const ModelParams& params, double sigma) const;

    // Matrix shape the covariation is proportional to, with the scalar
    // coefficient stripped.
    Matrix shape(const ProcessMatrices& state, const Matrix& v) const;
};

struct BracketEstimate {
    Complex fitted;
    double se = 0.0;
    Complex expected;
    int reps = 0;
};

// Monte-Carlo oracle for one cell: simulates to a generic state, draws
// one-step martingale increments of the four processes from it, and
// least-squares fits the scalar in front of the cell's template. The
// martingale parts use the SDE diffusion coefficients frozen at the state,
// so the estimator is unbiased in dt.
BracketEstimate estimate_bracket(Variant eps1, Variant eps2,
                                 const ModelParams& params, int n, double dt,
                                 int reps, Rng& rng);

// All 16 cells sharing the base state and the increment draws.
std::array<BracketEstimate, 16> estimate_bracket_all(const ModelParams& params,
                                                     int n, double dt, int reps,
                                                     Rng& rng);

}  // namespace gltau
