#pragma once

#include <string>
#include <vector>

#include "gltau/sde.hpp"

namespace gltau {

// Matrix polynomial P = sum of coefficient * word (no traces); the
// quantity of interest downstream is the self-adjoint evaluation PP*.
struct MatrixPolynomial {
    std::vector<std::pair<Complex, Word>> terms;

    MatrixPolynomial() = default;

    void add(Complex coeff, Word w) { terms.emplace_back(coeff, std::move(w)); }

    int degree() const;
    int max_process_index() const;  // -1 when no process letters
    int max_det_index() const;      // -1 when no deterministic letters

    // P evaluated on a sample by plain substitution.
    Matrix evaluate(const GlSample& sample) const;

    std::string to_string() const;
};

// Alias matching the domain vocabulary: the polynomial whose evaluation
// target is PP*.
using SelfAdjointPoly = MatrixPolynomial;

// M = P(sample); returns (M M^* + (M M^*)^adj) / 2, Hermitian by
// construction.
Matrix eval_pp_star(const SelfAdjointPoly& poly, const GlSample& sample);

}  // namespace gltau
