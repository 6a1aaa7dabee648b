#pragma once

#include <Eigen/SparseCore>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "gltau/trace_poly.hpp"

namespace gltau {

inline constexpr std::size_t kBasisCap = 200000;
inline constexpr double kExpmTol = 1e-12;

// Sentinel dimension for the free (N = infinity) generator.
inline constexpr int kFreeDimension = 0;

// First-order part of the generator: the per-letter drift sum plus the
// trace-splitting pair sum with the Q1/Q2 substitution tables. Rejects
// deterministic letters.
TracePolynomial apply_delta(const TracePolynomial& p, const ModelParams& params);

// Second-order part: merges two trace factors along every matching-process
// letter pair using the 16 merge rules.
TracePolynomial apply_delta_tilde(const TracePolynomial& p, const ModelParams& params);

// Indexed basis of E_d: all TraceProducts of total degree <= d over the 4p
// letters of p processes, canonical and deterministically ordered.
class Basis {
public:
    Basis(int p, int d, std::size_t cap = kBasisCap);

    int arity() const { return p_; }
    int degree_cap() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const TraceProduct& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<TraceProduct>& elements() const { return elements_; }

    std::optional<std::size_t> index_of(const TraceProduct& t) const;
    bool contains(const TracePolynomial& p) const;

    // Coefficient vector of p in this basis; throws if p leaves the span.
    Eigen::VectorXcd coefficients(const TracePolynomial& p) const;

private:
    int p_;
    int d_;
    std::vector<TraceProduct> elements_;
    std::map<TraceProduct, std::size_t> index_;
};

// Counts the basis dimension without materializing it (dry-run resource
// prediction).
std::size_t basis_dimension(int p, int d, std::size_t cap = kBasisCap);

// Sparse representation of Delta + c * DeltaTilde on E_d, c = 1/N^2 for
// finite N and 0 for the free limit. Columns are images of basis elements;
// construction asserts the filtration (ClosureError on escape, which would
// be an implementation bug).
class GeneratorOperator {
public:
    GeneratorOperator(int p, int d, const ModelParams& params, int n_or_free);

    const Basis& basis() const { return basis_; }
    double c() const { return c_; }
    int dimension_n() const { return n_; }
    const ModelParams& params() const { return params_; }

    const Eigen::SparseMatrix<Complex>& delta_matrix() const { return delta_; }
    const Eigen::SparseMatrix<Complex>& delta_tilde_matrix() const { return delta_tilde_; }

    // y = (Delta + c DeltaTilde) v
    void apply(const Eigen::VectorXcd& v, Eigen::VectorXcd& y) const;
    // y = (Delta + c DeltaTilde)^T v, the flow acting on linear functionals.
    void apply_transpose(const Eigen::VectorXcd& v, Eigen::VectorXcd& y) const;

private:
    Basis basis_;
    ModelParams params_;
    int n_;
    double c_;
    Eigen::SparseMatrix<Complex> delta_;
    Eigen::SparseMatrix<Complex> delta_tilde_;
    Eigen::SparseMatrix<Complex> delta_t_;
    Eigen::SparseMatrix<Complex> delta_tilde_t_;
};

// (e^{tL} P)(1): coefficient-vector ODE v' = L v integrated by an adaptive
// Dormand-Prince pair to kExpmTol, then evaluated at the identity.
Complex expectation_trace(const TracePolynomial& p, double t,
                          const GeneratorOperator& op);

// Exact expectations of every basis element at once: integrates the
// transpose flow applied to the evaluate-at-identity functional, so entry j
// is (e^{tL} basis_j)(1).
Eigen::VectorXcd expectation_trace_all(double t, const GeneratorOperator& op);

}  // namespace gltau
