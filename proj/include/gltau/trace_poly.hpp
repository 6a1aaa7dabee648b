#pragma once

#include <map>
#include <string>
#include <vector>

#include "gltau/params.hpp"
#include "gltau/sde.hpp"
#include "gltau/words.hpp"

namespace gltau {

// Terms with coefficient magnitude below this are dropped after every
// operator application.
inline constexpr double kCoeffPrune = 1e-15;

// Product tr(M_1) ... tr(M_k) of formal normalized traces: a multiset of
// canonical words, stored sorted. The empty multiset is the constant 1;
// empty-word factors collapse to it since tr is normalized.
struct TraceProduct {
    std::vector<Word> factors;

    TraceProduct() = default;
    explicit TraceProduct(std::vector<Word> fs);

    int total_degree() const;
    bool has_det() const;
    std::string to_string() const;

    static TraceProduct single(const Word& w);

    friend bool operator==(const TraceProduct&, const TraceProduct&) = default;
    friend std::strong_ordering operator<=>(const TraceProduct& a,
                                            const TraceProduct& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() <=> b.total_degree();
        return a.factors <=> b.factors;
    }
};

// Finite linear combination of TraceProducts. The map keeps a fixed total
// order so iteration (and thus all downstream output) is deterministic.
class TracePolynomial {
public:
    using Terms = std::map<TraceProduct, Complex>;

    TracePolynomial() = default;
    static TracePolynomial constant(Complex c);
    static TracePolynomial trace(const Word& w, Complex coeff = 1.0);

    void add(const TraceProduct& term, Complex coeff);
    void prune(double threshold = kCoeffPrune);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    bool has_det() const;

    TracePolynomial& operator+=(const TracePolynomial& other);
    TracePolynomial& operator*=(Complex scalar);

    std::string to_string() const;

private:
    Terms terms_;
};

// P evaluated with every letter set to the identity: each trace factor is 1,
// so the value is the coefficient sum.
Complex evaluate_at_identity(const TracePolynomial& p);

// P evaluated on a realized sample: products of normalized traces of the
// factor words. Throws on arity mismatch.
Complex evaluate_on_sample(const TracePolynomial& p, const GlSample& sample);

}  // namespace gltau
