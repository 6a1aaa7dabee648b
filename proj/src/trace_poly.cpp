#include "gltau/trace_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gltau/errors.hpp"

namespace gltau {

TraceProduct::TraceProduct(std::vector<Word> fs) : factors(std::move(fs)) {
    for (Word& w : factors) w = canonicalize(w);
    // Normalized traces of the empty word are identically 1.
    factors.erase(std::remove_if(factors.begin(), factors.end(),
                                 [](const Word& w) { return w.empty(); }),
                  factors.end());
    std::sort(factors.begin(), factors.end());
}

int TraceProduct::total_degree() const {
    int d = 0;
    for (const Word& w : factors) d += w.degree();
    return d;
}

bool TraceProduct::has_det() const {
    return std::any_of(factors.begin(), factors.end(),
                       [](const Word& w) { return w.has_det(); });
}

std::string TraceProduct::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += " ";
        s += "tr(" + factors[i].to_string() + ")";
    }
    return s;
}

TraceProduct TraceProduct::single(const Word& w) {
    return TraceProduct(std::vector<Word>{w});
}

TracePolynomial TracePolynomial::constant(Complex c) {
    TracePolynomial p;
    p.add(TraceProduct{}, c);
    return p;
}

TracePolynomial TracePolynomial::trace(const Word& w, Complex coeff) {
    TracePolynomial p;
    p.add(TraceProduct::single(w), coeff);
    return p;
}

void TracePolynomial::add(const TraceProduct& term, Complex coeff) {
    auto [it, inserted] = terms_.try_emplace(term, coeff);
    if (!inserted) {
        it->second += coeff;
        if (std::abs(it->second) < kCoeffPrune) terms_.erase(it);
    } else if (std::abs(coeff) < kCoeffPrune) {
        terms_.erase(it);
    }
}

void TracePolynomial::prune(double threshold) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < threshold)
            it = terms_.erase(it);
        else
            ++it;
    }
}

int TracePolynomial::degree() const {
    int d = 0;
    for (const auto& [term, coeff] : terms_) d = std::max(d, term.total_degree());
    return d;
}

bool TracePolynomial::has_det() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.has_det(); });
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& other) {
    if (this == &other) {
        *this *= Complex(2.0);
        return *this;
    }
    for (const auto& [term, coeff] : other.terms_) add(term, coeff);
    return *this;
}

TracePolynomial& TracePolynomial::operator*=(Complex scalar) {
    if (scalar == Complex(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [term, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string TracePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [term, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.real();
        if (coeff.imag() != 0.0) os << (coeff.imag() > 0 ? "+" : "") << coeff.imag() << "i";
        os << ")*" << term.to_string();
    }
    return os.str();
}

Complex evaluate_at_identity(const TracePolynomial& p) {
    Complex sum = 0.0;
    for (const auto& [term, coeff] : p.terms()) sum += coeff;
    return sum;
}

Complex evaluate_on_sample(const TracePolynomial& p, const GlSample& sample) {
    const double n = static_cast<double>(sample.n());
    Complex sum = 0.0;
    for (const auto& [term, coeff] : p.terms()) {
        Complex prod = coeff;
        for (const Word& w : term.factors)
            prod *= evaluate_word(w, sample).trace() / n;
        sum += prod;
    }
    return sum;
}

}  // namespace gltau
