#include "gltau/matrix_poly.hpp"

#include <algorithm>

#include "gltau/errors.hpp"

namespace gltau {

int MatrixPolynomial::degree() const {
    int d = 0;
    for (const auto& [c, w] : terms) d = std::max(d, w.degree());
    return d;
}

int MatrixPolynomial::max_process_index() const {
    int m = -1;
    for (const auto& [c, w] : terms)
        for (const Letter& l : w.letters)
            if (l.is_process()) m = std::max(m, static_cast<int>(l.index));
    return m;
}

int MatrixPolynomial::max_det_index() const {
    int m = -1;
    for (const auto& [c, w] : terms)
        for (const Letter& l : w.letters)
            if (!l.is_process()) m = std::max(m, static_cast<int>(l.index));
    return m;
}

Matrix MatrixPolynomial::evaluate(const GlSample& sample) const {
    const int n = sample.n();
    Matrix out = Matrix::Zero(n, n);
    for (const auto& [coeff, word] : terms) out += coeff * evaluate_word(word, sample);
    return out;
}

std::string MatrixPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        s += "(" + std::to_string(terms[i].first.real()) + ")";
        if (!terms[i].second.empty()) s += " " + terms[i].second.to_string();
    }
    return s;
}

Matrix eval_pp_star(const SelfAdjointPoly& poly, const GlSample& sample) {
    if (poly.max_process_index() >= sample.p())
        throw ArityError("polynomial uses process index beyond the sample arity");
    if (poly.max_det_index() >= static_cast<int>(sample.det.size()))
        throw ArityError("polynomial uses deterministic index beyond the sample");
    const Matrix m = poly.evaluate(sample);
    const Matrix h = m * m.adjoint();
    return 0.5 * (h + h.adjoint());
}

}  // namespace gltau
