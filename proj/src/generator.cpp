#include "gltau/generator.hpp"

#include <algorithm>
#include <set>

#include "gltau/errors.hpp"
#include "gltau/ode.hpp"

namespace gltau {

namespace {

struct PairRule {
    Complex coeff;
    std::vector<Variant> first;   // Q1 letters / merge letters between A and D
    std::vector<Variant> second;  // Q2 letters / merge letters between C and B
};

// Substitution rule for a matching letter pair (eps, eps'), shared by the
// trace-splitting term of Delta and the trace-merging term of DeltaTilde:
// both tables come from the same quadratic-covariation cell, so the
// coefficient and the inserted letters coincide. The split builds
// tr(A first C') tr(second B') and the merge builds tr(A first D C second B).
PairRule pair_rule(Variant e1, Variant e2, const ModelParams& mp) {
    const Complex ct = mp.tau - mp.lambda;
    const Complex cb = std::conj(mp.tau) - mp.lambda;
    const Complex l = mp.lambda;
    using V = Variant;
    switch (4 * static_cast<int>(e1) + static_cast<int>(e2)) {
        case 4 * 0 + 0: return {ct, {V::Id}, {V::Id}};
        case 4 * 0 + 1: return {l, {V::Id, V::Star}, {}};
        case 4 * 0 + 2: return {-ct, {}, {}};
        case 4 * 0 + 3: return {-l, {V::Id}, {V::InvStar}};
        case 4 * 1 + 0: return {l, {}, {V::Id, V::Star}};
        case 4 * 1 + 1: return {cb, {V::Star}, {V::Star}};
        case 4 * 1 + 2: return {-l, {V::Inv}, {V::Star}};
        case 4 * 1 + 3: return {-cb, {}, {V::InvStar, V::Star}};
        case 4 * 2 + 0: return {-ct, {}, {}};
        case 4 * 2 + 1: return {-l, {V::Star}, {V::Inv}};
        case 4 * 2 + 2: return {ct, {V::Inv}, {V::Inv}};
        case 4 * 2 + 3: return {l, {}, {V::InvStar, V::Inv}};
        case 4 * 3 + 0: return {-l, {V::InvStar}, {V::Id}};
        case 4 * 3 + 1: return {-cb, {}, {}};
        case 4 * 3 + 2: return {l, {V::InvStar, V::Inv}, {}};
        case 4 * 3 + 3: return {cb, {V::InvStar}, {V::InvStar}};
    }
    throw ContractError("unreachable pair rule");
}

void require_pure(const TraceProduct& t) {
    if (t.has_det())
        throw UnsupportedLetterError(
            "the generator acts on pure trace polynomials; deterministic "
            "letters are only legal in sample evaluation");
}

double sigma_for(const ModelParams& mp, int process) {
    if (process < 0 || process >= static_cast<int>(mp.sigmas.size()))
        throw IndexError("process index " + std::to_string(process + 1) +
                         " has no sigma (arity " +
                         std::to_string(mp.sigmas.size()) + ")");
    return mp.sigmas[static_cast<std::size_t>(process)];
}

}  // namespace

TracePolynomial apply_delta(const TracePolynomial& p, const ModelParams& params) {
    const Complex ct = params.tau - params.lambda;
    const Complex cb = std::conj(params.tau) - params.lambda;

    TracePolynomial out;
    for (const auto& [term, coeff] : p.terms()) {
        require_pure(term);

        // Per-letter drift sum.
        Complex diag = 0.0;
        for (const Word& w : term.factors) {
            for (const Letter& l : w.letters) {
                const double s2 = sigma_for(params, l.index);
                const Complex drift =
                    (l.variant == Variant::Id || l.variant == Variant::Inv) ? ct : cb;
                diag += 0.5 * s2 * s2 * drift;
            }
        }
        if (diag != Complex(0.0)) out.add(term, coeff * diag);

        // Trace-splitting pair sum within each factor.
        for (std::size_t fi = 0; fi < term.factors.size(); ++fi) {
            const Word& m = term.factors[fi];
            const int len = m.degree();
            for (int k = 0; k < len; ++k) {
                for (int kp = k + 1; kp < len; ++kp) {
                    const Letter& lk = m.letters[k];
                    const Letter& lkp = m.letters[kp];
                    if (lk.index != lkp.index) continue;
                    const double sigma = sigma_for(params, lk.index);
                    const PairRule cell = pair_rule(lk.variant, lkp.variant, params);

                    Word outer;
                    outer.letters.assign(m.letters.begin(), m.letters.begin() + k);
                    for (Variant v : cell.first)
                        outer.letters.push_back(Letter::process(lk.index, v));
                    outer.letters.insert(outer.letters.end(),
                                         m.letters.begin() + kp + 1, m.letters.end());

                    Word inner;
                    for (Variant v : cell.second)
                        inner.letters.push_back(Letter::process(lk.index, v));
                    inner.letters.insert(inner.letters.end(),
                                         m.letters.begin() + k + 1,
                                         m.letters.begin() + kp);

                    std::vector<Word> factors;
                    factors.reserve(term.factors.size() + 1);
                    for (std::size_t fj = 0; fj < term.factors.size(); ++fj)
                        if (fj != fi) factors.push_back(term.factors[fj]);
                    factors.push_back(std::move(outer));
                    factors.push_back(std::move(inner));

                    out.add(TraceProduct(std::move(factors)),
                            coeff * sigma * sigma * cell.coeff);
                }
            }
        }
    }
    out.prune();
    return out;
}

TracePolynomial apply_delta_tilde(const TracePolynomial& p,
                                  const ModelParams& params) {
    TracePolynomial out;
    for (const auto& [term, coeff] : p.terms()) {
        require_pure(term);
        const auto& fs = term.factors;
        for (std::size_t fi = 0; fi + 1 < fs.size(); ++fi) {
            for (std::size_t fj = fi + 1; fj < fs.size(); ++fj) {
                const Word& mi = fs[fi];
                const Word& mj = fs[fj];
                for (int k = 0; k < mi.degree(); ++k) {
                    for (int kp = 0; kp < mj.degree(); ++kp) {
                        const Letter& lk = mi.letters[k];
                        const Letter& lkp = mj.letters[kp];
                        if (lk.index != lkp.index) continue;
                        const double sigma = sigma_for(params, lk.index);
                        const PairRule cell =
                            pair_rule(lk.variant, lkp.variant, params);

                        // tr(A first D C second B)
                        Word merged;
                        merged.letters.assign(mi.letters.begin(),
                                              mi.letters.begin() + k);  // A
                        for (Variant v : cell.first)
                            merged.letters.push_back(Letter::process(lk.index, v));
                        merged.letters.insert(merged.letters.end(),
                                              mj.letters.begin() + kp + 1,
                                              mj.letters.end());  // D
                        merged.letters.insert(merged.letters.end(),
                                              mj.letters.begin(),
                                              mj.letters.begin() + kp);  // C
                        for (Variant v : cell.second)
                            merged.letters.push_back(Letter::process(lk.index, v));
                        merged.letters.insert(merged.letters.end(),
                                              mi.letters.begin() + k + 1,
                                              mi.letters.end());  // B

                        std::vector<Word> factors;
                        factors.reserve(fs.size() - 1);
                        for (std::size_t f = 0; f < fs.size(); ++f)
                            if (f != fi && f != fj) factors.push_back(fs[f]);
                        factors.push_back(std::move(merged));

                        out.add(TraceProduct(std::move(factors)),
                                coeff * sigma * sigma * cell.coeff);
                    }
                }
            }
        }
    }
    out.prune();
    return out;
}

namespace {

std::vector<Word> canonical_words(int p, int d) {
    std::set<Word> words;
    std::vector<Letter> current;
    // Iterative DFS over letter tuples of each length.
    for (int len = 1; len <= d; ++len) {
        std::vector<int> idx(static_cast<std::size_t>(len), 0);
        const int alphabet = 4 * p;
        while (true) {
            Word w;
            w.letters.reserve(static_cast<std::size_t>(len));
            for (int pos = 0; pos < len; ++pos) {
                const int a = idx[static_cast<std::size_t>(pos)];
                w.letters.push_back(
                    Letter::process(a / 4, static_cast<Variant>(a % 4)));
            }
            words.insert(canonicalize(w));
            int pos = len - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == alphabet - 1) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    std::vector<Word> out(words.begin(), words.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Emits every multiset of canonical words with total degree <= d.
template <typename Sink>
void enumerate_products(const std::vector<Word>& words, int d, Sink&& sink) {
    std::vector<Word> current;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        sink(current);
        for (std::size_t i = start; i < words.size(); ++i) {
            const int deg = words[i].degree();
            if (deg > remaining) break;  // words sorted by degree first
            current.push_back(words[i]);
            self(self, i, remaining - deg);
            current.pop_back();
        }
    };
    rec(rec, 0, d);
}

}  // namespace

Basis::Basis(int p, int d, std::size_t cap) : p_(p), d_(d) {
    if (p < 1) throw ContractError("arity must be >= 1");
    if (d < 0) throw ContractError("degree cap must be >= 0");
    const std::vector<Word> words = canonical_words(p, d);
    enumerate_products(words, d, [&](const std::vector<Word>& factors) {
        if (elements_.size() > cap)
            throw ResourceError("basis dimension exceeds basis_cap = " +
                                std::to_string(cap));
        TraceProduct t;
        t.factors = factors;  // already canonical, sorted construction order
        std::sort(t.factors.begin(), t.factors.end());
        elements_.push_back(std::move(t));
    });
    if (elements_.size() > cap)
        throw ResourceError("basis dimension exceeds basis_cap = " +
                            std::to_string(cap));
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
}

std::optional<std::size_t> Basis::index_of(const TraceProduct& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Basis::contains(const TracePolynomial& p) const {
    for (const auto& [term, coeff] : p.terms())
        if (!index_.contains(term)) return false;
    return true;
}

Eigen::VectorXcd Basis::coefficients(const TracePolynomial& p) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size()));
    for (const auto& [term, coeff] : p.terms()) {
        const auto idx = index_of(term);
        if (!idx)
            throw ContractError("polynomial term " + term.to_string() +
                                " outside the basis span (p=" + std::to_string(p_) +
                                ", d=" + std::to_string(d_) + ")");
        v[static_cast<Eigen::Index>(*idx)] = coeff;
    }
    return v;
}

std::size_t basis_dimension(int p, int d, std::size_t cap) {
    const std::vector<Word> words = canonical_words(p, d);
    std::size_t count = 0;
    enumerate_products(words, d, [&](const std::vector<Word>&) {
        if (++count > cap)
            throw ResourceError("basis dimension exceeds basis_cap = " +
                                std::to_string(cap));
    });
    return count;
}

GeneratorOperator::GeneratorOperator(int p, int d, const ModelParams& params,
                                     int n_or_free)
    : basis_(p, d), params_(params), n_(n_or_free) {
    if (n_or_free != kFreeDimension && n_or_free < 1)
        throw ContractError("dimension must be >= 1 or kFreeDimension");
    if (static_cast<int>(params.sigmas.size()) < p)
        throw ContractError("params.sigmas shorter than arity p");
    c_ = n_or_free == kFreeDimension
             ? 0.0
             : 1.0 / (static_cast<double>(n_or_free) * static_cast<double>(n_or_free));

    const Eigen::Index dim = static_cast<Eigen::Index>(basis_.size());
    std::vector<Eigen::Triplet<Complex>> trip_d, trip_t;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        TracePolynomial pj;
        pj.add(basis_[j], 1.0);
        const int src_degree = basis_[j].total_degree();

        for (const auto& [term, coeff] : apply_delta(pj, params_).terms()) {
            if (term.total_degree() > src_degree)
                throw ClosureError("Delta image degree grew from " +
                                   std::to_string(src_degree) + ": " + term.to_string());
            const auto idx = basis_.index_of(term);
            if (!idx) throw ClosureError("Delta image left E_d: " + term.to_string());
            trip_d.emplace_back(static_cast<Eigen::Index>(*idx),
                                static_cast<Eigen::Index>(j), coeff);
        }
        for (const auto& [term, coeff] : apply_delta_tilde(pj, params_).terms()) {
            if (term.total_degree() > src_degree)
                throw ClosureError("DeltaTilde image degree grew from " +
                                   std::to_string(src_degree) + ": " + term.to_string());
            const auto idx = basis_.index_of(term);
            if (!idx)
                throw ClosureError("DeltaTilde image left E_d: " + term.to_string());
            trip_t.emplace_back(static_cast<Eigen::Index>(*idx),
                                static_cast<Eigen::Index>(j), coeff);
        }
    }
    delta_.resize(dim, dim);
    delta_tilde_.resize(dim, dim);
    delta_.setFromTriplets(trip_d.begin(), trip_d.end());
    delta_tilde_.setFromTriplets(trip_t.begin(), trip_t.end());
    delta_t_ = delta_.transpose();
    delta_tilde_t_ = delta_tilde_.transpose();
}

void GeneratorOperator::apply(const Eigen::VectorXcd& v, Eigen::VectorXcd& y) const {
    y.noalias() = delta_ * v;
    if (c_ != 0.0) y.noalias() += c_ * (delta_tilde_ * v);
}

void GeneratorOperator::apply_transpose(const Eigen::VectorXcd& v,
                                        Eigen::VectorXcd& y) const {
    y.noalias() = delta_t_ * v;
    if (c_ != 0.0) y.noalias() += c_ * (delta_tilde_t_ * v);
}

Complex expectation_trace(const TracePolynomial& p, double t,
                          const GeneratorOperator& op) {
    if (t < 0.0) throw ContractError("time must be >= 0");
    Eigen::VectorXcd v = op.basis().coefficients(p);
    if (t > 0.0) {
        integrate_ode(
            [&op](const Eigen::VectorXcd& x, Eigen::VectorXcd& dx) {
                op.apply(x, dx);
            },
            v, t, kExpmTol);
    }
    // Every basis element evaluates to 1 at the identity.
    return v.sum();
}

Eigen::VectorXcd expectation_trace_all(double t, const GeneratorOperator& op) {
    Eigen::VectorXcd w =
        Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(op.basis().size()));
    if (t > 0.0) {
        integrate_ode(
            [&op](const Eigen::VectorXcd& x, Eigen::VectorXcd& dx) {
                op.apply_transpose(x, dx);
            },
            w, t, kExpmTol);
    }
    return w;
}

}  // namespace gltau
