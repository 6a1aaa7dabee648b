#include "gltau/words.hpp"

#include <algorithm>

namespace gltau {

Variant variant_adjoint(Variant v) {
    switch (v) {
        case Variant::Id: return Variant::Star;
        case Variant::Star: return Variant::Id;
        case Variant::Inv: return Variant::InvStar;
        case Variant::InvStar: return Variant::Inv;
    }
    return Variant::Id;
}

Letter letter_adjoint(const Letter& l) {
    Letter out = l;
    out.variant = variant_adjoint(l.variant);
    return out;
}

std::string letter_to_string(const Letter& l) {
    std::string s = (l.kind == Letter::Kind::Process) ? "g" : "a";
    s += std::to_string(l.index + 1);
    switch (l.variant) {
        case Variant::Id: break;
        case Variant::Star: s += "*"; break;
        case Variant::Inv: s += "^-1"; break;
        case Variant::InvStar: s += "^-1*"; break;
    }
    return s;
}

bool Word::has_det() const {
    return std::any_of(letters.begin(), letters.end(),
                       [](const Letter& l) { return l.kind == Letter::Kind::Det; });
}

Word Word::adjoint() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        out.letters.push_back(letter_adjoint(*it));
    return out;
}

std::string Word::to_string() const {
    if (letters.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += " ";
        s += letter_to_string(letters[i]);
    }
    return s;
}

Word canonicalize(const Word& w) {
    const std::size_t m = w.letters.size();
    if (m <= 1) return w;
    std::size_t best = 0;
    for (std::size_t start = 1; start < m; ++start) {
        for (std::size_t k = 0; k < m; ++k) {
            const Letter& cand = w.letters[(start + k) % m];
            const Letter& cur = w.letters[(best + k) % m];
            if (cand < cur) {
                best = start;
                break;
            }
            if (cur < cand) break;
        }
    }
    if (best == 0) return w;
    Word out;
    out.letters.reserve(m);
    for (std::size_t k = 0; k < m; ++k) out.letters.push_back(w.letters[(best + k) % m]);
    return out;
}

}  // namespace gltau
