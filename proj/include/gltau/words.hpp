#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gltau {

// Variant of a letter: the four indeterminates X, X*, X^-1, X^-1,*
// attached to one process.
enum class Variant : std::uint8_t { Id = 0, Star = 1, Inv = 2, InvStar = 3 };

Variant variant_adjoint(Variant v);

// One letter of a word: either process letter X_l^eps (kind Process,
// 0-based index l) or a deterministic companion a_j / a_j* (kind Det,
// which only admits Id and Star).
struct Letter {
    enum class Kind : std::uint8_t { Process = 0, Det = 1 };

    Kind kind = Kind::Process;
    std::int16_t index = 0;
    Variant variant = Variant::Id;

    static Letter process(int idx, Variant v) {
        return Letter{Kind::Process, static_cast<std::int16_t>(idx), v};
    }
    static Letter det(int idx, Variant v) {
        return Letter{Kind::Det, static_cast<std::int16_t>(idx), v};
    }

    bool is_process() const { return kind == Kind::Process; }

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter letter_adjoint(const Letter& l);

// "g3^-1*", "a1*", ... (1-based indices, matching the text syntax).
std::string letter_to_string(const Letter& l);

// A word in the letters; degree = length. Words compare by (degree,
// lexicographic), the fixed total order used everywhere downstream.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int degree() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    bool has_det() const;

    // Adjoint: reverse the letters and star each one.
    Word adjoint() const;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() <=> b.letters.size();
        return a.letters <=> b.letters;
    }
};

// Canonical representative of the trace-cyclicity class: the
// lexicographically minimal cyclic rotation. Idempotent; no algebraic
// rewriting (X X^-1 is kept as-is).
Word canonicalize(const Word& w);

}  // namespace gltau
