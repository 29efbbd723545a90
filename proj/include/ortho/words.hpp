#pragma once

#include <optional>
#include <variant>

#include "ortho/alphabet.hpp"

namespace ortho {

// A vertex of the tensor power of the vector representation, read left to
// right as u_1 u_2 ... u_l.
struct Word {
    LieType type;
    std::vector<Letter> letters;

    explicit Word(LieType t) : type(t) {}
    Word(LieType t, std::vector<Letter> ls);
    std::size_t size() const { return letters.size(); }
    bool operator==(const Word&) const = default;
};

// A spin column of height n: one of each absolute value 1..n, each either
// barred or unbarred. Bit k-1 of `mask` set means kbar is present.
struct SpinColumn {
    LieType type;
    std::uint64_t mask = 0;

    SpinColumn(LieType t, std::uint64_t m);
    // Reading from top to bottom (increasing in the alphabet order).
    std::vector<Letter> letters() const;
    bool contains(Letter x) const;
    Letter greatest() const;
    int barred_count() const;
    bool operator==(const SpinColumn&) const = default;
};

// The highest weight spin columns: c_p contains exactly the unbarred letters
// 1..p (so c_n is the all-unbarred one and c_0 the all-barred one).
SpinColumn spin_cp(LieType t, int p);
SpinColumn spin_from_letters(LieType t, const std::vector<Letter>& ls);
std::vector<SpinColumn> all_spin_columns(LieType t);

// For type D, which spin crystal a column belongs to.
enum class SpinVariant { LambdaN, LambdaNMinus1 };
SpinVariant spin_variant(const SpinColumn& c);

using GLetter = std::variant<Letter, SpinColumn>;

// A word over the generalized alphabet (letters and spin columns).
struct GWord {
    LieType type;
    std::vector<GLetter> elems;

    explicit GWord(LieType t) : type(t) {}
    GWord(LieType t, std::vector<GLetter> es) : type(t), elems(std::move(es)) {}
    std::size_t size() const { return elems.size(); }
    bool operator==(const GWord&) const = default;
};

GWord to_gword(const Word& w);
// Fails if any element is a spin column.
Word to_word(const GWord& w);
GWord spin_to_gword(const SpinColumn& c);

// Weights in the epsilon basis, stored doubled so that spin column weights
// (half-integers) stay exact.
struct WeightVec {
    std::vector<int> doubled;
    bool operator==(const WeightVec&) const = default;
    WeightVec& operator+=(const WeightVec& o);
};

std::vector<int> d_vector(const Word& w);
WeightVec weight_of(const Word& w);
WeightVec weight_of(const GWord& w);
WeightVec weight_of_letter(LieType t, Letter x);
WeightVec weight_of_spin(const SpinColumn& c);

// Coefficients on the fundamental-ish weights omega_1..omega_n; for type D a
// strictly negative d_n switches to the omega_n-bar presentation.
struct OmegaCoords {
    std::vector<int> coeffs;  // on omega_1..omega_{n-1}, then omega_n or omega_n-bar
    bool uses_bar_n = false;
    bool operator==(const OmegaCoords&) const = default;
};
OmegaCoords omega_coordinates(const Word& w);

std::string format_word(const Word& w);
std::string format_gword(const GWord& w);
std::string format_spin(const SpinColumn& c);

Word parse_word(LieType t, const std::string& text);
GWord parse_gword(LieType t, const std::string& text);

}  // namespace ortho
