#pragma once

#include "ortho/schensted.hpp"

namespace ortho {

// x triangle c: x is not <= the greatest letter of c.
bool triangle(Letter x, const SpinColumn& c);

struct SpinSplit {
    SpinColumn r;
    SpinColumn l;
};

// S^B on column readings: the pair (rc, lc) of spin columns with
// S^B(w(C)) = rc (x) lc. Requires 1 <= h(C) <= n.
SpinSplit spin_split_b(const Column& c);

// S_n^D / S_{n-1}^D, selected by `variant` (the index of the Lambda).
SpinSplit spin_split_d(const Column& c, SpinVariant variant);

// R6: c x == c' when x triangle c (the spin column of weight wt(c)+wt(x)).
SpinColumn apply_r6(const SpinColumn& c, Letter x);

// R7: c x == x' c' when not (x triangle c).
std::pair<Letter, SpinColumn> apply_r7(const SpinColumn& c, Letter x);

// Inverts R8: the admissible column C (possibly empty) with
// S(w(C)) = r (x) l, if the pair is in the image of an S map.
std::optional<Column> invert_spin_pair(const SpinColumn& r, const SpinColumn& l);

struct SpinTableau {
    SpinColumn spin;
    Tabloid body;
    bool operator==(const SpinTableau&) const = default;
};

GWord reading(const SpinTableau& st);
bool is_spin_tableau(const SpinTableau& st);

// P-symbol on the generalized alphabet: a plain tableau (no spin column
// left) or a spin tableau.
struct GeneralizedTableau {
    std::optional<SpinColumn> spin;
    Tabloid body;
    bool operator==(const GeneralizedTableau&) const = default;
};

GWord reading(const GeneralizedTableau& gt);
Shape shape_of(const GeneralizedTableau& gt);

GeneralizedTableau generalized_p_symbol(const GWord& w);
bool generalized_congruent(const GWord& a, const GWord& b);
std::vector<Shape> generalized_q_symbol(const GWord& w);

}  // namespace ortho
