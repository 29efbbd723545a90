#pragma once

#include "ortho/words.hpp"

namespace ortho {

// A column-shaped filling, read top to bottom. Type B columns strictly
// increase except that 0 may repeat; type D columns satisfy x_{i+1} !<= x_i,
// so n and nbar may alternate.
struct Column {
    LieType type;
    std::vector<Letter> cells;

    explicit Column(LieType t) : type(t) {}
    Column(LieType t, std::vector<Letter> cs);
    int height() const { return (int)cells.size(); }
    Word reading() const { return Word(type, cells); }
    bool operator==(const Column&) const = default;
};

bool is_column_word(LieType t, const std::vector<Letter>& cells);

// N(z): letters x of C with x <= z or x >= zbar. The letter 0 satisfies
// neither, so it never counts.
int n_count(const Column& c, Letter z);

bool is_admissible(const Column& c);
bool is_admissible_word(LieType t, const std::vector<Letter>& cells);

// Type D -> type B: each factor (nbar n) in reading order becomes (0 0).
Column hat(const Column& c);

struct SplitPair {
    Column l;
    Column r;
};

std::optional<SplitPair> try_split(const Column& c);
// Throws CannotSplitError exactly when the column is not admissible.
SplitPair split_column(const Column& c);

// Recovers the original column from a split pair.
Column unsplit(const Column& l, const Column& r);

// For a height-n admissible type-D column: which of B(v_{omega_n}) and
// B(v_{omega_n bar}) its reading belongs to, by the parity rule.
enum class HeightNClass { OmegaN, OmegaNBar };
HeightNClass column_membership(const Column& c);

// All valid columns of the given height (for desk-scale enumeration).
std::vector<Column> all_columns(LieType t, int height);
std::vector<Column> all_admissible_columns(LieType t, int height);

}  // namespace ortho
