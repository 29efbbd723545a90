#pragma once

#include "ortho/tableaux.hpp"

namespace ortho {

// One applicable rewriting instance: replacing `before` by `after` at
// `pos` (0-based) reproduces the rewritten word.
struct Rewrite {
    std::string rule;  // "R1", ..., "R5"
    bool forward;      // displayed left-to-right direction
    std::size_t pos;
    std::vector<Letter> before;
    std::vector<Letter> after;
    bool operator==(const Rewrite&) const = default;
};

std::vector<Rewrite> match_relations(const Word& w);
Word apply_rewrite(const Word& w, const Rewrite& rw);

// Forward instances of R1-R4 on a single 3-letter window.
std::vector<std::vector<Letter>> window_rewrites(LieType t, const std::vector<Letter>& win);

// Is w a minimally non-admissible column word (every strict factor
// admissible)? These are exactly the left sides of R5.
bool is_contractible_column_word(LieType t, const std::vector<Letter>& cells);

// R5: erase the offending pair (z, zbar), a 0, or a consecutive (n, nbar).
Word contract_column(const Word& column_word);

struct ColumnInsert {
    // Exactly one member is set.
    std::optional<Column> merged;                    // w(C)x was a column word
    std::optional<std::pair<Column, Letter>> bumped; // (C', x')
};

ColumnInsert insert_into_column(Letter x, const Column& c);

Tabloid insert_into_tableau(Letter x, const Tabloid& t);

Tabloid p_symbol(const Word& w);

// w1 == w2 in the plactic monoid, decided by P-symbol equality.
bool congruent(const Word& a, const Word& b);

}  // namespace ortho
