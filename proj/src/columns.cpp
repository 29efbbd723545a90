#include "ortho/columns.hpp"

#include <algorithm>
#include <set>

namespace ortho {

bool is_column_word(LieType t, const std::vector<Letter>& cells) {
    for (Letter x : cells) {
        if (is_zero(x) && t.family == LieFamily::D) return false;
        if (!is_zero(x) && (abs_value(x) < 1 || abs_value(x) > t.rank)) return false;
    }
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (t.family == LieFamily::B) {
            if (is_zero(cells[i]) && is_zero(cells[i + 1])) continue;
            if (!letter_lt(t, cells[i], cells[i + 1])) return false;
        } else {
            // x_{i+1} !<= x_i: increasing or the incomparable pair {n, nbar}
            if (letter_le(t, cells[i + 1], cells[i])) return false;
        }
    }
    return true;
}

Column::Column(LieType t, std::vector<Letter> cs) : type(t), cells(std::move(cs)) {
    for (Letter x : cells) validate_letter(type, x);
    if (!is_column_word(type, cells))
        throw DomainError("not a valid column: " + format_word(Word(type, cells)));
}

int n_count(const Column& c, Letter z) {
    if (!is_unbarred(z)) throw DomainError("n_count expects an unbarred letter");
    validate_letter(c.type, z);
    int count = 0;
    for (Letter x : c.cells)
        if (letter_le(c.type, x, z) || letter_le(c.type, bar(z), x)) ++count;
    return count;
}

bool is_admissible_word(LieType t, const std::vector<Letter>& cells) {
    if (!is_column_word(t, cells)) return false;
    if ((int)cells.size() > t.rank) return false;
    Column c(t, cells);
    for (int z = 1; z <= t.rank; ++z) {
        bool has = false, has_bar = false;
        for (Letter x : cells) {
            if (x.v == z) has = true;
            if (x.v == -z) has_bar = true;
        }
        if (has && has_bar && n_count(c, unbarred(z)) > z) return false;
    }
    return true;
}

bool is_admissible(const Column& c) { return is_admissible_word(c.type, c.cells); }

Column hat(const Column& c) {
    if (c.type.family != LieFamily::D) throw DomainError("hat expects a type-D column");
    LieType tb = type_b(c.type.rank);
    std::vector<Letter> out;
    int n = c.type.rank;
    for (std::size_t i = 0; i < c.cells.size();) {
        if (i + 1 < c.cells.size() && c.cells[i].v == -n && c.cells[i + 1].v == n) {
            out.push_back(zero_letter);
            out.push_back(zero_letter);
            i += 2;
        } else {
            out.push_back(c.cells[i]);
            ++i;
        }
    }
    return Column(tb, out);
}

namespace {

// Splitting over B_n. For type D callers pass hat(C) and re-tag; the halves
// never contain 0 so they are valid over both alphabets.
std::optional<SplitPair> split_b(const Column& c) {
    LieType t = c.type;
    std::set<int> present;  // absolute values in C
    int zeros = 0;
    for (Letter x : c.cells) {
        if (is_zero(x)) ++zeros;
        else present.insert(abs_value(x));
    }
    // I_C: one 0 per occurrence first, then unbarred pair letters decreasing.
    std::vector<int> I(zeros, 0);
    for (int z = t.rank; z >= 1; --z) {
        bool has = false, has_bar = false;
        for (Letter x : c.cells) {
            if (x.v == z) has = true;
            if (x.v == -z) has_bar = true;
        }
        if (has && has_bar) I.push_back(z);
    }
    // J_C: t_1 > t_2 > ... greedily, t_i < min(t_{i-1}, z_i), t_i and its bar
    // not in C. The letter 0 has key n+1, so "t < 0" admits every unbarred.
    std::vector<int> J;
    int prev = t.rank + 1;
    for (int zi : I) {
        int bound = std::min(prev, zi == 0 ? t.rank + 1 : zi);
        int ti = 0;
        for (int cand = bound - 1; cand >= 1; --cand) {
            if (!present.count(cand)) {
                ti = cand;
                break;
            }
        }
        if (ti == 0) return std::nullopt;
        J.push_back(ti);
        present.insert(ti);  // t_i is now used up
        prev = ti;
    }
    // lC: each z_i (0 or unbarred) becomes t_i; rC: each zbar_i (0 or barred)
    // becomes t_i bar.
    std::vector<Letter> lcells, rcells;
    auto t_for = [&](int z) {
        for (std::size_t k = 0; k < I.size(); ++k)
            if (I[k] == z) return J[k];
        throw InternalError("split: missing substitution");
    };
    std::size_t zero_seen_l = 0, zero_seen_r = 0;
    for (Letter x : c.cells) {
        if (is_zero(x)) lcells.push_back(unbarred(J[zero_seen_l++]));
        else if (is_unbarred(x) && std::count(I.begin(), I.end(), x.v))
            lcells.push_back(unbarred(t_for(x.v)));
        else
            lcells.push_back(x);
    }
    for (Letter x : c.cells) {
        if (is_zero(x)) rcells.push_back(barred(J[zero_seen_r++]));
        else if (is_barred(x) && std::count(I.begin(), I.end(), -x.v))
            rcells.push_back(barred(t_for(-x.v)));
        else
            rcells.push_back(x);
    }
    auto by_key = [&](Letter a, Letter b) { return order_key(t, a) < order_key(t, b); };
    std::sort(lcells.begin(), lcells.end(), by_key);
    std::sort(rcells.begin(), rcells.end(), by_key);
    return SplitPair{Column(t, lcells), Column(t, rcells)};
}

}  // namespace

std::optional<SplitPair> try_split(const Column& c) {
    if (c.height() > c.type.rank) return std::nullopt;
    if (c.type.family == LieFamily::B) return split_b(c);
    auto hatted = split_b(hat(c));
    if (!hatted) return std::nullopt;
    // no 0 survives splitting, so the halves are valid type-D columns
    return SplitPair{Column(c.type, hatted->l.cells), Column(c.type, hatted->r.cells)};
}

SplitPair split_column(const Column& c) {
    auto r = try_split(c);
    if (!r)
        throw CannotSplitError("column cannot be split: " + format_word(c.reading()));
    return *r;
}

Column unsplit(const Column& l, const Column& r) {
    if (!(l.type == r.type) || l.height() != r.height())
        throw DomainError("unsplit: mismatched halves");
    LieType t = l.type;
    std::set<int> lset, rset;  // signed values
    for (Letter x : l.cells) lset.insert(x.v);
    for (Letter x : r.cells) rset.insert(x.v);
    std::vector<Letter> cells;
    int substitutes = 0, genuine = 0;
    for (int v : lset) {
        if (rset.count(v)) cells.push_back(Letter{v});     // untouched cell
        else if (v > 0) ++substitutes;                     // t_i, drop
        else cells.push_back(Letter{v});                   // original zbar of a pair
    }
    for (int v : rset) {
        if (!lset.count(v) && v > 0) {
            cells.push_back(Letter{v});  // original z of a genuine pair
            ++genuine;
        }
    }
    int zeros = substitutes - genuine;
    if (zeros < 0) throw DomainError("unsplit: inconsistent halves");
    for (int k = 0; k < zeros; ++k) cells.push_back(zero_letter);
    LieType sort_type = t.family == LieFamily::B ? t : type_b(t.rank);
    std::sort(cells.begin(), cells.end(), [&](Letter a, Letter b) {
        return order_key(sort_type, a) < order_key(sort_type, b);
    });
    if (t.family == LieFamily::B) return Column(t, cells);
    // Type D: zeros come back as (nbar n) factors.
    std::vector<Letter> out;
    for (std::size_t i = 0; i < cells.size();) {
        if (is_zero(cells[i])) {
            if (i + 1 >= cells.size() || !is_zero(cells[i + 1]))
                throw DomainError("unsplit: odd number of zeros for type D");
            out.push_back(barred(t.rank));
            out.push_back(unbarred(t.rank));
            i += 2;
        } else {
            out.push_back(cells[i]);
            ++i;
        }
    }
    return Column(t, out);
}

HeightNClass column_membership(const Column& c) {
    LieType t = c.type;
    if (t.family != LieFamily::D) throw DomainError("column_membership is a type-D notion");
    if (c.height() != t.rank) throw DomainError("column_membership expects height n");
    if (!is_admissible(c)) throw DomainError("column_membership expects an admissible column");
    int n = t.rank;
    std::optional<HeightNClass> verdict;
    for (int k = 1; k <= n; ++k) {
        Letter x = c.cells[k - 1];
        if (abs_value(x) != n) continue;
        bool even = (n - k) % 2 == 0;
        HeightNClass cls = (is_unbarred(x) == even) ? HeightNClass::OmegaN : HeightNClass::OmegaNBar;
        if (verdict && *verdict != cls)
            throw DomainError("column violates the height-n parity rule: " +
                              format_word(c.reading()));
        verdict = cls;
    }
    if (!verdict)
        throw InternalError("admissible height-n type-D column without n or nbar");
    return *verdict;
}

std::vector<Column> all_columns(LieType t, int height) {
    std::vector<Column> out;
    std::vector<Letter> alphabet = all_letters(t);
    std::vector<Letter> cur;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == height) {
            out.emplace_back(t, cur);
            return;
        }
        for (Letter x : alphabet) {
            if (!cur.empty()) {
                Letter prev = cur.back();
                if (t.family == LieFamily::B) {
                    bool ok = (is_zero(prev) && is_zero(x)) || letter_lt(t, prev, x);
                    if (!ok) continue;
                } else {
                    if (letter_le(t, x, prev)) continue;
                }
            }
            cur.push_back(x);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Column> all_admissible_columns(LieType t, int height) {
    std::vector<Column> out;
    for (auto& c : all_columns(t, height))
        if (is_admissible(c)) out.push_back(c);
    return out;
}

}  // namespace ortho
