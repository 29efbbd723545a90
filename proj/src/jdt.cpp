#include "ortho/jdt.hpp"

#include <algorithm>
#include <set>

#include "ortho/crystal.hpp"

namespace ortho {

SkewTableau::SkewTableau(LieType t, std::vector<int> offs, std::vector<Column> cols)
    : type(t), offsets(std::move(offs)), columns(std::move(cols)) {
    if (type.family != LieFamily::B)
        throw DomainError("skew orthogonal tableaux are implemented for type B");
    if (offsets.size() != columns.size())
        throw DomainError("skew tableau: offsets and columns must align");
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (offsets[c] < 0) throw DomainError("skew tableau: negative offset");
        if (c) {
            if (offsets[c] > offsets[c - 1])
                throw DomainError("skew tableau: inner shape is not a partition");
            int bot_prev = offsets[c - 1] + columns[c - 1].height();
            int bot_cur = offsets[c] + columns[c].height();
            if (bot_cur > bot_prev)
                throw DomainError("skew tableau: outer shape is not a partition");
        }
    }
}

Word reading(const SkewTableau& t) {
    Word w(t.type);
    for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it)
        w.letters.insert(w.letters.end(), it->cells.begin(), it->cells.end());
    return w;
}

bool PuncturedSplitForm::is_hole(int row, int col) const {
    for (auto& h : holes)
        if (h.first == row && h.second == col) return true;
    for (auto& h : retired)
        if (h.first == row && h.second == col) return true;
    return false;
}

std::optional<Letter> PuncturedSplitForm::at(int row, int col) const {
    if (col < 1 || col > ncols) return std::nullopt;
    if (row < top[col - 1] || row > bot[col - 1]) return std::nullopt;
    if (is_hole(row, col)) return std::nullopt;
    return cells[col - 1][row - top[col - 1]];
}

void PuncturedSplitForm::set(int row, int col, Letter x) {
    if (col < 1 || col > ncols || row < top[col - 1] || row > bot[col - 1])
        throw InternalError("split grid write out of range");
    cells[col - 1][row - top[col - 1]] = x;
}

std::string PuncturedSplitForm::render() const {
    int rmax = 0;
    std::size_t width = 1;
    for (int c = 0; c < ncols; ++c) {
        rmax = std::max(rmax, bot[c]);
        for (Letter x : cells[c]) width = std::max(width, format_letter(x).size());
    }
    std::string out;
    for (int r = 1; r <= rmax; ++r) {
        std::string line;
        for (int c = 1; c <= ncols; ++c) {
            std::string tok;
            if (is_hole(r, c)) tok = "*";
            else if (auto x = at(r, c)) tok = format_letter(*x);
            tok.insert(0, width - tok.size(), ' ');
            if (!line.empty()) line += ' ';
            line += tok;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

PuncturedSplitForm split_grid(const SkewTableau& t) {
    PuncturedSplitForm g(t.type);
    g.ncols = 2 * (int)t.columns.size();
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        auto pair = try_split(t.columns[i]);
        if (!pair)
            throw CannotSplitError("skew column " + std::to_string(i + 1) + " is not admissible");
        for (const Column* half : {&pair->l, &pair->r}) {
            g.top.push_back(t.offsets[i] + 1);
            g.bot.push_back(t.offsets[i] + half->height());
            g.cells.push_back(half->cells);
        }
    }
    return g;
}

bool is_skew_orthogonal(const SkewTableau& t) {
    for (const Column& c : t.columns)
        if (!is_admissible(c)) return false;
    PuncturedSplitForm g(t.type);
    try {
        g = split_grid(t);
    } catch (const CannotSplitError&) {
        return false;
    }
    for (int c = 1; c < g.ncols; ++c) {
        int lo = std::max(g.top[c - 1], g.top[c]);
        int hi = std::min(g.bot[c - 1], g.bot[c]);
        for (int r = lo; r <= hi; ++r) {
            auto a = g.at(r, c), b = g.at(r, c + 1);
            if (a && b && !letter_le(t.type, *a, *b)) return false;
        }
    }
    return true;
}

namespace {

bool creates_pair(const PuncturedSplitForm& g, int col, Letter x) {
    for (int r = g.top[col - 1]; r <= g.bot[col - 1]; ++r) {
        auto y = g.at(r, col);
        if (y && y->v == -x.v) return true;
    }
    return false;
}

// The non-classical within-pair slide. The puncture in the left half means
// one cell of lC was already donated; pulling from rC would break the
// pair-free invariant. Reconstitute the original column, remove the original
// cell whose left image was donated, re-split, and leave the removed cell
// pending at the puncture row (the trailing puncture picks it up later).
void repair_within_pair(PuncturedSplitForm& g, int cl, int hole_row,
                        std::optional<Letter> tracked) {
    LieType t = g.type;
    int cr = cl + 1;
    for (auto& h : g.holes)
        if (h.second == cr) throw InternalError("within-pair repair with a punctured right half");
    std::vector<Letter> lcur;
    for (int r = g.top[cl - 1]; r <= g.bot[cl - 1]; ++r)
        if (!g.is_hole(r, cl)) lcur.push_back(g.cells[cl - 1][r - g.top[cl - 1]]);
    std::vector<Letter> rfull;
    for (int r = g.top[cr - 1]; r <= g.bot[cr - 1]; ++r)
        rfull.push_back(g.cells[cr - 1][r - g.top[cr - 1]]);
    // The donated left-image: the letter completing lcur to the left half of
    // a split pair with right half rfull. The tracked displacement pins it.
    std::optional<Letter> l_miss;
    std::optional<Column> orig;
    auto try_cand = [&](Letter cand) {
        std::vector<Letter> lcand = lcur;
        lcand.push_back(cand);
        std::sort(lcand.begin(), lcand.end(), [&](Letter a, Letter b) {
            return order_key(t, a) < order_key(t, b);
        });
        try {
            Column c = unsplit(Column(t, lcand), Column(t, rfull));
            auto sp = try_split(c);
            if (sp && sp->l.cells == lcand && sp->r.cells == rfull) {
                if (l_miss && !(*l_miss == cand))
                    throw InternalError("within-pair repair: ambiguous donated cell");
                l_miss = cand;
                orig = c;
            }
        } catch (const DomainError&) {
        }
    };
    if (tracked) {
        try_cand(*tracked);
        if (!l_miss)
            throw InternalError("within-pair repair: tracked cell does not reconstitute");
    } else {
        for (Letter cand : all_letters(t)) {
            if (is_zero(cand)) continue;
            try_cand(cand);
        }
    }
    if (!l_miss) throw InternalError("within-pair repair: cannot reconstitute the column");
    // The original cell whose left image is l_miss.
    Letter delta = *l_miss;
    std::vector<Letter> orig_cells = orig->cells;
    if (std::find(orig_cells.begin(), orig_cells.end(), *l_miss) == orig_cells.end()) {
        // l_miss is a substitute t_k; J and I pair off in decreasing order.
        std::vector<int> J, I;
        {
            auto sp = split_column(*orig);
            std::vector<int> lvals;
            for (Letter x : sp.l.cells) lvals.push_back(x.v);
            std::multiset<int> cset;
            for (Letter x : orig_cells) cset.insert(x.v);
            for (int v : lvals) {
                auto it = cset.find(v);
                if (it != cset.end()) cset.erase(it);
                else J.push_back(v);
            }
            std::sort(J.rbegin(), J.rend());
            int zeros = 0;
            for (Letter x : orig_cells)
                if (is_zero(x)) ++zeros;
            std::vector<int> pairs;
            for (int z = t.rank; z >= 1; --z) {
                bool has = false, has_bar = false;
                for (Letter x : orig_cells) {
                    if (x.v == z) has = true;
                    if (x.v == -z) has_bar = true;
                }
                if (has && has_bar) pairs.push_back(z);
            }
            I.assign(zeros, 0);
            I.insert(I.end(), pairs.begin(), pairs.end());
            if (I.size() != J.size()) throw InternalError("within-pair repair: I/J mismatch");
            auto jt = std::find(J.begin(), J.end(), l_miss->v);
            if (jt == J.end()) throw InternalError("within-pair repair: donated cell untracked");
            delta = Letter{I[jt - J.begin()]};
        }
    }
    // Remove delta from the original column and re-split.
    auto it = std::find(orig_cells.begin(), orig_cells.end(), delta);
    if (it == orig_cells.end()) throw InternalError("within-pair repair: delta missing");
    orig_cells.erase(it);
    auto sp0 = try_split(Column(t, orig_cells));
    if (!sp0) throw InternalError("within-pair repair: shrunk column not admissible");
    // Left half: the re-split left cells plus delta pending at the hole row.
    {
        std::size_t k = 0;
        for (int r = g.top[cl - 1]; r <= g.bot[cl - 1]; ++r) {
            Letter v = r == hole_row ? delta : sp0->l.cells[k++];
            g.cells[cl - 1][r - g.top[cl - 1]] = v;
        }
        if (k != sp0->l.cells.size())
            throw InternalError("within-pair repair: left half misplaced");
    }
    // Right half: the re-split right cells with the puncture at the hole row.
    {
        std::size_t k = 0;
        for (int r = g.top[cr - 1]; r <= g.bot[cr - 1]; ++r) {
            if (r == hole_row) continue;
            g.cells[cr - 1][r - g.top[cr - 1]] = sp0->r.cells[k++];
        }
        if (k != sp0->r.cells.size())
            throw InternalError("within-pair repair: right half misplaced");
    }
}

void retire_hole(PuncturedSplitForm& g) {
    auto [r, c] = g.holes.back();
    if (r != g.bot[c - 1]) throw InternalError("puncture retired away from the column bottom");
    g.cells[c - 1].pop_back();
    g.bot[c - 1] -= 1;
    g.retired.push_back(g.holes.back());
    g.holes.pop_back();
    g.owed.pop_back();
}

Column strip_holes(const PuncturedSplitForm& g, int col) {
    std::vector<Letter> cells;
    for (int r = g.top[col - 1]; r <= g.bot[col - 1]; ++r)
        if (auto x = g.at(r, col)) cells.push_back(*x);
    return Column(g.type, cells);
}

// The blocked cross-pair slide: the donor letter from the next pair's left
// half would close a pair in this pair's right half. The move is only sound
// pairwise, so reconstitute both original columns (the punctures may sit at
// staggered rows; content is what matters), transfer the original cell at
// the active puncture's row, re-split, and advance both punctures together.
void pair_level_move(PuncturedSplitForm& g, int r, int i /* pair index, 1-based */) {
    int cl = 2 * i - 1, cr = 2 * i;
    if (g.holes.size() != 2 || g.holes[0].second != cl || g.holes[1] != std::make_pair(r, cr))
        throw InternalError("blocked cross-pair slide with separated punctures");
    if (cr + 2 > g.ncols)
        throw InternalError("blocked cross-pair slide without a donor pair");
    if (g.top[cl - 1] != g.top[cr - 1] || g.bot[cl - 1] != g.bot[cr - 1] ||
        g.top[cr] != g.top[cr + 1] || g.bot[cr] != g.bot[cr + 1])
        throw InternalError("blocked cross-pair slide on ragged pairs");
    Column ci = unsplit(strip_holes(g, cl), strip_holes(g, cr));
    Column cnext = unsplit(strip_holes(g, cr + 1), strip_holes(g, cr + 2));
    if (g.top[cr] > r || g.bot[cr] < r)
        throw InternalError("blocked cross-pair slide outside the donor span");
    Letter moved = cnext.cells[r - g.top[cr]];
    std::vector<Letter> grown = ci.cells;
    grown.push_back(moved);
    std::sort(grown.begin(), grown.end(), [&](Letter a, Letter b) {
        return order_key(g.type, a) < order_key(g.type, b);
    });
    // The transfer may close a pair (z, zbar) that breaks admissibility;
    // re-key it to the least free larger value, as in the split-level repair.
    for (int guard = 0; guard <= g.type.rank && !is_admissible_word(g.type, grown); ++guard) {
        if (guard == g.type.rank)
            throw InternalError("cross-pair slide could not restore admissibility");
        int bad = 0;
        for (int z = 1; z <= g.type.rank && !bad; ++z) {
            bool has = false, has_bar = false;
            for (Letter x : grown) {
                if (x.v == z) has = true;
                if (x.v == -z) has_bar = true;
            }
            if (has && has_bar && n_count(Column(g.type, grown), unbarred(z)) > z) bad = z;
        }
        if (!bad) throw InternalError("cross-pair slide non-admissible without a bad pair");
        std::set<int> used;
        for (Letter x : grown)
            if (!is_zero(x)) used.insert(abs_value(x));
        int zp = 0;
        for (int cand = bad + 1; cand <= g.type.rank; ++cand)
            if (!used.count(cand)) {
                zp = cand;
                break;
            }
        if (!zp) throw InternalError("cross-pair slide: no replacement value");
        for (Letter& x : grown) {
            if (x.v == bad) x = unbarred(zp);
            if (x.v == -bad) x = barred(zp);
        }
        std::sort(grown.begin(), grown.end(), [&](Letter a, Letter b) {
            return order_key(g.type, a) < order_key(g.type, b);
        });
    }
    Column ci_new(g.type, grown);
    std::vector<Letter> shrunk = cnext.cells;
    shrunk.erase(shrunk.begin() + (r - g.top[cr]));
    Column cnext_new(g.type, shrunk);
    auto spi = try_split(ci_new);
    auto spn = try_split(cnext_new);
    if (!spi || !spn) throw InternalError("blocked cross-pair slide broke admissibility");
    g.cells[cl - 1] = spi->l.cells;
    g.cells[cr - 1] = spi->r.cells;
    // The donor pair keeps its row span; the puncture row is masked.
    auto place = [&](int col, const std::vector<Letter>& cells) {
        std::size_t k = 0;
        for (int row = g.top[col - 1]; row <= g.bot[col - 1]; ++row) {
            if (row == r) continue;
            g.cells[col - 1][row - g.top[col - 1]] = cells[k++];
        }
        if (k != cells.size()) throw InternalError("cross-pair slide lost a cell");
    };
    g.holes = {{r, cr + 1}, {r, cr + 2}};
    g.owed = {std::nullopt, std::nullopt};
    place(cr + 1, spn->l.cells);
    place(cr + 2, spn->r.cells);
}

}  // namespace

bool slide_step(PuncturedSplitForm& g) {
    if (g.holes.empty()) throw DomainError("slide_step: no puncture");
    if (g.owed.size() != g.holes.size()) throw InternalError("owed/holes out of step");
    auto [r, c] = g.holes.back();
    auto below = g.at(r + 1, c);
    auto right = g.at(r, c + 1);
    if (!below && !right) {
        retire_hole(g);
        return false;
    }
    // Classical choice: move the box below up when below <= right.
    bool vertical = below && (!right || letter_le(g.type, *below, *right));
    if (vertical) {
        g.set(r, c, *below);
        g.holes.back() = {r + 1, c};
        return true;
    }
    if (creates_pair(g, c, *right)) {
        if (c % 2 == 1) {
            // within-pair: donor is the right half of the same pair
            repair_within_pair(g, c, r, g.owed.back());
            g.holes.back() = {r, c + 1};
            g.owed.back() = std::nullopt;
        } else {
            pair_level_move(g, r, c / 2);
        }
        return true;
    }
    g.set(r, c, *right);
    g.holes.back() = {r, c + 1};
    g.owed.back() = right;
    return true;
}

namespace {

struct Corner {
    int row;
    int col;  // original column index, 1-based
};

std::vector<Corner> inner_corners(const std::vector<int>& inner) {
    std::vector<Corner> out;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == 0) continue;
        if (i + 1 < inner.size() && inner[i + 1] == inner[i]) continue;
        out.push_back({inner[i], (int)i + 1});
    }
    std::sort(out.begin(), out.end(), [](const Corner& a, const Corner& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return out;
}

}  // namespace

namespace {

// Original-column corner slide, used when the cell-level engine meets a
// configuration outside its local rules. The vertical move swaps the
// puncture down; the horizontal move transfers one box between adjacent
// columns, with the result pinned by plactic equivalence of the two-column
// piece plus the split-form row conditions (enumerated; must be unique).
// Raised when a box-conserving transfer does not exist (the class forces a
// contraction); the caller falls back to the whole-corner search.
struct ContractionNeeded {};

struct OrigState {
    LieType type;
    std::vector<int> tops;                  // first occupied row per column
    std::vector<std::vector<Letter>> cols;  // cells in row order, puncture excluded
    int pcol = 0;                           // punctured column, 0-based
    int prow = 0;                           // puncture row, inside [top, bot]

    explicit OrigState(LieType t) : type(t) {}
    int top(int c) const { return tops[c]; }
    int bot(int c) const { return tops[c] + (int)cols[c].size() - 1 + (c == pcol ? 1 : 0); }
    std::optional<Letter> cell(int c, int row) const {
        if (c < 0 || c >= (int)cols.size()) return std::nullopt;
        if (row < top(c) || row > bot(c)) return std::nullopt;
        int idx = row - top(c);
        if (c == pcol) {
            if (row == prow) return std::nullopt;
            if (row > prow) --idx;
        }
        return cols[c][idx];
    }
};

// Tops and bottoms must stay weakly decreasing left to right (empty columns
// are allowed only at the right edge).
bool orig_shape_ok(const OrigState& s) {
    for (std::size_t c = 0; c + 1 < s.cols.size(); ++c) {
        bool cur_empty = s.cols[c].empty() && (int)c != s.pcol;
        bool next_empty = s.cols[c + 1].empty() && (int)c + 1 != s.pcol;
        if (cur_empty && !next_empty) return false;
        if (cur_empty || next_empty) continue;
        if (s.top(c + 1) < s.top(c)) return false;
        if (s.bot(c + 1) > s.bot(c)) return false;
    }
    return true;
}

// Split-form row conditions across all columns, skipping the puncture.
bool orig_rows_ok(const OrigState& s) {
    std::vector<std::vector<Letter>> lhalf(s.cols.size()), rhalf(s.cols.size());
    for (std::size_t c = 0; c < s.cols.size(); ++c) {
        if (s.cols[c].empty()) continue;
        auto sp = try_split(Column(s.type, s.cols[c]));
        if (!sp) return false;
        lhalf[c] = sp->l.cells;
        rhalf[c] = sp->r.cells;
    }
    auto split_cell = [&](int c, int row, bool left) -> std::optional<Letter> {
        if (c < 0 || c >= (int)s.cols.size()) return std::nullopt;
        if (row < s.top(c) || row > s.bot(c)) return std::nullopt;
        int idx = row - s.top(c);
        if (c == s.pcol) {
            if (row == s.prow) return std::nullopt;
            if (row > s.prow) --idx;
        }
        if (idx >= (int)lhalf[c].size()) return std::nullopt;
        return (left ? lhalf[c] : rhalf[c])[idx];
    };
    for (std::size_t c = 0; c + 1 < s.cols.size(); ++c) {
        for (int row = 1; row <= s.bot((int)c); ++row) {
            auto r1 = split_cell((int)c, row, false);
            auto l2 = split_cell((int)c + 1, row, true);
            if (r1 && l2 && !letter_le(s.type, *r1, *l2)) return false;
        }
    }
    return true;
}

Word orig_piece_reading(LieType t, const std::vector<Letter>& right,
                        const std::vector<Letter>& left) {
    Word w(t);
    w.letters = right;
    w.letters.insert(w.letters.end(), left.begin(), left.end());
    return w;
}

void orig_corner_slide(OrigState& s) {
    LieType t = s.type;
    while (true) {
        int j = s.pcol, r = s.prow;
        std::optional<Letter> below = s.cell(j, r + 1);
        std::optional<Letter> a;
        if (j + 1 < (int)s.cols.size() && !s.cols[j + 1].empty()) {
            int top1 = s.top(j + 1);
            int bot1 = top1 + (int)s.cols[j + 1].size() - 1;
            if (r >= top1 && r <= bot1) {
                auto sp = try_split(Column(t, s.cols[j + 1]));
                if (!sp) throw InternalError("corner slide: neighbor not admissible");
                a = sp->l.cells[r - top1];
            }
        }
        if (!below && !a) {
            // outer corner: drop the punctured cell
            s.pcol = -1;
            return;
        }
        if (below && (!a || letter_le(t, *below, *a))) {
            // vertical: the cell below moves up past the puncture
            s.prow = r + 1;
            continue;
        }
        // horizontal: enumerate the transfer result; the receiving column
        // may contract (shed a pair), as in the symplectic jeu de taquin
        std::vector<Letter> oldl = s.cols[j], oldr = s.cols[j + 1];
        Word before = orig_piece_reading(t, oldr, oldl);
        int hr = (int)oldr.size() - 1;
        std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> found;
        auto right_cands = hr == 0 ? std::vector<Column>{Column(t)}
                                   : all_admissible_columns(t, hr);
        for (int hl : {(int)oldl.size() + 1, (int)oldl.size() - 1}) {
            if (hl < 0) continue;
            auto left_cands = hl == 0 ? std::vector<Column>{Column(t)}
                                      : all_admissible_columns(t, hl);
            for (const Column& cl : left_cands) {
                for (const Column& cr : right_cands) {
                    Word after = orig_piece_reading(t, cr.cells, cl.cells);
                    if (!same_place_equivalent(before, after)) continue;
                    OrigState cand = s;
                    cand.cols[j] = cl.cells;
                    cand.cols[j + 1] = cr.cells;
                    cand.pcol = j + 1;
                    cand.prow = r;
                    if (!orig_shape_ok(cand)) continue;
                    if (!orig_rows_ok(cand)) continue;
                    found.emplace_back(cl.cells, cr.cells);
                }
            }
        }
        if (found.empty())
            throw ContractionNeeded{};
        if (found.size() != 1)
            throw InternalError("corner slide: " + std::to_string(found.size()) +
                                " transfer results for " + format_word(before));
        s.cols[j] = found[0].first;
        s.cols[j + 1] = found[0].second;
        s.pcol = j + 1;
        s.prow = r;
    }
}

Word grid_reading(const PuncturedSplitForm& g) {
    Word w(g.type);
    for (int c = g.ncols; c >= 1; --c)
        for (int r = g.top[c - 1]; r <= g.bot[c - 1]; ++r)
            if (auto x = g.at(r, c)) w.letters.push_back(*x);
    return w;
}

// Whole-corner fallback: the result of consuming one inner corner is pinned
// by the new inner shape, skew orthogonality, and the plactic class of the
// reading. Columns left of the corner never move; search the rest, smallest
// formatted reading first for determinism.
OrigState corner_search(const OrigState& start, int j0, int corner_row) {
    LieType t = start.type;
    int m = (int)start.cols.size();
    Word baseline(t);
    {
        std::vector<std::vector<Letter>> cols = start.cols;
        for (int c = m - 1; c >= 0; --c)
            baseline.letters.insert(baseline.letters.end(), cols[c].begin(), cols[c].end());
    }
    std::vector<int> new_tops = start.tops;
    new_tops[j0] -= 1;  // the corner box joins column j0
    if (new_tops[j0] + 0 != corner_row)
        throw InternalError("corner search: corner row mismatch");
    std::vector<std::vector<Column>> pools(t.rank + 1);
    pools[0] = {Column(t)};
    for (int h = 1; h <= t.rank; ++h) pools[h] = all_admissible_columns(t, h);
    std::optional<OrigState> best;
    std::string best_key;
    OrigState cand(t);
    cand.tops = new_tops;
    cand.cols.assign(m, {});
    cand.pcol = -1;
    for (int c = 0; c < j0; ++c) cand.cols[c] = start.cols[c];
    auto rec = [&](auto&& self, int c) -> void {
        if (c == m) {
            std::vector<Column> cols;
            std::vector<int> offs;
            for (int k = 0; k < m; ++k) {
                if (cand.cols[k].empty()) break;
                cols.emplace_back(t, cand.cols[k]);
                offs.push_back(cand.tops[k] - 1);
            }
            for (std::size_t k = cols.size(); k < cand.cols.size(); ++k)
                if (!cand.cols[k].empty()) return;  // empty column before a filled one
            try {
                SkewTableau st(t, offs, cols);
                if (!is_skew_orthogonal(st)) return;
                if (!same_place_equivalent(reading(st), baseline)) return;
                std::string key = format_word(reading(st));
                for (int o : offs) key += "/" + std::to_string(o);
                if (!best || key < best_key) {
                    best = cand;
                    best_key = key;
                }
            } catch (const DomainError&) {
            }
            return;
        }
        int maxh = t.rank;
        if (c > 0 && !cand.cols[c - 1].empty()) {
            int bot_prev = cand.tops[c - 1] + (int)cand.cols[c - 1].size() - 1;
            maxh = std::min(maxh, bot_prev - cand.tops[c] + 1);
        } else if (c > 0) {
            maxh = 0;
        }
        for (int h = std::max(0, maxh < 0 ? 0 : 0); h <= std::max(0, maxh); ++h) {
            for (const Column& col : pools[h]) {
                cand.cols[c] = col.cells;
                self(self, c + 1);
            }
            if (h == 0) cand.cols[c] = {};
        }
        cand.cols[c] = {};
    };
    rec(rec, j0);
    if (!best) throw InternalError("corner search: no valid result");
    return *best;
}

OrigState orig_from_grid(const PuncturedSplitForm& g) {
    OrigState s(g.type);
    s.pcol = -1;
    for (int i = 0; i + 1 < g.ncols; i += 2) {
        if (g.top[i] != g.top[i + 1] || g.bot[i] != g.bot[i + 1])
            throw InternalError("corner fallback: ragged pair");
        s.tops.push_back(g.top[i]);
        if (g.cells[i].empty()) s.cols.push_back({});
        else
            s.cols.push_back(
                unsplit(Column(g.type, g.cells[i]), Column(g.type, g.cells[i + 1])).cells);
    }
    return s;
}

void grid_from_orig(PuncturedSplitForm& g, const OrigState& s) {
    g.holes.clear();
    g.owed.clear();
    g.retired.clear();
    for (std::size_t c = 0; c < s.cols.size(); ++c) {
        int cl = 2 * (int)c, cr = cl + 1;
        if (s.cols[c].empty()) {
            g.cells[cl].clear();
            g.cells[cr].clear();
            g.top[cl] = g.top[cr] = s.tops[c];
            g.bot[cl] = g.bot[cr] = s.tops[c] - 1;
            continue;
        }
        auto sp = split_column(Column(g.type, s.cols[c]));
        g.cells[cl] = sp.l.cells;
        g.cells[cr] = sp.r.cells;
        g.top[cl] = g.top[cr] = s.tops[c];
        g.bot[cl] = g.bot[cr] = s.tops[c] + (int)s.cols[c].size() - 1;
    }
}

}  // namespace

Tabloid rectify(const SkewTableau& t) { return rectify(t, RectifyOptions{}); }

Tabloid rectify(const SkewTableau& t, const RectifyOptions& opts) {
    if (!is_skew_orthogonal(t)) throw DomainError("rectify expects a skew orthogonal tableau");
    PuncturedSplitForm g = split_grid(t);
    std::vector<int> inner = t.offsets;
    auto open_hole = [&](int row, int col) {
        g.top[col - 1] -= 1;
        g.cells[col - 1].insert(g.cells[col - 1].begin(), Letter{0});
        if (g.top[col - 1] != row) throw InternalError("corner row does not match the column top");
        g.holes.push_back({row, col});
        g.owed.push_back(std::nullopt);
    };
    while (true) {
        auto corners = inner_corners(inner);
        if (corners.empty()) break;
        std::size_t pick = opts.corner_choice ? opts.corner_choice(corners.size()) : 0;
        if (pick >= corners.size()) throw DomainError("corner choice out of range");
        Corner corner = corners[pick];
        PuncturedSplitForm snapshot = g;
        try {
            Word baseline = grid_reading(g);
            g.retired.clear();
            open_hole(corner.row, 2 * corner.col - 1);  // left half (waits)
            open_hole(corner.row, 2 * corner.col);      // right half (travels first)
            if (opts.trace) opts.trace(g);
            while (!g.holes.empty()) {
                slide_step(g);
                if (!same_place_equivalent(grid_reading(g), baseline))
                    throw InternalError("slide broke the plactic class");
                if (opts.trace) opts.trace(g);
            }
        } catch (const Error&) {
            // The cell-level engine met a configuration outside its local
            // rules; redo this corner with the original-column slide. When
            // even the box-conserving transfer is impossible (the class
            // forces a contraction), resolve the whole corner by search.
            g = snapshot;
            OrigState s = orig_from_grid(g);
            bool search_needed = false;
            try {
                OrigState run = s;
                run.pcol = corner.col - 1;
                run.prow = corner.row;
                run.tops[run.pcol] -= 1;  // the corner cell joins the column span
                orig_corner_slide(run);
                grid_from_orig(g, run);
            } catch (const ContractionNeeded&) {
                search_needed = true;
            } catch (const Error&) {
                search_needed = true;
            }
            if (search_needed) {
                OrigState res = corner_search(s, corner.col - 1, corner.row);
                grid_from_orig(g, res);
            }
            if (opts.trace) opts.trace(g);
        }
        inner[corner.col - 1] -= 1;
    }
    if (g.ncols % 2) throw InternalError("odd split grid");
    Tabloid out(t.type);
    for (int i = 0; i + 1 < g.ncols; i += 2) {
        if (g.top[i] != g.top[i + 1] || g.bot[i] != g.bot[i + 1])
            throw InternalError("rectified pair is ragged");
        if (g.cells[i].empty()) continue;
        if (g.top[i] != 1) throw InternalError("rectified grid is still skew");
        Column l(t.type, g.cells[i]), r(t.type, g.cells[i + 1]);
        Column orig = unsplit(l, r);
        auto check = try_split(orig);
        if (!check || !(check->l == l) || !(check->r == r))
            throw InternalError("rectified pair is not a split column");
        out.columns.push_back(orig);
    }
    Tabloid oracle = p_symbol(reading(t));
    if (!(out == oracle))
        throw InternalError("rectify disagrees with the insertion algorithm on " +
                            format_word(reading(t)));
    return out;
}

}  // namespace ortho
