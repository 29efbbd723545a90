#include "ortho/plactic.hpp"

#include <algorithm>
#include <set>

namespace ortho {

namespace {

struct WinRule {
    std::string rule;
    std::vector<Letter> before;
    std::vector<Letter> after;
};

// Forward instances of the displayed 3-letter relations matching `win`.
std::vector<WinRule> forward_window_rules(LieType t, const std::vector<Letter>& win) {
    std::vector<WinRule> out;
    if (win.size() != 3) return out;
    Letter w1 = win[0], w2 = win[1], w3 = win[2];
    int n = t.rank;
    auto lt = [&](Letter a, Letter b) { return letter_lt(t, a, b); };
    auto le = [&](Letter a, Letter b) { return letter_le(t, a, b); };

    if (t.family == LieFamily::B) {
        // R1: yzx = yxz and xzy = zxy, for x < y < z, x != zbar
        {
            Letter y = w1, z = w2, x = w3;
            if (lt(x, y) && lt(y, z) && x != bar(z))
                out.push_back({"R1", {y, z, x}, {y, x, z}});
        }
        {
            Letter x = w1, z = w2, y = w3;
            if (lt(x, y) && lt(y, z) && x != bar(z))
                out.push_back({"R1", {x, z, y}, {z, x, y}});
        }
        // R2: xyx = xxy (x != 0) and xyy = yxy (y != 0), for x < y, x != ybar
        {
            Letter x = w1, y = w2;
            if (w3 == x && lt(x, y) && x != bar(y) && !is_zero(x))
                out.push_back({"R2", {x, y, x}, {x, x, y}});
        }
        {
            Letter x = w1, y = w2;
            if (w3 == y && lt(x, y) && x != bar(y) && !is_zero(y))
                out.push_back({"R2", {x, y, y}, {y, x, y}});
        }
        // R3: y (x-1)bar (x-1) = y x xbar,  x xbar y = (x-1)bar (x-1) y,
        //     for 1 < x <= n and x <= y <= xbar;   and 0 nbar n = nbar n 0.
        if (is_unbarred(w3) && w3.v + 1 <= n && w2 == bar(w3)) {
            int x = w3.v + 1;
            Letter y = w1;
            if (le(unbarred(x), y) && le(y, barred(x)))
                out.push_back({"R3", {y, w2, w3}, {y, unbarred(x), barred(x)}});
        }
        if (is_unbarred(w1) && w1.v >= 2 && w2 == bar(w1)) {
            int x = w1.v;
            Letter y = w3;
            if (le(unbarred(x), y) && le(y, barred(x)))
                out.push_back({"R3", {w1, w2, y}, {barred(x - 1), unbarred(x - 1), y}});
        }
        if (is_zero(w1) && w2 == barred(n) && w3 == unbarred(n))
            out.push_back({"R3", {w1, w2, w3}, {barred(n), unbarred(n), zero_letter}});
        // R4: 00x = 0x0 and 0 xbar 0 = xbar 0 0, for x <= n
        if (is_zero(w1) && is_zero(w2) && is_unbarred(w3))
            out.push_back({"R4", {w1, w2, w3}, {zero_letter, w3, zero_letter}});
        if (is_zero(w1) && is_barred(w2) && is_zero(w3))
            out.push_back({"R4", {w1, w2, w3}, {w2, zero_letter, zero_letter}});
        return out;
    }

    // type D
    // R1: yzx = yxz for x <= y < z;  xzy = zxy for x < y <= z;  x != zbar
    {
        Letter y = w1, z = w2, x = w3;
        if (le(x, y) && lt(y, z) && x != bar(z))
            out.push_back({"R1", {y, z, x}, {y, x, z}});
    }
    {
        Letter x = w1, z = w2, y = w3;
        if (lt(x, y) && le(y, z) && x != bar(z))
            out.push_back({"R1", {x, z, y}, {z, x, y}});
    }
    // R2: y (x-1)bar (x-1) = y x xbar and x xbar y = (x-1)bar (x-1) y,
    //     for 1 < x < n and x <= y <= xbar
    if (is_unbarred(w3) && w3.v + 1 < n && w2 == bar(w3)) {
        int x = w3.v + 1;
        Letter y = w1;
        if (le(unbarred(x), y) && le(y, barred(x)))
            out.push_back({"R2", {y, w2, w3}, {y, unbarred(x), barred(x)}});
    }
    if (is_unbarred(w1) && w1.v >= 2 && w1.v < n && w2 == bar(w1)) {
        int x = w1.v;
        Letter y = w3;
        if (le(unbarred(x), y) && le(y, barred(x)))
            out.push_back({"R2", {w1, w2, y}, {barred(x - 1), unbarred(x - 1), y}});
    }
    // R3: nbar xbar n = xbar nbar n;  n xbar nbar = xbar n nbar;
    //     nbar n x = nbar x n;        n nbar x = n x nbar;   for x <= n-1
    if (is_barred(w2) && -w2.v <= n - 1) {
        if (w1 == barred(n) && w3 == unbarred(n))
            out.push_back({"R3", {w1, w2, w3}, {w2, barred(n), unbarred(n)}});
        if (w1 == unbarred(n) && w3 == barred(n))
            out.push_back({"R3", {w1, w2, w3}, {w2, unbarred(n), barred(n)}});
    }
    if (is_unbarred(w3) && w3.v <= n - 1) {
        if (w1 == barred(n) && w2 == unbarred(n))
            out.push_back({"R3", {w1, w2, w3}, {barred(n), w3, unbarred(n)}});
        if (w1 == unbarred(n) && w2 == barred(n))
            out.push_back({"R3", {w1, w2, w3}, {unbarred(n), w3, barred(n)}});
    }
    // R4: n nbar nbar = (n-1)bar (n-1) nbar;  nbar n n = (n-1)bar (n-1) n;
    //     nbar (n-1)bar (n-1) = nbar nbar n;  n (n-1)bar (n-1) = n n nbar
    if (w1 == unbarred(n) && w2 == barred(n) && w3 == barred(n))
        out.push_back({"R4", {w1, w2, w3}, {barred(n - 1), unbarred(n - 1), barred(n)}});
    if (w1 == barred(n) && w2 == unbarred(n) && w3 == unbarred(n))
        out.push_back({"R4", {w1, w2, w3}, {barred(n - 1), unbarred(n - 1), unbarred(n)}});
    if (w1 == barred(n) && w2 == barred(n - 1) && w3 == unbarred(n - 1))
        out.push_back({"R4", {w1, w2, w3}, {barred(n), barred(n), unbarred(n)}});
    if (w1 == unbarred(n) && w2 == barred(n - 1) && w3 == unbarred(n - 1))
        out.push_back({"R4", {w1, w2, w3}, {unbarred(n), unbarred(n), barred(n)}});
    return out;
}

}  // namespace

std::vector<std::vector<Letter>> window_rewrites(LieType t, const std::vector<Letter>& win) {
    std::vector<std::vector<Letter>> outs;
    for (auto& wr : forward_window_rules(t, win))
        if (std::find(outs.begin(), outs.end(), wr.after) == outs.end())
            outs.push_back(wr.after);
    return outs;
}

bool is_contractible_column_word(LieType t, const std::vector<Letter>& cells) {
    if (!is_column_word(t, cells)) return false;
    if (is_admissible_word(t, cells)) return false;
    for (std::size_t b = 0; b < cells.size(); ++b) {
        for (std::size_t len = 1; len <= cells.size() - b; ++len) {
            if (len == cells.size()) continue;  // strict factors only
            std::vector<Letter> factor(cells.begin() + b, cells.begin() + b + len);
            if (!is_admissible_word(t, factor)) return false;
        }
    }
    return true;
}

Word contract_column(const Word& column_word) {
    LieType t = column_word.type;
    const auto& cells = column_word.letters;
    if (!is_contractible_column_word(t, cells))
        throw DomainError("not a contractible column word: " + format_word(column_word));
    Column c(t, cells);
    // lowest unbarred z with the pair (z, zbar) present and N(z) > z
    int bad = 0;
    for (int z = 1; z <= t.rank && !bad; ++z) {
        bool has = false, has_bar = false;
        for (Letter x : cells) {
            if (x.v == z) has = true;
            if (x.v == -z) has_bar = true;
        }
        if (has && has_bar && n_count(c, unbarred(z)) > z) bad = z;
    }
    std::vector<Letter> out = cells;
    auto erase_one = [&](Letter target) {
        auto it = std::find(out.begin(), out.end(), target);
        if (it == out.end()) throw InternalError("contract_column: letter vanished");
        out.erase(it);
    };
    if (bad == 0) {
        // type B, 0 in C, h = n+1
        if (t.family != LieFamily::B)
            throw InternalError("contract_column: no offending pair in type D");
        erase_one(zero_letter);
    } else if (t.family == LieFamily::D && bad == t.rank) {
        // erase a consecutive (n, nbar) pair
        int n = t.rank;
        bool done = false;
        for (std::size_t i = 0; i + 1 < out.size() && !done; ++i) {
            if (abs_value(out[i]) == n && abs_value(out[i + 1]) == n &&
                out[i].v == -out[i + 1].v) {
                out.erase(out.begin() + i, out.begin() + i + 2);
                done = true;
            }
        }
        if (!done) throw InternalError("contract_column: no consecutive (n, nbar)");
    } else {
        erase_one(unbarred(bad));
        erase_one(barred(bad));
    }
    if (!is_admissible_word(t, out))
        throw InternalError("contract_column produced a non-admissible word");
    return Word(t, out);
}

std::vector<Rewrite> match_relations(const Word& w) {
    LieType t = w.type;
    std::vector<Rewrite> out;
    for (std::size_t pos = 0; pos + 3 <= w.letters.size(); ++pos) {
        std::vector<Letter> win(w.letters.begin() + pos, w.letters.begin() + pos + 3);
        for (auto& wr : forward_window_rules(t, win))
            out.push_back({wr.rule, true, pos, wr.before, wr.after});
        // backward: windows that some forward rule maps onto `win`
        // (enumerate candidate sources among all 3-letter words is wasteful;
        // instead run each forward rule on every window of the inverse side
        // by scanning all rules whose `after` equals win)
    }
    // Backward instances of R1-R4: search source windows whose forward image
    // is the present window.
    std::vector<Letter> alphabet = all_letters(t);
    for (std::size_t pos = 0; pos + 3 <= w.letters.size(); ++pos) {
        std::vector<Letter> win(w.letters.begin() + pos, w.letters.begin() + pos + 3);
        for (Letter a : alphabet)
            for (Letter b : alphabet)
                for (Letter c : alphabet) {
                    std::vector<Letter> src{a, b, c};
                    for (auto& wr : forward_window_rules(t, src))
                        if (wr.after == win)
                            out.push_back({wr.rule, false, pos, win, src});
                }
    }
    // R5 forward: the whole word is a minimal non-admissible column word.
    if (is_contractible_column_word(t, w.letters)) {
        Word contracted = contract_column(w);
        out.push_back({"R5", true, 0, w.letters, contracted.letters});
    }
    // R5 backward: insertions whose contraction gives back w.
    if (is_admissible_word(t, w.letters)) {
        std::set<std::string> seen;
        auto try_candidate = [&](std::vector<Letter> cand) {
            std::sort(cand.begin(), cand.end(), [&](Letter x, Letter y) {
                LieType st = t.family == LieFamily::B ? t : type_b(t.rank);
                return order_key(st, x) < order_key(st, y);
            });
            // for type D rebuild possible n/nbar alternations separately
            std::vector<std::vector<Letter>> layouts;
            if (t.family == LieFamily::B) {
                layouts.push_back(cand);
            } else {
                // letters with |v| < n sorted, then interleave the n-block
                std::vector<Letter> low, high, rest;
                int nn = t.rank;
                int cn = 0, cnb = 0;
                for (Letter x : cand) {
                    if (abs_value(x) == nn) (is_barred(x) ? cnb : cn)++;
                    else if (order_key(type_b(nn), x) < nn) low.push_back(x);
                    else rest.push_back(x);
                }
                for (int lead = 0; lead < 2; ++lead) {
                    std::vector<Letter> block;
                    int a = cn, bbar = cnb;
                    bool want_bar = lead == 1;
                    while (a + bbar > 0) {
                        if (want_bar) {
                            if (bbar == 0) break;
                            block.push_back(barred(nn));
                            --bbar;
                        } else {
                            if (a == 0) break;
                            block.push_back(unbarred(nn));
                            --a;
                        }
                        want_bar = !want_bar;
                    }
                    if (a + bbar != 0) continue;
                    std::vector<Letter> full = low;
                    full.insert(full.end(), block.begin(), block.end());
                    full.insert(full.end(), rest.begin(), rest.end());
                    layouts.push_back(full);
                }
            }
            for (auto& lay : layouts) {
                if (!is_contractible_column_word(t, lay)) continue;
                Word back = contract_column(Word(t, lay));
                if (back.letters == w.letters) {
                    std::string key = format_word(Word(t, lay));
                    if (seen.insert(key).second)
                        out.push_back({"R5", false, 0, w.letters, lay});
                }
            }
        };
        for (int z = 1; z <= t.rank; ++z) {
            std::vector<Letter> cand = w.letters;
            cand.push_back(unbarred(z));
            cand.push_back(barred(z));
            try_candidate(cand);
        }
        if (t.family == LieFamily::B) {
            std::vector<Letter> cand = w.letters;
            cand.push_back(zero_letter);
            try_candidate(cand);
        }
    }
    return out;
}

Word apply_rewrite(const Word& w, const Rewrite& rw) {
    std::vector<Letter> out = w.letters;
    if (rw.pos + rw.before.size() > out.size())
        throw DomainError("rewrite out of range");
    for (std::size_t i = 0; i < rw.before.size(); ++i)
        if (!(out[rw.pos + i] == rw.before[i]))
            throw DomainError("rewrite does not match the word");
    out.erase(out.begin() + rw.pos, out.begin() + rw.pos + rw.before.size());
    out.insert(out.begin() + rw.pos, rw.after.begin(), rw.after.end());
    return Word(w.type, out);
}

ColumnInsert insert_into_column(Letter x, const Column& c) {
    LieType t = c.type;
    validate_letter(t, x);
    if (!is_admissible(c)) throw DomainError("insert_into_column expects an admissible column");
    std::vector<Letter> v = c.cells;
    v.push_back(x);
    if (is_column_word(t, v)) {
        if (is_admissible_word(t, v)) return {Column(t, v), std::nullopt};
        return {Column(t, contract_column(Word(t, v)).letters), std::nullopt};
    }
    // Rewrite with the unique applicable relation in a window sliding from
    // the right end to the front; the word ends as x' w(C').
    int p = c.height();
    for (int k = p - 2; k >= 0; --k) {
        std::vector<Letter> win(v.begin() + k, v.begin() + k + 3);
        auto outs = window_rewrites(t, win);
        if (outs.size() != 1)
            throw InternalError("insertion: " + std::to_string(outs.size()) +
                                " rewrites apply at window of " + format_word(Word(t, v)));
        std::copy(outs[0].begin(), outs[0].end(), v.begin() + k);
    }
    Letter bumped = v.front();
    std::vector<Letter> rest(v.begin() + 1, v.end());
    if (!is_admissible_word(t, rest))
        throw InternalError("insertion result is not an admissible column: " +
                            format_word(Word(t, v)));
    return {std::nullopt, std::make_pair(Column(t, rest), bumped)};
}

namespace {

Tabloid insert_impl(Letter x, const Tabloid& t, bool forbid_contraction) {
    LieType lt = t.type;
    if (t.empty()) return Tabloid(lt, {Column(lt, {x})});
    const Column& c1 = t.columns.front();
    Tabloid rest(lt, {t.columns.begin() + 1, t.columns.end()});
    std::vector<Letter> v = c1.cells;
    v.push_back(x);
    if (is_column_word(lt, v)) {
        if (is_admissible_word(lt, v)) {
            Tabloid out(lt);
            out.columns.emplace_back(lt, v);
            out.columns.insert(out.columns.end(), rest.columns.begin(), rest.columns.end());
            return out;
        }
        if (forbid_contraction)
            throw InternalError("contraction during reinsertion");
        Word contracted = contract_column(Word(lt, v));
        Tabloid out = rest;
        for (Letter y : contracted.letters) out = insert_impl(y, out, true);
        return out;
    }
    auto res = insert_into_column(x, c1);
    if (!res.bumped) throw InternalError("expected a bumping insertion");
    Tabloid out(lt);
    out.columns.push_back(res.bumped->first);
    Tabloid tail = insert_impl(res.bumped->second, rest, forbid_contraction);
    out.columns.insert(out.columns.end(), tail.columns.begin(), tail.columns.end());
    return out;
}

}  // namespace

Tabloid insert_into_tableau(Letter x, const Tabloid& t) {
    Tabloid out = insert_impl(x, t, false);
    if (!is_orthogonal_tableau(out))
        throw InternalError("insertion produced a non-orthogonal tabloid");
    return out;
}

Tabloid p_symbol(const Word& w) {
    Tabloid t(w.type);
    for (Letter x : w.letters) t = insert_into_tableau(x, t);
    return t;
}

bool congruent(const Word& a, const Word& b) {
    if (!(a.type == b.type)) throw DomainError("congruent: kind mismatch");
    return p_symbol(a) == p_symbol(b);
}

}  // namespace ortho
