#include "ortho/spin.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "ortho/crystal.hpp"

namespace ortho {

bool triangle(Letter x, const SpinColumn& c) {
    validate_letter(c.type, x);
    return !letter_le(c.type, x, c.greatest());
}

namespace {

// |C| from a split half: the absolute values present in it.
std::set<int> abs_support(const Column& half) {
    std::set<int> out;
    for (Letter x : half.cells) out.insert(abs_value(x));
    return out;
}

SpinColumn extend_l(const Column& lc, const std::set<int>& support, int skip = 0) {
    LieType t = lc.type;
    std::vector<Letter> ls = lc.cells;
    if (skip) ls.push_back(unbarred(skip));
    for (int x = 1; x <= t.rank; ++x)
        if (!support.count(x) && x != skip) ls.push_back(barred(x));
    return spin_from_letters(t, ls);
}

SpinColumn extend_r(const Column& rc, const std::set<int>& support, int skip = 0) {
    LieType t = rc.type;
    std::vector<Letter> ls = rc.cells;
    if (skip) ls.push_back(barred(skip));
    for (int x = 1; x <= t.rank; ++x)
        if (!support.count(x) && x != skip) ls.push_back(unbarred(x));
    return spin_from_letters(t, ls);
}

}  // namespace

SpinSplit spin_split_b(const Column& c) {
    if (c.type.family != LieFamily::B) throw DomainError("spin_split_b expects type B");
    if (c.height() < 1 || c.height() > c.type.rank)
        throw DomainError("spin_split_b expects 1 <= h(C) <= n");
    auto pair = try_split(c);
    if (!pair) throw DomainError("spin_split_b expects an admissible column");
    auto support = abs_support(pair->l);
    return {extend_r(pair->r, support), extend_l(pair->l, support)};
}

SpinSplit spin_split_d(const Column& c, SpinVariant variant) {
    if (c.type.family != LieFamily::D) throw DomainError("spin_split_d expects type D");
    if (c.height() < 1 || c.height() > c.type.rank)
        throw DomainError("spin_split_d expects 1 <= h(C) <= n");
    auto pair = try_split(c);
    if (!pair) throw DomainError("spin_split_d expects an admissible column");
    auto support = abs_support(pair->l);
    SpinColumn r = extend_r(pair->r, support);
    SpinColumn l = extend_l(pair->l, support);
    if (spin_variant(r) == variant) return {r, l};
    // t-shift: the greatest unbarred letter outside |C|
    int tshift = 0;
    for (int x = c.type.rank; x >= 1; --x)
        if (!support.count(x)) {
            tshift = x;
            break;
        }
    if (!tshift)
        throw DomainError("spin_split_d: requested variant unreachable (no letter t)");
    SpinColumn rt = extend_r(pair->r, support, tshift);
    SpinColumn lt = extend_l(pair->l, support, tshift);
    if (spin_variant(rt) != variant)
        throw InternalError("spin_split_d: t-shift did not fix the parity");
    return {rt, lt};
}

namespace {

SpinColumn spin_of_weight(LieType t, const WeightVec& wt) {
    std::uint64_t mask = 0;
    for (int k = 1; k <= t.rank; ++k) {
        int v = wt.doubled[k - 1];
        if (v == -1) mask |= 1ull << (k - 1);
        else if (v != 1)
            throw InternalError("no spin column of the requested weight");
    }
    return SpinColumn(t, mask);
}

}  // namespace

SpinColumn apply_r6(const SpinColumn& c, Letter x) {
    if (!triangle(x, c)) throw DomainError("R6 requires x triangle c");
    WeightVec wt = weight_of_spin(c);
    wt += weight_of_letter(c.type, x);
    return spin_of_weight(c.type, wt);
}

std::pair<Letter, SpinColumn> apply_r7(const SpinColumn& c, Letter x) {
    if (triangle(x, c)) throw DomainError("R7 requires not (x triangle c)");
    LieType t = c.type;
    // x' = min{t in c: t >= x}, plus the candidate 0 in type B when x <= n.
    std::optional<Letter> best;
    for (Letter cand : c.letters()) {
        if (!letter_le(t, x, cand)) continue;
        if (!best || order_key(t, cand) < order_key(t, *best)) best = cand;
    }
    if (t.family == LieFamily::B && is_unbarred(x)) {
        if (!best || order_key(t, zero_letter) < order_key(t, *best)) best = zero_letter;
    }
    if (!best) throw InternalError("R7: empty candidate set");
    WeightVec wt = weight_of_spin(c);
    wt += weight_of_letter(t, x);
    WeightVec wx = weight_of_letter(t, *best);
    for (std::size_t i = 0; i < wt.doubled.size(); ++i) wt.doubled[i] -= wx.doubled[i];
    return {*best, spin_of_weight(t, wt)};
}

namespace {

struct PairKey {
    std::uint64_t r, l;
    auto operator<=>(const PairKey&) const = default;
};

// All S images, including the empty column (S(empty) = c_n (x) c_0 style
// highest weight pairs), memoized per LieType.
const std::map<PairKey, Column>& inverse_table(LieType t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::map<PairKey, Column>> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair((int)t.family, t.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::map<PairKey, Column> table;
    auto add = [&](const SpinSplit& sp, const Column& c) {
        table.emplace(PairKey{sp.r.mask, sp.l.mask}, c);
    };
    // empty column: S(empty) maps the empty word to c_n (x) c_0
    {
        Column empty(t);
        SpinColumn cn = spin_cp(t, t.rank), c0 = spin_cp(t, 0);
        add({cn, c0}, empty);
        if (t.family == LieFamily::D) {
            // Lambda_{n-1} flavor: both factors with the top value flipped
            SpinColumn cn2(t, 1ull << (t.rank - 1));
            SpinColumn c02(t, c0.mask ^ (1ull << (t.rank - 1)));
            add({cn2, c02}, empty);
        }
    }
    for (int h = 1; h <= t.rank; ++h) {
        for (const Column& c : all_admissible_columns(t, h)) {
            if (t.family == LieFamily::B) {
                add(spin_split_b(c), c);
            } else {
                for (SpinVariant v : {SpinVariant::LambdaN, SpinVariant::LambdaNMinus1}) {
                    try {
                        add(spin_split_d(c, v), c);
                    } catch (const DomainError&) {
                        // height-n columns reach only one variant
                    }
                }
            }
        }
    }
    return cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

std::optional<Column> invert_spin_pair(const SpinColumn& r, const SpinColumn& l) {
    if (!(r.type == l.type)) throw DomainError("invert_spin_pair: kind mismatch");
    const auto& table = inverse_table(r.type);
    auto it = table.find(PairKey{r.mask, l.mask});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

GWord reading(const SpinTableau& st) {
    GWord g = to_gword(reading(st.body));
    g.elems.emplace_back(st.spin);
    return g;
}

GWord reading(const GeneralizedTableau& gt) {
    GWord g = to_gword(reading(gt.body));
    if (gt.spin) g.elems.emplace_back(*gt.spin);
    return g;
}

bool is_spin_tableau(const SpinTableau& st) {
    LieType t = st.spin.type;
    if (!st.body.empty() && !is_orthogonal_tableau(st.body)) return false;
    if (!st.body.empty()) {
        auto first_split = try_split(st.body.columns.front());
        if (!first_split) return false;
        const Column& lc1 = first_split->l;
        auto spin_letters = st.spin.letters();
        for (int k = 0; k < lc1.height(); ++k)
            if (!letter_le(t, spin_letters[k], lc1.cells[k])) return false;
        if (t.family == LieFamily::D) {
            Column c_spin(t, spin_letters);
            for (const auto& cfg : find_a_configurations(c_spin, lc1))
                if (cfg.mu() == t.rank - cfg.a) return false;
        }
    }
    if (t.family == LieFamily::D) {
        Shape s = shape_of(st.body);
        if (spin_variant(st.spin) == SpinVariant::LambdaN && s.eps == Eps::Minus) return false;
        if (spin_variant(st.spin) == SpinVariant::LambdaNMinus1 && s.eps == Eps::Plus)
            return false;
    }
    return true;
}

Shape shape_of(const GeneralizedTableau& gt) {
    Shape s = shape_of(gt.body);
    if (gt.spin) {
        if (gt.spin->type.family == LieFamily::B) s.spin = SpinPart::SpinB;
        else
            s.spin = spin_variant(*gt.spin) == SpinVariant::LambdaN ? SpinPart::SpinDPlus
                                                                    : SpinPart::SpinDMinus;
    }
    return s;
}

namespace {

// Move every ordinary letter left of every spin column using R6/R7.
void migrate_letters(GWord& w) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < w.elems.size(); ++i) {
            if (!std::holds_alternative<SpinColumn>(w.elems[i])) continue;
            if (!std::holds_alternative<Letter>(w.elems[i + 1])) continue;
            SpinColumn c = std::get<SpinColumn>(w.elems[i]);
            Letter x = std::get<Letter>(w.elems[i + 1]);
            if (triangle(x, c)) {
                w.elems[i] = apply_r6(c, x);
                w.elems.erase(w.elems.begin() + i + 1);
            } else {
                auto [xp, cp] = apply_r7(c, x);
                w.elems[i] = xp;
                w.elems[i + 1] = cp;
            }
            moved = true;
            break;
        }
    }
}

// Collapse the rightmost adjacent spin pair through the inverse S map.
// Returns false when fewer than two spin columns remain.
bool collapse_rightmost_pair(GWord& w) {
    int last = -1;
    for (int i = (int)w.elems.size() - 1; i >= 1; --i) {
        if (std::holds_alternative<SpinColumn>(w.elems[i]) &&
            std::holds_alternative<SpinColumn>(w.elems[i - 1])) {
            last = i;
            break;
        }
    }
    if (last < 0) return false;
    const SpinColumn& r = std::get<SpinColumn>(w.elems[last - 1]);
    const SpinColumn& l = std::get<SpinColumn>(w.elems[last]);
    auto col = invert_spin_pair(r, l);
    if (!col)
        throw InternalError("spin pair not in the image of any S map: " + format_spin(r) +
                            " " + format_spin(l));
    std::vector<GLetter> repl;
    for (Letter x : col->cells) repl.emplace_back(x);
    w.elems.erase(w.elems.begin() + last - 1, w.elems.begin() + last + 1);
    w.elems.insert(w.elems.begin() + last - 1, repl.begin(), repl.end());
    return true;
}

int count_spins(const GWord& w) {
    int k = 0;
    for (const auto& e : w.elems)
        if (std::holds_alternative<SpinColumn>(e)) ++k;
    return k;
}

}  // namespace

GeneralizedTableau generalized_p_symbol(const GWord& w) {
    LieType t = w.type;
    GWord cur = w;
    migrate_letters(cur);
    while (count_spins(cur) >= 2) {
        collapse_rightmost_pair(cur);
        migrate_letters(cur);
    }
    if (count_spins(cur) == 0) return {std::nullopt, p_symbol(to_word(cur))};
    // one trailing spin column
    for (int guard = 0; guard < 4 * t.rank + 16; ++guard) {
        if (!std::holds_alternative<SpinColumn>(cur.elems.back()))
            throw InternalError("generalized_p_symbol: spin column not trailing");
        SpinColumn spin = std::get<SpinColumn>(cur.elems.back());
        Word u(t);
        for (std::size_t i = 0; i + 1 < cur.elems.size(); ++i)
            u.letters.push_back(std::get<Letter>(cur.elems[i]));
        Tabloid body = p_symbol(u);
        SpinTableau cand{spin, body};
        if (is_spin_tableau(cand)) return {spin, body};
        if (body.empty())
            throw InternalError("generalized_p_symbol: empty body but illegal spin tableau");
        // Split the first column off through its S image and renormalize.
        Column c1 = body.columns.front();
        Tabloid rest(t, {body.columns.begin() + 1, body.columns.end()});
        SpinSplit sp = [&] {
            if (t.family == LieFamily::B) return spin_split_b(c1);
            SpinVariant want = shape_of(rest).eps == Eps::Minus ? SpinVariant::LambdaNMinus1
                                                                : SpinVariant::LambdaN;
            try {
                return spin_split_d(c1, want);
            } catch (const DomainError&) {
                return spin_split_d(c1, want == SpinVariant::LambdaN
                                            ? SpinVariant::LambdaNMinus1
                                            : SpinVariant::LambdaN);
            }
        }();
        GWord next(t);
        for (Letter x : reading(rest).letters) next.elems.emplace_back(x);
        next.elems.emplace_back(sp.r);
        next.elems.emplace_back(sp.l);
        next.elems.emplace_back(spin);
        migrate_letters(next);
        while (count_spins(next) >= 2) {
            collapse_rightmost_pair(next);
            migrate_letters(next);
        }
        cur = next;
        if (count_spins(cur) == 0)
            throw InternalError("generalized_p_symbol: spin parity changed");
    }
    throw InternalError("generalized_p_symbol: normalization did not converge");
}

bool generalized_congruent(const GWord& a, const GWord& b) {
    if (!(a.type == b.type)) throw DomainError("generalized_congruent: kind mismatch");
    return generalized_p_symbol(a) == generalized_p_symbol(b);
}

std::vector<Shape> generalized_q_symbol(const GWord& w) {
    std::vector<Shape> out;
    GWord prefix(w.type);
    for (const GLetter& e : w.elems) {
        prefix.elems.push_back(e);
        out.push_back(shape_of(generalized_p_symbol(prefix)));
    }
    return out;
}

}  // namespace ortho
