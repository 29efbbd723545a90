#include "ortho/schensted.hpp"

#include <algorithm>

#include "ortho/crystal.hpp"

namespace ortho {

namespace {

// Compares consecutive diagrams. Exactly one of the members is meaningful:
// equal, or one box added/removed in `row`.
struct StepDiff {
    enum Kind { Equal, Add, Remove, Invalid } kind = Invalid;
    int row = 0;  // the row (= new/old height of the changed column)
};

StepDiff diff_shapes(const Shape& from, const Shape& to) {
    // Compare as multisets of column heights.
    std::vector<int> a = from.heights, b = to.heights;
    if (a == b) return {StepDiff::Equal, 0};
    // try: one column's height changed by one (including appearing/vanishing)
    std::vector<int> a1 = a, b1 = b;
    if (a1.size() < b1.size()) a1.push_back(0);
    if (b1.size() < a1.size()) b1.push_back(0);
    if (a1.size() != b1.size()) return {StepDiff::Invalid, 0};
    int changed = -1;
    for (std::size_t i = 0; i < a1.size(); ++i) {
        if (a1[i] != b1[i]) {
            if (changed >= 0) return {StepDiff::Invalid, 0};
            changed = (int)i;
        }
    }
    if (changed < 0) return {StepDiff::Equal, 0};
    int d = b1[changed] - a1[changed];
    if (d == 1) return {StepDiff::Add, b1[changed]};
    if (d == -1) return {StepDiff::Remove, a1[changed]};
    return {StepDiff::Invalid, 0};
}

}  // namespace

void validate_oscillating(const OscillatingTableau& q) {
    LieType t = q.type;
    if (q.steps.empty()) return;
    for (const Shape& s : q.steps) {
        validate_shape(t, s);
        if (s.spin != SpinPart::None)
            throw DomainError("oscillating tableau steps carry no spin part");
    }
    if (!(q.steps.front().heights == std::vector<int>{1}))
        throw DomainError("oscillating tableau must start with a single box");
    for (std::size_t k = 0; k + 1 < q.steps.size(); ++k) {
        auto d = diff_shapes(q.steps[k], q.steps[k + 1]);
        if (t.family == LieFamily::B) {
            if (d.kind == StepDiff::Invalid)
                throw DomainError("consecutive diagrams must be equal or differ by one box");
            // An equal step inserts a letter whose highest weight image is 0,
            // which needs phi_n > 0 on the tableau: a column of height n.
            bool has_n = !q.steps[k].heights.empty() && q.steps[k].heights.front() == t.rank;
            if (d.kind == StepDiff::Equal && !has_n)
                throw DomainError("equal step without a column of height n");
        } else {
            if (d.kind != StepDiff::Add && d.kind != StepDiff::Remove)
                throw DomainError("type D consecutive diagrams must differ by exactly one box");
            Eps e0 = q.steps[k].eps, e1 = q.steps[k + 1].eps;
            if (e0 != Eps::Zero && e1 != Eps::Zero && e0 != e1)
                throw DomainError("oscillating tableau epsilon flip without passing through 0");
        }
    }
}

bool is_valid_oscillating(const OscillatingTableau& q) {
    try {
        validate_oscillating(q);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

OscillatingTableau q_symbol(const Word& w) {
    OscillatingTableau q(w.type);
    Tabloid t(w.type);
    for (Letter x : w.letters) {
        t = insert_into_tableau(x, t);
        q.steps.push_back(shape_of(t));
    }
    validate_oscillating(q);
    return q;
}

std::pair<Tabloid, OscillatingTableau> psi(const Word& w) {
    return {p_symbol(w), q_symbol(w)};
}

Word oscillating_witness(const OscillatingTableau& Q) {
    validate_oscillating(Q);
    LieType t = Q.type;
    int n = t.rank;
    Word w(t);
    if (Q.steps.empty()) return w;
    w.letters.push_back(unbarred(1));
    for (std::size_t i = 1; i < Q.steps.size(); ++i) {
        auto d = diff_shapes(Q.steps[i - 1], Q.steps[i]);
        Letter x{0};
        if (t.family == LieFamily::B) {
            if (d.kind == StepDiff::Equal) x = zero_letter;
            else if (d.kind == StepDiff::Add) x = unbarred(d.row);
            else x = barred(d.row);
        } else {
            Eps cur = Q.steps[i].eps, prev = Q.steps[i - 1].eps;
            if (d.kind == StepDiff::Add) {
                if (d.row < n) x = unbarred(d.row);
                else x = cur == Eps::Plus ? unbarred(n) : barred(n);
            } else {
                if (d.row < n) x = barred(d.row);
                else x = prev == Eps::Plus ? barred(n) : unbarred(n);
            }
        }
        w.letters.push_back(x);
    }
    if (!(q_symbol(w) == Q))
        throw InternalError("oscillating witness does not reproduce Q");
    return w;
}

Word psi_inverse(const Tabloid& P, const OscillatingTableau& Q) {
    if (!(P.type == Q.type)) throw DomainError("psi_inverse: kind mismatch");
    validate_oscillating(Q);
    if (!is_orthogonal_tableau(P)) throw DomainError("psi_inverse: P is not orthogonal");
    if (Q.steps.empty()) {
        if (!P.empty()) throw DomainError("psi_inverse: shape mismatch");
        return Word(P.type);
    }
    if (!(shape_of(P) == Q.steps.back()))
        throw DomainError("psi_inverse: P must have shape Q_l");
    Word wq = oscillating_witness(Q);
    auto path = highest_weight_path(to_gword(reading(P)));
    Tabloid hw_tab = highest_weight_tableau(P.type, shape_of(P));
    if (!(path.hw == to_gword(reading(hw_tab))))
        throw InternalError("psi_inverse: component head is not the highest weight tableau");
    auto path_q = highest_weight_path(to_gword(wq));
    if (!(weight_of(path_q.hw) == weight_of(path.hw)))
        throw InternalError("psi_inverse: witness component has a different highest weight");
    GWord cur = path_q.hw;
    for (auto it = path.colors.rbegin(); it != path.colors.rend(); ++it) {
        auto dn = word_f(*it, cur);
        if (!dn) throw InternalError("psi_inverse: missing arrow during transport");
        cur = *dn;
    }
    return to_word(cur);
}

namespace {

bool is_partition(const std::vector<int>& h, int rank) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < 1 || h[i] > rank) return false;
        if (i && h[i] > h[i - 1]) return false;
    }
    return true;
}

std::vector<std::vector<int>> one_box_neighbors(const std::vector<int>& base, int rank,
                                                bool allow_equal) {
    std::vector<std::vector<int>> outs;
    auto add = [&](std::vector<int> h) {
        if (is_partition(h, rank) && std::find(outs.begin(), outs.end(), h) == outs.end())
            outs.push_back(std::move(h));
    };
    if (allow_equal) outs.push_back(base);
    for (std::size_t c = 0; c <= base.size(); ++c) {
        std::vector<int> h = base;
        if (c < h.size()) ++h[c];
        else h.push_back(1);
        add(std::move(h));
    }
    for (std::size_t c = 0; c < base.size(); ++c) {
        std::vector<int> h = base;
        --h[c];
        if (h[c] == 0) h.erase(h.begin() + c);
        add(std::move(h));
    }
    return outs;
}

}  // namespace

std::vector<OscillatingTableau> all_oscillating_tableaux(LieType t, int length) {
    std::vector<OscillatingTableau> out;
    if (length <= 0) return out;
    std::vector<Shape> cur;
    auto rec = [&](auto&& self, const Shape& s) -> void {
        cur.push_back(s);
        if ((int)cur.size() == length) {
            out.emplace_back(t, cur);
        } else {
            const Shape& base = cur.back();
            bool allow_equal = t.family == LieFamily::B && !base.heights.empty() &&
                               base.heights.front() == t.rank;
            for (auto& h : one_box_neighbors(base.heights, t.rank, allow_equal)) {
                bool has_n = !h.empty() && h.front() == t.rank;
                std::vector<Eps> eps_options;
                if (t.family == LieFamily::B || !has_n) eps_options = {Eps::Zero};
                else if (base.eps == Eps::Zero) eps_options = {Eps::Minus, Eps::Plus};
                else eps_options = {base.eps};
                for (Eps e : eps_options) self(self, Shape{h, e, SpinPart::None});
            }
        }
        cur.pop_back();
    };
    rec(rec, Shape{{1}, Eps::Zero, SpinPart::None});
    return out;
}

}  // namespace ortho
