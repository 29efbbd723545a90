#include "ortho/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ortho {

std::optional<Letter> letter_f(LieType t, int i, Letter x) {
    int n = t.rank;
    if (i < 1 || i > n) throw DomainError("color out of range");
    validate_letter(t, x);
    if (t.family == LieFamily::B) {
        if (i < n) {
            if (x.v == i) return unbarred(i + 1);
            if (x.v == -(i + 1)) return barred(i);
            return std::nullopt;
        }
        // color n: n -> 0 -> nbar
        if (x.v == n) return zero_letter;
        if (is_zero(x)) return barred(n);
        return std::nullopt;
    }
    // type D
    if (i <= n - 2) {
        if (x.v == i) return unbarred(i + 1);
        if (x.v == -(i + 1)) return barred(i);
        return std::nullopt;
    }
    if (i == n - 1) {
        if (x.v == n - 1) return unbarred(n);
        if (x.v == -n) return barred(n - 1);
        return std::nullopt;
    }
    // i == n: n-1 -> nbar, n -> (n-1)bar
    if (x.v == n - 1) return barred(n);
    if (x.v == n) return barred(n - 1);
    return std::nullopt;
}

std::optional<Letter> letter_e(LieType t, int i, Letter x) {
    for (Letter y : all_letters(t)) {
        auto fy = letter_f(t, i, y);
        if (fy && *fy == x) return y;
    }
    return std::nullopt;
}

int letter_eps(LieType t, int i, Letter x) {
    int k = 0;
    Letter cur = x;
    while (auto up = letter_e(t, i, cur)) {
        cur = *up;
        ++k;
    }
    return k;
}

int letter_phi(LieType t, int i, Letter x) {
    int k = 0;
    Letter cur = x;
    while (auto dn = letter_f(t, i, cur)) {
        cur = *dn;
        ++k;
    }
    return k;
}

std::optional<SpinColumn> spin_f(int i, const SpinColumn& c) {
    LieType t = c.type;
    int n = t.rank;
    if (i < 1 || i > n) throw DomainError("color out of range");
    auto has_bar = [&](int k) { return bool(c.mask >> (k - 1) & 1); };
    if (i < n) {
        // turn (i, (i+1)bar) into (i+1, ibar)
        if (!has_bar(i) && has_bar(i + 1)) {
            std::uint64_t m = c.mask;
            m |= 1ull << (i - 1);
            m &= ~(1ull << i);
            return SpinColumn(t, m);
        }
        return std::nullopt;
    }
    if (t.family == LieFamily::B) {
        if (!has_bar(n)) return SpinColumn(t, c.mask | (1ull << (n - 1)));
        return std::nullopt;
    }
    // type D color n: turn (n-1, n) into (nbar, (n-1)bar)
    if (!has_bar(n - 1) && !has_bar(n))
        return SpinColumn(t, c.mask | (1ull << (n - 2)) | (1ull << (n - 1)));
    return std::nullopt;
}

std::optional<SpinColumn> spin_e(int i, const SpinColumn& c) {
    LieType t = c.type;
    int n = t.rank;
    if (i < 1 || i > n) throw DomainError("color out of range");
    auto has_bar = [&](int k) { return bool(c.mask >> (k - 1) & 1); };
    if (i < n) {
        if (has_bar(i) && !has_bar(i + 1)) {
            std::uint64_t m = c.mask;
            m &= ~(1ull << (i - 1));
            m |= 1ull << i;
            return SpinColumn(t, m);
        }
        return std::nullopt;
    }
    if (t.family == LieFamily::B) {
        if (has_bar(n)) return SpinColumn(t, c.mask & ~(1ull << (n - 1)));
        return std::nullopt;
    }
    if (has_bar(n - 1) && has_bar(n))
        return SpinColumn(t, c.mask & ~((1ull << (n - 2)) | (1ull << (n - 1))));
    return std::nullopt;
}

namespace {

int elt_eps(LieType t, int i, const GLetter& e) {
    if (std::holds_alternative<Letter>(e)) return letter_eps(t, i, std::get<Letter>(e));
    return spin_e(i, std::get<SpinColumn>(e)) ? 1 : 0;
}

int elt_phi(LieType t, int i, const GLetter& e) {
    if (std::holds_alternative<Letter>(e)) return letter_phi(t, i, std::get<Letter>(e));
    return spin_f(i, std::get<SpinColumn>(e)) ? 1 : 0;
}

GLetter elt_f(LieType t, int i, const GLetter& e) {
    if (std::holds_alternative<Letter>(e)) {
        auto r = letter_f(t, i, std::get<Letter>(e));
        if (!r) throw InternalError("f_i unexpectedly null on letter");
        return *r;
    }
    auto r = spin_f(i, std::get<SpinColumn>(e));
    if (!r) throw InternalError("f_i unexpectedly null on spin column");
    return *r;
}

GLetter elt_e(LieType t, int i, const GLetter& e) {
    if (std::holds_alternative<Letter>(e)) {
        auto r = letter_e(t, i, std::get<Letter>(e));
        if (!r) throw InternalError("e_i unexpectedly null on letter");
        return *r;
    }
    auto r = spin_e(i, std::get<SpinColumn>(e));
    if (!r) throw InternalError("e_i unexpectedly null on spin column");
    return *r;
}

// One left-to-right pass implementing the tensor rule: write -^eps +^phi per
// factor, cancel "+-" pairs. f_i acts at the leftmost uncancelled plus, e_i
// at the rightmost uncancelled minus.
struct Signature {
    int eps = 0;
    int phi = 0;
    int e_target = -1;
    int f_target = -1;
};

Signature signature_scan(const GWord& w, int i) {
    Signature sig;
    std::vector<int> plus_stack;
    int last_minus = -1, minus_count = 0;
    for (std::size_t j = 0; j < w.elems.size(); ++j) {
        int e = elt_eps(w.type, i, w.elems[j]);
        int f = elt_phi(w.type, i, w.elems[j]);
        for (int k = 0; k < e; ++k) {
            if (!plus_stack.empty()) plus_stack.pop_back();
            else {
                ++minus_count;
                last_minus = (int)j;
            }
        }
        for (int k = 0; k < f; ++k) plus_stack.push_back((int)j);
    }
    sig.eps = minus_count;
    sig.phi = (int)plus_stack.size();
    sig.e_target = last_minus;
    sig.f_target = plus_stack.empty() ? -1 : plus_stack.front();
    return sig;
}

}  // namespace

int eps(int i, const GWord& w) { return signature_scan(w, i).eps; }
int phi(int i, const GWord& w) { return signature_scan(w, i).phi; }

std::optional<GWord> word_f(int i, const GWord& w) {
    auto sig = signature_scan(w, i);
    if (sig.f_target < 0) return std::nullopt;
    GWord out = w;
    out.elems[sig.f_target] = elt_f(w.type, i, out.elems[sig.f_target]);
    return out;
}

std::optional<GWord> word_e(int i, const GWord& w) {
    auto sig = signature_scan(w, i);
    if (sig.e_target < 0) return std::nullopt;
    GWord out = w;
    out.elems[sig.e_target] = elt_e(w.type, i, out.elems[sig.e_target]);
    return out;
}

std::optional<Word> word_f(int i, const Word& w) {
    auto r = word_f(i, to_gword(w));
    if (!r) return std::nullopt;
    return to_word(*r);
}

std::optional<Word> word_e(int i, const Word& w) {
    auto r = word_e(i, to_gword(w));
    if (!r) return std::nullopt;
    return to_word(*r);
}

bool is_highest_weight(const GWord& w) {
    for (int i = 1; i <= w.type.rank; ++i)
        if (eps(i, w) > 0) return false;
    return true;
}

HighestWeightPath highest_weight_path(const GWord& w) {
    HighestWeightPath path{w, {}};
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= path.hw.type.rank; ++i) {
            if (auto up = word_e(i, path.hw)) {
                path.hw = *up;
                path.colors.push_back(i);
                moved = true;
                break;
            }
        }
    }
    return path;
}

GWord path_transport(const GWord& v, const GWord& target_hw) {
    auto path = highest_weight_path(v);
    if (!is_highest_weight(target_hw))
        throw DomainError("path_transport target is not a highest weight vertex");
    GWord cur = target_hw;
    for (auto it = path.colors.rbegin(); it != path.colors.rend(); ++it) {
        auto dn = word_f(*it, cur);
        if (!dn) throw InternalError("path_transport: missing arrow, components not isomorphic");
        cur = *dn;
    }
    return cur;
}

bool same_place_equivalent(const GWord& a, const GWord& b) {
    if (!(a.type == b.type)) return false;
    auto pa = highest_weight_path(a);
    auto pb = highest_weight_path(b);
    return pa.colors == pb.colors && weight_of(pa.hw) == weight_of(pb.hw);
}

bool coplactic_equivalent(const GWord& a, const GWord& b) {
    if (!(a.type == b.type)) return false;
    return highest_weight_path(a).hw == highest_weight_path(b).hw;
}

GWord weyl_action(int i, const GWord& v) {
    int k = phi(i, v) - eps(i, v);
    GWord cur = v;
    if (k >= 0) {
        for (int s = 0; s < k; ++s) {
            auto dn = word_f(i, cur);
            if (!dn) throw InternalError("weyl_action: f_i string too short");
            cur = *dn;
        }
    } else {
        for (int s = 0; s < -k; ++s) {
            auto up = word_e(i, cur);
            if (!up) throw InternalError("weyl_action: e_i string too short");
            cur = *up;
        }
    }
    return cur;
}

Letter weyl_action(LieType t, int i, Letter x) {
    GWord g(t);
    g.elems.emplace_back(x);
    return std::get<Letter>(weyl_action(i, g).elems[0]);
}

WeightVec weyl_action_weight(LieType t, int i, const WeightVec& wt) {
    WeightVec out = wt;
    int n = t.rank;
    if (i < n) {
        std::swap(out.doubled[i - 1], out.doubled[i]);
    } else if (t.family == LieFamily::B) {
        out.doubled[n - 1] = -out.doubled[n - 1];
    } else {
        std::swap(out.doubled[n - 2], out.doubled[n - 1]);
        out.doubled[n - 2] = -out.doubled[n - 2];
        out.doubled[n - 1] = -out.doubled[n - 1];
    }
    return out;
}

std::optional<std::size_t> CrystalComponent::find(const std::string& label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return (std::size_t)(it - labels.begin());
}

bool CrystalComponent::contains(const GWord& v) const { return find(format_gword(v)).has_value(); }

CrystalComponent explore_component(const GWord& hw, std::size_t max_vertices) {
    if (!is_highest_weight(hw))
        throw DomainError("explore_component seed is not a highest weight vertex");
    std::map<std::string, std::size_t> index;
    std::vector<GWord> verts;
    std::vector<CrystalComponent::Edge> raw_edges;
    std::deque<std::size_t> queue;

    auto intern = [&](const GWord& v) {
        std::string key = format_gword(v);
        auto [it, fresh] = index.try_emplace(key, verts.size());
        if (fresh) {
            if (verts.size() >= max_vertices)
                throw DomainError("explore_component: vertex cap exceeded");
            verts.push_back(v);
            queue.push_back(it->second);
        }
        return it->second;
    };

    std::size_t root = intern(hw);
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        GWord v = verts[u];
        for (int i = 1; i <= hw.type.rank; ++i) {
            if (auto dn = word_f(i, v)) raw_edges.push_back({u, i, intern(*dn)});
        }
    }

    // Canonical order: lexicographic on the formatted words.
    std::vector<std::size_t> order(verts.size());
    for (std::size_t k = 0; auto& [key, idx] : index) order[idx] = k++, (void)key;
    CrystalComponent comp{hw, {}, {}, {}, 0};
    comp.vertices.resize(verts.size(), hw);
    comp.labels.resize(verts.size());
    for (std::size_t old = 0; old < verts.size(); ++old) {
        comp.vertices[order[old]] = verts[old];
        comp.labels[order[old]] = format_gword(verts[old]);
    }
    for (auto& e : raw_edges) comp.edges.push_back({order[e.from], e.color, order[e.to]});
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.hw_index = order[root];
    return comp;
}

bool components_isomorphic(const CrystalComponent& a, const CrystalComponent& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
    if (!(a.hw.type == b.hw.type)) return false;
    int n = a.hw.type.rank;
    std::vector<std::size_t> match(a.vertices.size(), SIZE_MAX);
    std::vector<bool> hit(b.vertices.size(), false);
    match[a.hw_index] = b.hw_index;
    hit[b.hw_index] = true;
    std::deque<std::size_t> queue{a.hw_index};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (int i = 1; i <= n; ++i) {
            auto da = word_f(i, a.vertices[u]);
            auto db = word_f(i, b.vertices[match[u]]);
            if (da.has_value() != db.has_value()) return false;
            if (!da) continue;
            auto ia = a.find(format_gword(*da));
            auto ib = b.find(format_gword(*db));
            if (!ia || !ib) throw InternalError("components_isomorphic: vertex missing");
            if (match[*ia] == SIZE_MAX) {
                if (hit[*ib]) return false;
                match[*ia] = *ib;
                hit[*ib] = true;
                queue.push_back(*ia);
            } else if (match[*ia] != *ib) {
                return false;
            }
        }
    }
    for (auto m : match)
        if (m == SIZE_MAX) return false;
    return true;
}

std::string to_dot(const CrystalComponent& comp) {
    std::string out = "digraph crystal {\n  rankdir=TB;\n";
    for (const auto& label : comp.labels) out += "  \"" + label + "\";\n";
    for (const auto& e : comp.edges)
        out += "  \"" + comp.labels[e.from] + "\" -> \"" + comp.labels[e.to] + "\" [label=\"" +
               std::to_string(e.color) + "\"];\n";
    out += "}\n";
    return out;
}

std::vector<std::vector<Letter>> factor_generators(const GWord& hw) {
    int n = hw.type.rank;
    std::vector<std::vector<Letter>> factors;
    std::vector<Letter> cur;
    auto flush = [&] {
        if (cur.empty()) return;
        // valid generator: 1,2,...,k or (type D) 1,...,n-1,nbar
        for (std::size_t j = 0; j < cur.size(); ++j) {
            bool last = j + 1 == cur.size();
            bool plain = cur[j].v == (int)j + 1;
            bool dbar = hw.type.family == LieFamily::D && last && (int)j + 1 == n &&
                        cur[j].v == -n;
            if (!(plain || dbar))
                throw DomainError("highest weight vertex is not a product of generator columns: " +
                                  format_gword(hw));
        }
        factors.push_back(cur);
        cur.clear();
    };
    for (const GLetter& e : hw.elems) {
        if (!std::holds_alternative<Letter>(e))
            throw DomainError("s_m embedding needs a letter word");
        Letter x = std::get<Letter>(e);
        if (x.v == 1) flush();
        cur.push_back(x);
    }
    flush();
    return factors;
}

GWord s_m_embed(const GWord& v, int m) {
    if (m < 1) throw DomainError("s_m_embed: m must be positive");
    auto path = highest_weight_path(v);
    auto factors = factor_generators(path.hw);
    GWord stretched(v.type);
    for (const auto& f : factors)
        for (int rep = 0; rep < m; ++rep)
            for (Letter x : f) stretched.elems.emplace_back(x);
    GWord cur = stretched;
    for (auto it = path.colors.rbegin(); it != path.colors.rend(); ++it) {
        for (int s = 0; s < m; ++s) {
            auto dn = word_f(*it, cur);
            if (!dn) throw InternalError("s_m_embed: f^m hit zero mid-path");
            cur = *dn;
        }
    }
    return cur;
}

}  // namespace ortho
