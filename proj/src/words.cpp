#include "ortho/words.hpp"

#include <algorithm>
#include <bit>

namespace ortho {

Word::Word(LieType t, std::vector<Letter> ls) : type(t), letters(std::move(ls)) {
    for (Letter x : letters) validate_letter(type, x);
}

SpinColumn::SpinColumn(LieType t, std::uint64_t m) : type(t), mask(m) {
    if (t.rank < 64 && (m >> t.rank) != 0)
        throw DomainError("spin column mask out of range for rank " + std::to_string(t.rank));
}

std::vector<Letter> SpinColumn::letters() const {
    std::vector<Letter> out;
    for (int k = 1; k <= type.rank; ++k)
        if (!(mask >> (k - 1) & 1)) out.push_back(unbarred(k));
    for (int k = type.rank; k >= 1; --k)
        if (mask >> (k - 1) & 1) out.push_back(barred(k));
    return out;
}

bool SpinColumn::contains(Letter x) const {
    if (is_zero(x)) return false;
    int k = abs_value(x);
    if (k < 1 || k > type.rank) return false;
    bool b = mask >> (k - 1) & 1;
    return b == is_barred(x);
}

Letter SpinColumn::greatest() const {
    auto ls = letters();
    return ls.back();
}

int SpinColumn::barred_count() const { return std::popcount(mask); }

SpinColumn spin_cp(LieType t, int p) {
    if (p < 0 || p > t.rank) throw DomainError("spin_cp: p out of range");
    std::uint64_t full = t.rank == 64 ? ~0ull : (1ull << t.rank) - 1;
    std::uint64_t unb = p == 0 ? 0 : (1ull << p) - 1;
    return SpinColumn(t, full & ~unb);
}

SpinColumn spin_from_letters(LieType t, const std::vector<Letter>& ls) {
    if ((int)ls.size() != t.rank)
        throw DomainError("spin column must have exactly rank letters");
    std::uint64_t mask = 0, seen = 0;
    for (Letter x : ls) {
        if (is_zero(x)) throw DomainError("spin column cannot contain 0");
        int k = abs_value(x);
        if (k < 1 || k > t.rank) throw DomainError("spin column letter out of range");
        if (seen >> (k - 1) & 1)
            throw DomainError("spin column contains a pair or repeated value");
        seen |= 1ull << (k - 1);
        if (is_barred(x)) mask |= 1ull << (k - 1);
    }
    return SpinColumn(t, mask);
}

std::vector<SpinColumn> all_spin_columns(LieType t) {
    std::vector<SpinColumn> out;
    std::uint64_t total = 1ull << t.rank;
    for (std::uint64_t m = 0; m < total; ++m) out.emplace_back(t, m);
    return out;
}

SpinVariant spin_variant(const SpinColumn& c) {
    if (c.type.family != LieFamily::D)
        throw DomainError("spin_variant is a type-D notion");
    return c.barred_count() % 2 == 0 ? SpinVariant::LambdaN : SpinVariant::LambdaNMinus1;
}

GWord to_gword(const Word& w) {
    GWord g(w.type);
    for (Letter x : w.letters) g.elems.emplace_back(x);
    return g;
}

Word to_word(const GWord& w) {
    Word out(w.type);
    for (const GLetter& e : w.elems) {
        if (!std::holds_alternative<Letter>(e))
            throw DomainError("word contains a spin column");
        out.letters.push_back(std::get<Letter>(e));
    }
    return out;
}

GWord spin_to_gword(const SpinColumn& c) {
    GWord g(c.type);
    g.elems.emplace_back(c);
    return g;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    if (doubled.size() != o.doubled.size()) throw InternalError("weight rank mismatch");
    for (std::size_t i = 0; i < doubled.size(); ++i) doubled[i] += o.doubled[i];
    return *this;
}

std::vector<int> d_vector(const Word& w) {
    std::vector<int> d(w.type.rank, 0);
    for (Letter x : w.letters) {
        if (is_unbarred(x)) ++d[x.v - 1];
        else if (is_barred(x)) --d[-x.v - 1];
    }
    return d;
}

WeightVec weight_of_letter(LieType t, Letter x) {
    WeightVec wt{std::vector<int>(t.rank, 0)};
    if (is_unbarred(x)) wt.doubled[x.v - 1] = 2;
    else if (is_barred(x)) wt.doubled[-x.v - 1] = -2;
    return wt;
}

WeightVec weight_of_spin(const SpinColumn& c) {
    WeightVec wt{std::vector<int>(c.type.rank, 0)};
    for (int k = 1; k <= c.type.rank; ++k)
        wt.doubled[k - 1] = (c.mask >> (k - 1) & 1) ? -1 : 1;
    return wt;
}

WeightVec weight_of(const Word& w) {
    auto d = d_vector(w);
    WeightVec wt{std::vector<int>(d.size())};
    for (std::size_t i = 0; i < d.size(); ++i) wt.doubled[i] = 2 * d[i];
    return wt;
}

WeightVec weight_of(const GWord& w) {
    WeightVec wt{std::vector<int>(w.type.rank, 0)};
    for (const GLetter& e : w.elems) {
        if (std::holds_alternative<Letter>(e))
            wt += weight_of_letter(w.type, std::get<Letter>(e));
        else
            wt += weight_of_spin(std::get<SpinColumn>(e));
    }
    return wt;
}

OmegaCoords omega_coordinates(const Word& w) {
    auto d = d_vector(w);
    int n = w.type.rank;
    OmegaCoords oc;
    oc.coeffs.resize(n, 0);
    if (w.type.family == LieFamily::D && d[n - 1] < 0) {
        oc.uses_bar_n = true;
        oc.coeffs[n - 1] = -d[n - 1];
        if (n >= 2) oc.coeffs[n - 2] = d[n - 2] + d[n - 1];
        for (int i = 0; i + 2 < n; ++i) oc.coeffs[i] = d[i] - d[i + 1];
    } else {
        oc.coeffs[n - 1] = d[n - 1];
        for (int i = 0; i + 1 < n; ++i) oc.coeffs[i] = d[i] - d[i + 1];
    }
    return oc;
}

std::string format_word(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        out += format_letter(w.letters[i]);
    }
    return out;
}

std::string format_spin(const SpinColumn& c) {
    std::string out = "[";
    auto ls = c.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) out += ' ';
        out += format_letter(ls[i]);
    }
    out += ']';
    return out;
}

std::string format_gword(const GWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.elems.size(); ++i) {
        if (i) out += ' ';
        if (std::holds_alternative<Letter>(w.elems[i]))
            out += format_letter(std::get<Letter>(w.elems[i]));
        else
            out += format_spin(std::get<SpinColumn>(w.elems[i]));
    }
    return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

Word parse_word(LieType t, const std::string& text) {
    Word w(t);
    for (const auto& tok : split_ws(text)) {
        if (tok.find('[') != std::string::npos)
            throw DomainError("spin column token not allowed in a plain word");
        w.letters.push_back(parse_letter(t, tok));
    }
    return w;
}

GWord parse_gword(LieType t, const std::string& text) {
    GWord g(t);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] == '[') {
            auto close = text.find(']', i);
            if (close == std::string::npos) throw DomainError("unterminated spin column '['");
            std::vector<Letter> ls;
            for (const auto& tok : split_ws(text.substr(i + 1, close - i - 1)))
                ls.push_back(parse_letter(t, tok));
            g.elems.emplace_back(spin_from_letters(t, ls));
            i = close + 1;
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace((unsigned char)text[j]) && text[j] != '[') ++j;
            g.elems.emplace_back(parse_letter(t, text.substr(i, j - i)));
            i = j;
        }
        skip_ws();
    }
    return g;
}

}  // namespace ortho
