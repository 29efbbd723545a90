#include "ortho/alphabet.hpp"

namespace ortho {

void validate_letter(LieType t, Letter x) {
    if (x.v == 0) {
        if (t.family == LieFamily::D)
            throw DomainError("letter 0 is not legal in type D");
        return;
    }
    int a = abs_value(x);
    if (a < 1 || a > t.rank)
        throw DomainError("letter " + format_letter(x) + " out of range for rank " +
                          std::to_string(t.rank));
}

Cmp compare_letters(LieType t, Letter x, Letter y) {
    validate_letter(t, x);
    validate_letter(t, y);
    if (x == y) return Cmp::Equal;
    if (t.family == LieFamily::D && abs_value(x) == t.rank && abs_value(y) == t.rank)
        return Cmp::Incomparable;  // {n, nbar}
    int kx = order_key(t, x), ky = order_key(t, y);
    return kx < ky ? Cmp::Less : Cmp::Greater;
}

std::vector<Letter> all_letters(LieType t) {
    std::vector<Letter> out;
    for (int k = 1; k <= t.rank; ++k) out.push_back(unbarred(k));
    if (t.family == LieFamily::B) out.push_back(zero_letter);
    for (int k = t.rank; k >= 1; --k) out.push_back(barred(k));
    return out;
}

std::string format_letter(Letter x) { return std::to_string(x.v); }

Letter parse_letter(LieType t, const std::string& token) {
    if (token.empty()) throw DomainError("empty letter token");
    std::size_t i = 0;
    bool neg = false;
    if (token[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == token.size()) throw DomainError("bad letter token '" + token + "'");
    int val = 0;
    for (; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
            throw DomainError("bad letter token '" + token + "'");
        val = val * 10 + (token[i] - '0');
        if (val > 1000) throw DomainError("letter token too large '" + token + "'");
    }
    if (neg && val == 0) throw DomainError("bad letter token '-0'");
    Letter x{neg ? -val : val};
    validate_letter(t, x);
    return x;
}

}  // namespace ortho
