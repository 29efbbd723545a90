#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: illegal letters, malformed text, domain violations. CLI exit 1.
struct DomainError : Error {
    using Error::Error;
};

// Broken invariant that the theory guarantees cannot break. Always a bug.
struct InternalError : Error {
    using Error::Error;
};

struct CannotSplitError : DomainError {
    using DomainError::DomainError;
};

enum class LieFamily : std::uint8_t { B, D };

struct LieType {
    LieFamily family;
    int rank;  // n

    LieType(LieFamily f, int n) : family(f), rank(n) {
        if (n < 2 || n > 32)
            throw DomainError("rank must be in [2, 32], got " + std::to_string(n));
    }
    bool operator==(const LieType&) const = default;
};

inline LieType type_b(int n) { return LieType(LieFamily::B, n); }
inline LieType type_d(int n) { return LieType(LieFamily::D, n); }

// A letter of B_n = {1,...,n,0,nbar,...,1bar} or D_n (no 0).
// v > 0: unbarred v; v < 0: barred |v|; v == 0: the type-B letter 0.
struct Letter {
    int v = 0;
    bool operator==(const Letter&) const = default;
};

inline Letter unbarred(int k) { return Letter{k}; }
inline Letter barred(int k) { return Letter{-k}; }
inline constexpr Letter zero_letter{0};

inline bool is_barred(Letter x) { return x.v < 0; }
inline bool is_unbarred(Letter x) { return x.v > 0; }
inline bool is_zero(Letter x) { return x.v == 0; }
inline int abs_value(Letter x) { return x.v < 0 ? -x.v : x.v; }
inline Letter bar(Letter x) { return Letter{-x.v}; }  // 0bar == 0

void validate_letter(LieType t, Letter x);

// Position in the chain 1 < 2 < ... < n < 0 < nbar < ... < 1bar.
// For type D the key is still total except that n and nbar (keys n, n+2)
// are incomparable; compare_letters handles that case.
inline int order_key(LieType t, Letter x) {
    if (x.v > 0) return x.v;
    if (x.v == 0) return t.rank + 1;
    return 2 * t.rank + 2 + x.v;
}

enum class Cmp { Less, Equal, Greater, Incomparable };

Cmp compare_letters(LieType t, Letter x, Letter y);

// x <= y in the type's partial order (false when incomparable).
inline bool letter_le(LieType t, Letter x, Letter y) {
    Cmp c = compare_letters(t, x, y);
    return c == Cmp::Less || c == Cmp::Equal;
}
inline bool letter_lt(LieType t, Letter x, Letter y) {
    return compare_letters(t, x, y) == Cmp::Less;
}

// All letters of the alphabet in key order.
std::vector<Letter> all_letters(LieType t);

std::string format_letter(Letter x);
Letter parse_letter(LieType t, const std::string& token);

}  // namespace ortho
