#pragma once

#include "ortho/plactic.hpp"

namespace ortho {

// The Q-symbol: the sequence of shapes of the prefix P-symbols.
struct OscillatingTableau {
    LieType type;
    std::vector<Shape> steps;

    explicit OscillatingTableau(LieType t) : type(t) {}
    OscillatingTableau(LieType t, std::vector<Shape> ss) : type(t), steps(std::move(ss)) {}
    std::size_t length() const { return steps.size(); }
    bool operator==(const OscillatingTableau&) const = default;
};

// Throws DomainError when the step or epsilon rules are violated.
void validate_oscillating(const OscillatingTableau& q);
bool is_valid_oscillating(const OscillatingTableau& q);

OscillatingTableau q_symbol(const Word& w);

std::pair<Tabloid, OscillatingTableau> psi(const Word& w);

// The unique word with psi(w) = (P, Q).
Word psi_inverse(const Tabloid& P, const OscillatingTableau& Q);

// The standard witness word w_Q with Q(w_Q) = Q.
Word oscillating_witness(const OscillatingTableau& Q);

// All valid oscillating tableaux of the given length (desk-scale search).
std::vector<OscillatingTableau> all_oscillating_tableaux(LieType t, int length);

}  // namespace ortho
