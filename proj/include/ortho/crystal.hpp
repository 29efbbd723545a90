#pragma once

#include <span>

#include "ortho/words.hpp"

namespace ortho {

// Kashiwara operators on single letters: the arrows of the vector crystal
// chain (type B) or forked chain (type D). nullopt is the Kashiwara zero.
std::optional<Letter> letter_f(LieType t, int i, Letter x);
std::optional<Letter> letter_e(LieType t, int i, Letter x);
int letter_eps(LieType t, int i, Letter x);
int letter_phi(LieType t, int i, Letter x);

std::optional<SpinColumn> spin_f(int i, const SpinColumn& c);
std::optional<SpinColumn> spin_e(int i, const SpinColumn& c);

int eps(int i, const GWord& w);
int phi(int i, const GWord& w);
std::optional<GWord> word_f(int i, const GWord& w);
std::optional<GWord> word_e(int i, const GWord& w);

inline int eps(int i, const Word& w) { return eps(i, to_gword(w)); }
inline int phi(int i, const Word& w) { return phi(i, to_gword(w)); }
std::optional<Word> word_f(int i, const Word& w);
std::optional<Word> word_e(int i, const Word& w);

bool is_highest_weight(const GWord& w);
inline bool is_highest_weight(const Word& w) { return is_highest_weight(to_gword(w)); }

// Greedy raising: repeatedly apply e_i at the smallest color with eps > 0.
// `colors` records the colors in the order applied, so
// w = f_{colors[0]} f_{colors[1]} ... f_{colors[r-1]} (hw).
struct HighestWeightPath {
    GWord hw;
    std::vector<int> colors;
};
HighestWeightPath highest_weight_path(const GWord& w);
inline HighestWeightPath highest_weight_path(const Word& w) {
    return highest_weight_path(to_gword(w));
}

// Places v's position inside the component of target_hw: applies v's lowering
// path to target_hw. Throws InternalError if an arrow is missing (the two
// components are not isomorphic).
GWord path_transport(const GWord& v, const GWord& target_hw);

// The relation ~ : same place in two isomorphic connected components.
bool same_place_equivalent(const GWord& a, const GWord& b);
inline bool same_place_equivalent(const Word& a, const Word& b) {
    return same_place_equivalent(to_gword(a), to_gword(b));
}

// The coplactic relation <-> : same connected component.
bool coplactic_equivalent(const GWord& a, const GWord& b);
inline bool coplactic_equivalent(const Word& a, const Word& b) {
    return coplactic_equivalent(to_gword(a), to_gword(b));
}

GWord weyl_action(int i, const GWord& v);
Letter weyl_action(LieType t, int i, Letter x);

// Applies s_i to a doubled epsilon-basis weight.
WeightVec weyl_action_weight(LieType t, int i, const WeightVec& wt);

// An explored connected component, vertices ordered lexicographically by
// their formatted text.
struct CrystalComponent {
    GWord hw;
    std::vector<GWord> vertices;
    std::vector<std::string> labels;  // parallel to vertices
    struct Edge {
        std::size_t from;
        int color;
        std::size_t to;
        auto operator<=>(const Edge&) const = default;
    };
    std::vector<Edge> edges;
    std::size_t hw_index = 0;

    std::optional<std::size_t> find(const std::string& label) const;
    bool contains(const GWord& v) const;
};

CrystalComponent explore_component(const GWord& hw, std::size_t max_vertices = 10'000'000);
inline CrystalComponent explore_component(const Word& hw, std::size_t max_vertices = 10'000'000) {
    return explore_component(to_gword(hw), max_vertices);
}

// Colored-digraph isomorphism rooted at the highest weight vertices.
bool components_isomorphic(const CrystalComponent& a, const CrystalComponent& b);

std::string to_dot(const CrystalComponent& comp);

// Kashiwara's S_m embedding computed by path following. The component's
// highest weight vertex must be a concatenation of the generator columns
// 1..k (and 1..(n-1) nbar for type D).
GWord s_m_embed(const GWord& v, int m);
inline Word s_m_embed(const Word& v, int m) { return to_word(s_m_embed(to_gword(v), m)); }

// Splits a highest weight letter word into generator factors.
std::vector<std::vector<Letter>> factor_generators(const GWord& hw);

}  // namespace ortho
