#pragma once

#include <functional>

#include "ortho/plactic.hpp"

namespace ortho {

// A skew filling: column c starts `offsets[c]` rows below the top. Type B
// only; the slides run on the split form over C_n (no letter 0 there).
struct SkewTableau {
    LieType type;
    std::vector<int> offsets;
    std::vector<Column> columns;

    SkewTableau(LieType t, std::vector<int> offs, std::vector<Column> cols);
    bool operator==(const SkewTableau&) const = default;
};

Word reading(const SkewTableau& t);
bool is_skew_orthogonal(const SkewTableau& t);

// The split grid with punctures. Rows and columns are 1-based; column pairs
// (2i-1, 2i) come from the original column i. The active puncture is the
// last one in `holes`: a duplicated inner corner opens two punctures and the
// right one travels to the border before the left one starts.
struct PuncturedSplitForm {
    LieType type;
    int ncols = 0;
    std::vector<int> top;  // row of the first cell, per column
    std::vector<int> bot;  // row of the last cell (top-1 when empty)
    std::vector<std::vector<Letter>> cells;  // cells[c][r - top[c]]
    std::vector<std::pair<int, int>> holes;    // (row, col), active one last
    // The letter each hole displaced when it last entered its column
    // horizontally (nullopt right after opening or a pair-level move).
    std::vector<std::optional<Letter>> owed;
    std::vector<std::pair<int, int>> retired;  // shown in render until the corner ends

    explicit PuncturedSplitForm(LieType t) : type(t) {}
    bool is_hole(int row, int col) const;
    std::optional<Letter> at(int row, int col) const;
    void set(int row, int col, Letter x);
    std::string render() const;
};

PuncturedSplitForm split_grid(const SkewTableau& t);

// One elementary slide of the active puncture. Returns false when the
// puncture sat at an outer corner and has been removed from the shape.
bool slide_step(PuncturedSplitForm& g);

struct RectifyOptions {
    // Picks the next inner corner among the available ones (sorted topmost
    // first); receives the number of corners. Defaults to picking 0.
    std::function<std::size_t(std::size_t)> corner_choice;
    // Called on the initial grid and after every elementary slide.
    std::function<void(const PuncturedSplitForm&)> trace;
};

Tabloid rectify(const SkewTableau& t);
Tabloid rectify(const SkewTableau& t, const RectifyOptions& opts);

}  // namespace ortho
