#pragma once

#include "ortho/columns.hpp"

namespace ortho {

enum class Eps { Minus, Zero, Plus };

// Which spin factor a generalized shape carries (None for plain shapes).
enum class SpinPart { None, SpinB, SpinDPlus, SpinDMinus };

// The shape Y(lambda): weakly decreasing column heights, the {-,0,+} marker
// for type D, and the half-width spin column flag used by the generalized
// tableaux.
struct Shape {
    std::vector<int> heights;
    Eps eps = Eps::Zero;
    SpinPart spin = SpinPart::None;
    bool operator==(const Shape&) const = default;
};

std::string format_shape(const Shape& s);
void validate_shape(LieType t, const Shape& s);
int box_count(const Shape& s);

// Columns left to right; a tableau candidate has weakly decreasing heights.
struct Tabloid {
    LieType type;
    std::vector<Column> columns;

    explicit Tabloid(LieType t) : type(t) {}
    Tabloid(LieType t, std::vector<Column> cols);
    bool empty() const { return columns.empty(); }
    bool operator==(const Tabloid&) const = default;
};

// w(T) = w(C_r) ... w(C_1), rightmost column first.
Word reading(const Tabloid& t);

// spl(T) = (lC_1 rC_1)(lC_2 rC_2)...
Tabloid split_form(const Tabloid& t);

// C1 <= C2: h(C1) >= h(C2) and rows of C1C2 weakly increase left to right.
bool column_le(const Column& c1, const Column& c2);
// C1 <| C2 when rC1 <= lC2.
bool box_le(const Column& c1, const Column& c2);

struct AConfiguration {
    int a;  // unbarred, a < n
    bool even;
    int p, q, r, s;
    int mu() const { return s - p; }
    bool operator==(const AConfiguration&) const = default;
};

// All a-configurations in the two-column tabloid C1 C2 (positions are row
// indices from the top of each column).
std::vector<AConfiguration> find_a_configurations(const Column& c1, const Column& c2);

bool is_orthogonal_tableau(const Tabloid& t);

Tabloid highest_weight_tableau(LieType t, const Shape& s);

// Requires an orthogonal tableau; reads the heights and, for type D, the
// {-,0,+} marker off the first column.
Shape shape_of(const Tabloid& t);

std::string render_grid(const Tabloid& t);

}  // namespace ortho
