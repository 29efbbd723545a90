#include "ortho/tableaux.hpp"

#include <algorithm>

namespace ortho {

std::string format_shape(const Shape& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.heights.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s.heights[i]);
    }
    out += ']';
    switch (s.eps) {
        case Eps::Minus: out += '-'; break;
        case Eps::Plus: out += '+'; break;
        case Eps::Zero: break;
    }
    switch (s.spin) {
        case SpinPart::None: break;
        case SpinPart::SpinB: out += "s"; break;
        case SpinPart::SpinDPlus: out += "s+"; break;
        case SpinPart::SpinDMinus: out += "s-"; break;
    }
    return out;
}

int box_count(const Shape& s) {
    int total = 0;
    for (int h : s.heights) total += h;
    return total;
}

void validate_shape(LieType t, const Shape& s) {
    for (std::size_t i = 0; i < s.heights.size(); ++i) {
        if (s.heights[i] < 1 || s.heights[i] > t.rank)
            throw DomainError("shape height out of range");
        if (i && s.heights[i] > s.heights[i - 1])
            throw DomainError("shape heights must weakly decrease");
    }
    if (t.family == LieFamily::B) {
        if (s.eps != Eps::Zero) throw DomainError("type B shapes carry no epsilon");
    } else {
        bool has_n = !s.heights.empty() && s.heights.front() == t.rank;
        if (has_n == (s.eps == Eps::Zero))
            throw DomainError("epsilon must be 0 exactly when no column has height n");
    }
}

Tabloid::Tabloid(LieType t, std::vector<Column> cols) : type(t), columns(std::move(cols)) {
    for (const Column& c : columns)
        if (!(c.type == type)) throw DomainError("tabloid column kind mismatch");
}

Word reading(const Tabloid& t) {
    Word w(t.type);
    for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it)
        w.letters.insert(w.letters.end(), it->cells.begin(), it->cells.end());
    return w;
}

Tabloid split_form(const Tabloid& t) {
    Tabloid out(t.type);
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        auto pair = try_split(t.columns[i]);
        if (!pair)
            throw CannotSplitError("column " + std::to_string(i + 1) + " is not admissible");
        out.columns.push_back(pair->l);
        out.columns.push_back(pair->r);
    }
    return out;
}

bool column_le(const Column& c1, const Column& c2) {
    if (!(c1.type == c2.type)) throw DomainError("column_le: kind mismatch");
    if (c1.height() < c2.height()) return false;
    for (int k = 0; k < c2.height(); ++k)
        if (!letter_le(c1.type, c1.cells[k], c2.cells[k])) return false;
    return true;
}

bool box_le(const Column& c1, const Column& c2) {
    auto p1 = try_split(c1), p2 = try_split(c2);
    if (!p1 || !p2) throw DomainError("box_le expects admissible columns");
    return column_le(p1->r, p2->l);
}

std::vector<AConfiguration> find_a_configurations(const Column& c1, const Column& c2) {
    if (!(c1.type == c2.type)) throw DomainError("find_a_configurations: kind mismatch");
    LieType t = c1.type;
    if (t.family != LieFamily::D)
        throw DomainError("a-configurations are a type-D notion");
    int n = t.rank;
    int h1 = c1.height(), h2 = c2.height();
    std::vector<AConfiguration> out;
    for (int p = 1; p <= h1; ++p) {
        Letter xp = c1.cells[p - 1];
        if (!is_unbarred(xp) || xp.v >= n) continue;
        int a = xp.v;
        for (int s = 1; s <= h2; ++s) {
            if (c2.cells[s - 1].v != -a) continue;
            for (int r = 1; r <= h1; ++r) {
                if (abs_value(c1.cells[r - 1]) != n) continue;
                for (int q = 1; q <= h2; ++q) {
                    if (abs_value(c2.cells[q - 1]) != n) continue;
                    if (!(p <= q && q < r && r <= s)) continue;
                    bool xr_bar = is_barred(c1.cells[r - 1]);
                    bool yq_bar = is_barred(c2.cells[q - 1]);
                    bool odd_span = (r - q + 1) % 2 == 1;
                    if (xr_bar != yq_bar && odd_span)
                        out.push_back({a, false, p, q, r, s});
                    else if (xr_bar == yq_bar && !odd_span)
                        out.push_back({a, true, p, q, r, s});
                }
            }
        }
    }
    return out;
}

bool is_orthogonal_tableau(const Tabloid& t) {
    for (const Column& c : t.columns)
        if (!is_admissible(c)) return false;
    for (std::size_t i = 0; i + 1 < t.columns.size(); ++i) {
        if (!box_le(t.columns[i], t.columns[i + 1])) return false;
        if (t.type.family == LieFamily::D) {
            auto ri = split_column(t.columns[i]).r;
            auto li1 = split_column(t.columns[i + 1]).l;
            for (const auto& cfg : find_a_configurations(ri, li1))
                if (cfg.mu() == t.type.rank - cfg.a) return false;
        }
    }
    return true;
}

Tabloid highest_weight_tableau(LieType t, const Shape& s) {
    validate_shape(t, s);
    Tabloid out(t);
    for (int h : s.heights) {
        std::vector<Letter> cells;
        for (int k = 1; k <= h; ++k) cells.push_back(unbarred(k));
        if (t.family == LieFamily::D && h == t.rank && s.eps == Eps::Minus)
            cells.back() = barred(t.rank);
        out.columns.emplace_back(t, cells);
    }
    return out;
}

Shape shape_of(const Tabloid& t) {
    Shape s;
    for (const Column& c : t.columns) s.heights.push_back(c.height());
    for (std::size_t i = 0; i + 1 < s.heights.size(); ++i)
        if (s.heights[i] < s.heights[i + 1])
            throw DomainError("shape_of: heights not weakly decreasing");
    if (t.type.family == LieFamily::D && !t.columns.empty() &&
        t.columns.front().height() == t.type.rank) {
        s.eps = column_membership(t.columns.front()) == HeightNClass::OmegaN ? Eps::Plus
                                                                             : Eps::Minus;
    } else {
        s.eps = Eps::Zero;
    }
    return s;
}

std::string render_grid(const Tabloid& t) {
    std::size_t width = 1;
    int maxh = 0;
    for (const Column& c : t.columns) {
        maxh = std::max(maxh, c.height());
        for (Letter x : c.cells) width = std::max(width, format_letter(x).size());
    }
    std::string out;
    for (int r = 0; r < maxh; ++r) {
        std::string line;
        for (const Column& c : t.columns) {
            std::string tok = r < c.height() ? format_letter(c.cells[r]) : "";
            tok.insert(0, width - tok.size(), ' ');
            if (!line.empty()) line += ' ';
            line += tok;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace ortho
