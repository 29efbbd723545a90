#include "ortho/serialize.hpp"

namespace ortho {

namespace {

std::string family_str(LieType t) { return t.family == LieFamily::B ? "B" : "D"; }

std::string eps_str(Eps e) {
    switch (e) {
        case Eps::Minus: return "-";
        case Eps::Zero: return "0";
        case Eps::Plus: return "+";
    }
    return "0";
}

Eps eps_from(const std::string& s) {
    if (s == "-") return Eps::Minus;
    if (s == "0") return Eps::Zero;
    if (s == "+") return Eps::Plus;
    throw DomainError("bad epsilon '" + s + "'");
}

}  // namespace

LieType lietype_from_json(const json& j) {
    if (!j.contains("type") || !j.contains("rank"))
        throw DomainError("json needs \"type\" and \"rank\"");
    std::string fam = j.at("type").get<std::string>();
    int rank = j.at("rank").get<int>();
    if (fam == "B") return type_b(rank);
    if (fam == "D") return type_d(rank);
    throw DomainError("bad type '" + fam + "'");
}

json to_json(const Tabloid& t) {
    json j;
    j["type"] = family_str(t.type);
    j["rank"] = t.type.rank;
    json cols = json::array();
    for (const Column& c : t.columns) {
        json col = json::array();
        for (Letter x : c.cells) col.push_back(format_letter(x));
        cols.push_back(col);
    }
    j["columns"] = cols;
    if (t.type.family == LieFamily::D && is_orthogonal_tableau(t))
        j["epsilon"] = eps_str(shape_of(t).eps);
    return j;
}

Tabloid tabloid_from_json(const json& j) {
    LieType t = lietype_from_json(j);
    Tabloid out(t);
    for (const auto& col : j.at("columns")) {
        std::vector<Letter> cells;
        for (const auto& tok : col) cells.push_back(parse_letter(t, tok.get<std::string>()));
        out.columns.emplace_back(t, cells);
    }
    return out;
}

json to_json(LieType t, const Shape& s) {
    json j;
    j["column_heights"] = s.heights;
    if (t.family == LieFamily::D) j["epsilon"] = eps_str(s.eps);
    switch (s.spin) {
        case SpinPart::None: break;
        case SpinPart::SpinB: j["spin"] = "B"; break;
        case SpinPart::SpinDPlus: j["spin"] = "D+"; break;
        case SpinPart::SpinDMinus: j["spin"] = "D-"; break;
    }
    return j;
}

Shape shape_from_json(const json& j) {
    Shape s;
    s.heights = j.at("column_heights").get<std::vector<int>>();
    if (j.contains("epsilon")) s.eps = eps_from(j.at("epsilon").get<std::string>());
    if (j.contains("spin")) {
        std::string sp = j.at("spin").get<std::string>();
        if (sp == "B") s.spin = SpinPart::SpinB;
        else if (sp == "D+") s.spin = SpinPart::SpinDPlus;
        else if (sp == "D-") s.spin = SpinPart::SpinDMinus;
        else throw DomainError("bad spin part '" + sp + "'");
    }
    return s;
}

json to_json(const OscillatingTableau& q) {
    json j;
    j["type"] = family_str(q.type);
    j["rank"] = q.type.rank;
    json steps = json::array();
    for (const Shape& s : q.steps) steps.push_back(to_json(q.type, s));
    j["steps"] = steps;
    return j;
}

OscillatingTableau oscillating_from_json(const json& j) {
    LieType t = lietype_from_json(j);
    OscillatingTableau q(t);
    for (const auto& s : j.at("steps")) q.steps.push_back(shape_from_json(s));
    validate_oscillating(q);
    return q;
}

json to_json(const SkewTableau& t) {
    json j;
    j["type"] = family_str(t.type);
    j["rank"] = t.type.rank;
    j["inner"] = t.offsets;
    json cols = json::array();
    for (const Column& c : t.columns) {
        json col = json::array();
        for (Letter x : c.cells) col.push_back(format_letter(x));
        cols.push_back(col);
    }
    j["columns"] = cols;
    return j;
}

SkewTableau skew_from_json(const json& j) {
    LieType t = lietype_from_json(j);
    std::vector<int> offs = j.at("inner").get<std::vector<int>>();
    std::vector<Column> cols;
    for (const auto& col : j.at("columns")) {
        std::vector<Letter> cells;
        for (const auto& tok : col) cells.push_back(parse_letter(t, tok.get<std::string>()));
        cols.emplace_back(t, cells);
    }
    return SkewTableau(t, offs, cols);
}

}  // namespace ortho
