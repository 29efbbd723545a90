#include "doctest.h"
#include "ortho/crystal.hpp"
#include "ortho/serialize.hpp"
#include "ortho/tableaux.hpp"

using namespace ortho;

namespace {

Column col(LieType t, const char* text) { return Column(t, parse_word(t, text).letters); }

}  // namespace

TEST_CASE("readings") {
    LieType b2 = type_b(2);
    Tabloid one(b2, {col(b2, "1 2")});
    CHECK(format_word(reading(one)) == "1 2");
    Tabloid two(b2, {col(b2, "1"), col(b2, "2")});
    CHECK(format_word(reading(two)) == "2 1");
    LieType b4 = type_b(4);
    Tabloid worked(b4, {col(b4, "3 4 0 0"), col(b4, "3 0 -2"), col(b4, "4 -4")});
    CHECK(format_word(reading(worked)) == "4 -4 3 0 -2 3 4 0 0");
}

TEST_CASE("split form of the worked tableau") {
    LieType b4 = type_b(4);
    Tabloid worked(b4, {col(b4, "3 4 0 0"), col(b4, "3 0 -2"), col(b4, "4 -4")});
    Tabloid spl = split_form(worked);
    REQUIRE(spl.columns.size() == 6);
    const char* expected[] = {"1 2 3 4", "3 4 -2 -1", "3 4 -2", "3 -4 -2", "3 -4", "4 -3"};
    for (int i = 0; i < 6; ++i)
        CHECK(format_word(spl.columns[i].reading()) == expected[i]);
    // reading of the split form is the stretched reading, factor by factor
    Word wspl = reading(spl);
    Word expect(b4);
    for (auto it = worked.columns.rbegin(); it != worked.columns.rend(); ++it) {
        Word s2 = s_m_embed(it->reading(), 2);
        expect.letters.insert(expect.letters.end(), s2.letters.begin(), s2.letters.end());
    }
    CHECK(wspl == expect);
    CHECK_THROWS_AS(split_form(Tabloid(type_b(2), {col(type_b(2), "1 2 -2")})),
                    CannotSplitError);
}

TEST_CASE("column orders") {
    LieType b2 = type_b(2);
    Column c = col(b2, "1 -2");
    CHECK(column_le(c, c));
    LieType b4 = type_b(4);
    Tabloid worked(b4, {col(b4, "3 4 0 0"), col(b4, "3 0 -2"), col(b4, "4 -4")});
    CHECK(box_le(worked.columns[0], worked.columns[1]));
    CHECK(box_le(worked.columns[1], worked.columns[2]));
    CHECK(!box_le(worked.columns[1], worked.columns[0]));
    LieType d4 = type_d(4);
    CHECK(box_le(col(d4, "3 -4"), col(d4, "-4 -3")));
}

TEST_CASE("a-configurations") {
    LieType d4 = type_d(4);
    // pair-free columns without n or nbar carry no configuration
    CHECK(find_a_configurations(col(d4, "1 2"), col(d4, "2 3")).empty());
    LieType d3 = type_d(3);
    CHECK(find_a_configurations(col(d3, "1 2 3"), col(d3, "1 2 3")).empty());
    auto cfgs = find_a_configurations(col(d4, "3 -4"), col(d4, "-4 -3"));
    REQUIRE(cfgs.size() == 1);
    CHECK(cfgs[0].a == 3);
    CHECK(cfgs[0].even);
    CHECK(cfgs[0].mu() == 1);
}

TEST_CASE("orthogonality criterion on the worked examples") {
    LieType b4 = type_b(4);
    Tabloid worked(b4, {col(b4, "3 4 0 0"), col(b4, "3 0 -2"), col(b4, "4 -4")});
    CHECK(is_orthogonal_tableau(worked));
    LieType d4 = type_d(4);
    Tabloid bad(d4, {col(d4, "3 -4"), col(d4, "-4 -3")});
    CHECK(!is_orthogonal_tableau(bad));
    CHECK(is_orthogonal_tableau(Tabloid(b4, {col(b4, "4 0 -4 -2")})));
}

TEST_CASE("highest weight tableaux and shapes") {
    LieType b3 = type_b(3);
    Tabloid t1 = highest_weight_tableau(b3, Shape{{3}, Eps::Zero, SpinPart::None});
    CHECK(format_word(reading(t1)) == "1 2 3");
    LieType d3 = type_d(3);
    Tabloid t2 = highest_weight_tableau(d3, Shape{{3, 1}, Eps::Minus, SpinPart::None});
    CHECK(format_word(reading(t2)) == "1 1 2 -3");
    CHECK(highest_weight_tableau(b3, Shape{}).empty());
    CHECK(shape_of(Tabloid(d3, {col(d3, "1 2 3")})) ==
          Shape{{3}, Eps::Plus, SpinPart::None});
    CHECK(shape_of(Tabloid(d3, {col(d3, "1 2 -3")})) ==
          Shape{{3}, Eps::Minus, SpinPart::None});
    CHECK(shape_of(Tabloid(d3, {col(d3, "1 2")})) == Shape{{2}, Eps::Zero, SpinPart::None});
    CHECK_THROWS_AS(validate_shape(d3, Shape{{3}, Eps::Zero, SpinPart::None}), DomainError);
    CHECK_THROWS_AS(validate_shape(b3, Shape{{1, 2}, Eps::Zero, SpinPart::None}), DomainError);
}

TEST_CASE("split form preserves orthogonality both ways") {
    // lem_split_tab at desk scale
    for (LieType t : {type_b(2), type_d(2)}) {
        for (int h1 = 1; h1 <= 2; ++h1) {
            for (int h2 = 1; h2 <= h1; ++h2) {
                for (const Column& c1 : all_admissible_columns(t, h1)) {
                    for (const Column& c2 : all_admissible_columns(t, h2)) {
                        Tabloid cand(t, {c1, c2});
                        Tabloid spl = split_form(cand);
                        CHECK(is_orthogonal_tableau(cand) == is_orthogonal_tableau(spl));
                    }
                }
            }
        }
    }
}

TEST_CASE("orthogonal tableaux with equivalent readings coincide") {
    LieType t = type_b(2);
    std::vector<Tabloid> tabs;
    for (int h1 = 1; h1 <= 2; ++h1)
        for (const Column& c1 : all_admissible_columns(t, h1)) {
            Tabloid one(t, {c1});
            if (is_orthogonal_tableau(one)) tabs.push_back(one);
            for (int h2 = 1; h2 <= h1; ++h2)
                for (const Column& c2 : all_admissible_columns(t, h2)) {
                    Tabloid two(t, {c1, c2});
                    if (is_orthogonal_tableau(two)) tabs.push_back(two);
                }
        }
    for (std::size_t i = 0; i < tabs.size(); ++i)
        for (std::size_t j = i + 1; j < tabs.size(); ++j)
            if (same_place_equivalent(reading(tabs[i]), reading(tabs[j])))
                CHECK(tabs[i] == tabs[j]);
}

TEST_CASE("tableau json round trip") {
    LieType b4 = type_b(4);
    Tabloid worked(b4, {col(b4, "3 4 0 0"), col(b4, "3 0 -2"), col(b4, "4 -4")});
    CHECK(tabloid_from_json(to_json(worked)) == worked);
    LieType d3 = type_d(3);
    Tabloid td(d3, {col(d3, "1 2 -3")});
    json j = to_json(td);
    CHECK(j.at("epsilon") == "-");
    CHECK(tabloid_from_json(j) == td);
    CHECK_THROWS_AS(tabloid_from_json(json::parse("{\"type\":\"X\",\"rank\":2}")), DomainError);
}
