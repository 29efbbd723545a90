#include "doctest.h"
#include "ortho/crystal.hpp"
#include "ortho/jdt.hpp"
#include "ortho/serialize.hpp"

using namespace ortho;

namespace {

Column col(LieType t, const char* text) { return Column(t, parse_word(t, text).letters); }

SkewTableau trace_example() {
    LieType t = type_b(3);
    return SkewTableau(t, {1, 0, 0},
                       {col(t, "1 3"), col(t, "1 0 -3"), col(t, "2 -3 -2")});
}

}  // namespace

TEST_CASE("skew orthogonality") {
    LieType b3 = type_b(3);
    SkewTableau first(b3, {2, 1, 0}, {col(b3, "0 0"), col(b3, "3 -3"), col(b3, "2 0 -1")});
    CHECK(is_skew_orthogonal(first));
    CHECK(format_word(reading(first)) == "2 0 -1 3 -3 0 0");
    // a straight orthogonal tableau is skew orthogonal with empty inner shape
    SkewTableau straight(b3, {0, 0}, {col(b3, "1 2"), col(b3, "2")});
    CHECK(is_skew_orthogonal(straight));
    // perturbing the top right cell breaks a split row
    SkewTableau bad(b3, {2, 1, 0}, {col(b3, "0 0"), col(b3, "3 -3"), col(b3, "1 0 -1")});
    CHECK(!is_skew_orthogonal(bad));
    CHECK(is_skew_orthogonal(trace_example()));
    CHECK_THROWS_AS(SkewTableau(b3, {0, 1}, {col(b3, "1"), col(b3, "2")}), DomainError);
}

TEST_CASE("the worked trace endpoint") {
    SkewTableau skew = trace_example();
    Tabloid r = rectify(skew);
    REQUIRE(r.columns.size() == 3);
    CHECK(format_word(r.columns[0].reading()) == "1 3 0");
    CHECK(format_word(r.columns[1].reading()) == "1 -3 -2");
    CHECK(format_word(r.columns[2].reading()) == "2 -3");
    CHECK(r == p_symbol(reading(skew)));
}

TEST_CASE("empty inner shape rectifies to itself") {
    LieType b3 = type_b(3);
    SkewTableau straight(b3, {0, 0}, {col(b3, "1 2"), col(b3, "2")});
    Tabloid r = rectify(straight);
    CHECK(r == Tabloid(b3, {col(b3, "1 2"), col(b3, "2")}));
}

TEST_CASE("slides preserve the plactic class of the grid reading") {
    // sampled via the trace callback on the worked example
    SkewTableau skew = trace_example();
    Word base = reading(skew);
    RectifyOptions opts;
    opts.trace = [&](const PuncturedSplitForm& g) {
        Word r(g.type);
        for (int c = g.ncols; c >= 1; --c)
            for (int row = g.top[c - 1]; row <= g.bot[c - 1]; ++row)
                if (auto x = g.at(row, c)) r.letters.push_back(*x);
        CHECK(same_place_equivalent(r, s_m_embed(base, 2)));
    };
    (void)rectify(skew, opts);
}

TEST_CASE("single punctured slide steps") {
    SkewTableau skew = trace_example();
    PuncturedSplitForm g = split_grid(skew);
    CHECK(g.ncols == 6);
    CHECK_THROWS_AS((void)slide_step(g), DomainError);  // no puncture yet
    // open the corner pair by hand and watch the punctures render
    for (int c : {1, 2}) {
        g.top[c - 1] -= 1;
        g.cells[c - 1].insert(g.cells[c - 1].begin(), Letter{0});
        g.holes.push_back({g.top[c - 1], c});
        g.owed.push_back(std::nullopt);
    }
    std::string rendered = g.render();
    CHECK(rendered.find("*  *") != std::string::npos);
    while (!g.holes.empty()) slide_step(g);
    CHECK(g.retired.size() == 2);
}

TEST_CASE("slides never introduce the letter zero") {
    SkewTableau skew = trace_example();
    RectifyOptions opts;
    opts.trace = [&](const PuncturedSplitForm& g) {
        for (int c = 1; c <= g.ncols; ++c)
            for (int r = g.top[c - 1]; r <= g.bot[c - 1]; ++r)
                if (auto x = g.at(r, c)) CHECK(!is_zero(*x));
    };
    (void)rectify(skew, opts);
}

TEST_CASE("contracting rectification") {
    LieType b3 = type_b(3);
    SkewTableau skew(b3, {1, 0, 0},
                     {col(b3, "3 -1"), col(b3, "1 3"), col(b3, "-2 -1")});
    REQUIRE(is_skew_orthogonal(skew));
    Tabloid r = rectify(skew);
    // the class forces a contraction: six cells rectify to four boxes
    CHECK(r == p_symbol(reading(skew)));
    int boxes = 0;
    for (auto& c : r.columns) boxes += c.height();
    CHECK(boxes == 4);
}

TEST_CASE("skew json round trip") {
    SkewTableau skew = trace_example();
    json j = to_json(skew);
    CHECK(skew_from_json(j) == skew);
    CHECK(j.at("inner") == std::vector<int>{1, 0, 0});
}
