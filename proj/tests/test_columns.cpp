#include <set>

#include "doctest.h"
#include "ortho/columns.hpp"
#include "ortho/crystal.hpp"

using namespace ortho;

namespace {

Column col(LieType t, const char* text) { return Column(t, parse_word(t, text).letters); }

}  // namespace

TEST_CASE("column validity") {
    LieType b2 = type_b(2), d2 = type_d(2);
    CHECK_NOTHROW((void)col(b2, "1 0 0 -2"));
    CHECK_THROWS_AS((void)col(b2, "2 1"), DomainError);
    CHECK_THROWS_AS((void)col(b2, "1 1"), DomainError);
    CHECK_NOTHROW((void)col(d2, "2 -2 2"));   // n and nbar alternate
    CHECK_THROWS_AS((void)col(d2, "2 2"), DomainError);  // adjacent repeats must differ
    CHECK_NOTHROW((void)col(d2, "-2 2"));
}

TEST_CASE("N(z) counts") {
    LieType b2 = type_b(2);
    CHECK(n_count(col(b2, "1 2 -2"), unbarred(2)) == 3);
    CHECK(n_count(col(type_b(4), "4 0 -4 -2"), unbarred(4)) == 3);  // 0 never counts
    CHECK(n_count(col(type_b(4), "4 0 -4 -2"), unbarred(2)) == 1);
    CHECK(n_count(col(type_d(4), "3 -4 4 -3"), unbarred(4)) == 4);
    CHECK_THROWS_AS(n_count(col(b2, "1"), barred(1)), DomainError);
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(col(type_b(4), "4 0 -4 -2")));
    CHECK(is_admissible(col(type_d(4), "3 -4 4 -3")));
    CHECK(!is_admissible(col(type_b(2), "1 2 -2")));
    CHECK(!is_admissible(col(type_b(2), "1 2 0")));  // height n+1 with a 0
    // N(z) <= z is equivalent to |q - p| >= h - z + 1, closest occurrences
    for (int n = 2; n <= 3; ++n) {
        for (LieType t : {type_b(n), type_d(n)}) {
            for (int h = 1; h <= n + 1; ++h) {
                for (const Column& c : all_columns(t, h)) {
                    bool cond = c.height() <= n;
                    for (int z = 1; z <= n && cond; ++z) {
                        int best = 1 << 20;
                        for (int p = 0; p < h; ++p)
                            for (int q = 0; q < h; ++q)
                                if (c.cells[p].v == z && c.cells[q].v == -z)
                                    best = std::min(best, std::abs(q - p));
                        if (best < (1 << 20) && best < c.height() - z + 1) cond = false;
                    }
                    if (t.family == LieFamily::B) {
                        bool has0 = false;
                        for (Letter x : c.cells) has0 = has0 || is_zero(x);
                        if (has0 && c.height() > n) cond = false;
                    }
                    CHECK(is_admissible(c) == cond);
                }
            }
        }
    }
}

TEST_CASE("hat") {
    CHECK(format_word(hat(col(type_d(8), "5 6 -8 8 -8 -6 -5 -2")).reading()) ==
          "5 6 0 0 -8 -6 -5 -2");
    CHECK(format_word(hat(col(type_d(2), "-2 2")).reading()) == "0 0");
    CHECK(format_word(hat(col(type_d(3), "1 2 -3")).reading()) == "1 2 -3");
}

TEST_CASE("splitting worked examples") {
    auto sp = split_column(col(type_b(9), "4 5 8 9 0 0 -8 -5 -4"));
    CHECK(format_word(sp.l.reading()) == "1 2 3 6 7 9 -8 -5 -4");
    CHECK(format_word(sp.r.reading()) == "4 5 8 9 -7 -6 -3 -2 -1");
    auto spd = split_column(col(type_d(8), "5 6 -8 8 -8 -6 -5 -2"));
    CHECK(format_word(spd.l.reading()) == "1 3 4 7 -8 -6 -5 -2");
    CHECK(format_word(spd.r.reading()) == "5 6 -8 -7 -4 -3 -2 -1");
    // pair-free columns split into two copies of themselves
    Column pf = col(type_b(3), "1 -2");
    auto sp2 = split_column(pf);
    CHECK(sp2.l == pf);
    CHECK(sp2.r == pf);
    CHECK_THROWS_AS(split_column(col(type_b(2), "1 2 -2")), CannotSplitError);
}

TEST_CASE("row-wise split pair order") {
    for (int n = 2; n <= 3; ++n) {
        for (LieType t : {type_b(n), type_d(n)}) {
            for (int h = 1; h <= n; ++h) {
                for (const Column& c : all_admissible_columns(t, h)) {
                    auto sp = split_column(c);
                    for (int k = 0; k < h; ++k)
                        CHECK(letter_le(t, sp.l.cells[k], sp.r.cells[k]));
                }
            }
        }
    }
}

TEST_CASE("height-n membership classification, type D") {
    CHECK(column_membership(col(type_d(3), "1 2 3")) == HeightNClass::OmegaN);
    CHECK(column_membership(col(type_d(3), "1 2 -3")) == HeightNClass::OmegaNBar);
    CHECK(column_membership(col(type_d(2), "-2 2")) == HeightNClass::OmegaN);
    CHECK(column_membership(col(type_d(2), "2 -2")) == HeightNClass::OmegaNBar);
    CHECK_THROWS_AS(column_membership(col(type_d(3), "1 2")), DomainError);
}

TEST_CASE("admissible column readings are the generator component vertices") {
    // prop_KNf for n <= 4, both types, with the height-n parity refinement
    for (int n = 2; n <= 4; ++n) {
        for (LieType t : {type_b(n), type_d(n)}) {
            for (int k = 1; k <= n; ++k) {
                Word hw(t);
                for (int i = 1; i <= k; ++i) hw.letters.push_back(unbarred(i));
                auto comp = explore_component(hw);
                std::set<std::string> got(comp.labels.begin(), comp.labels.end());
                std::set<std::string> want;
                for (const Column& c : all_admissible_columns(t, k)) {
                    if (t.family == LieFamily::D && k == n &&
                        column_membership(c) != HeightNClass::OmegaN)
                        continue;
                    want.insert(format_word(c.reading()));
                }
                CHECK(got == want);
                if (t.family == LieFamily::D && k == n) {
                    Word hwbar(t);
                    for (int i = 1; i < n; ++i) hwbar.letters.push_back(unbarred(i));
                    hwbar.letters.push_back(barred(n));
                    auto compbar = explore_component(hwbar);
                    std::set<std::string> gotbar(compbar.labels.begin(), compbar.labels.end());
                    std::set<std::string> wantbar;
                    for (const Column& c : all_admissible_columns(t, n))
                        if (column_membership(c) == HeightNClass::OmegaNBar)
                            wantbar.insert(format_word(c.reading()));
                    CHECK(gotbar == wantbar);
                }
            }
        }
    }
}
