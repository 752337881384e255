#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/formulas.hpp"
#include "rainbow/serialize.hpp"

using namespace rainbow;

TEST_CASE("c14 closed form by residue class") {
    CHECK(gamma_r2_c14(12).value == 4);
    CHECK(gamma_r2_c14(19).value == 8);
    CHECK(gamma_r2_c14(10).value == 6);
    CHECK(gamma_r2_c14(9).value == 4);
    CHECK(gamma_r2_c14(11).value == 5);
    CHECK(gamma_r2_c14(13).value == 6);

    C14FormulaValue v = gamma_r2_c14(19);
    CHECK(v.residue == 1);
    CHECK(v.alpha == 1);
    CHECK(to_json(v) == R"({"n":19,"residue":1,"alpha":1,"value":8})");

    for (int n = 9; n <= 400; ++n) {
        C14FormulaValue fv = gamma_r2_c14(n);
        CHECK(fv.value == (n + 2) / 3 + fv.alpha);
        CHECK(fv.alpha == (fv.residue == 0 ? 0 : (fv.residue == 4 ? 2 : 1)));
    }
    CHECK_THROWS_AS(gamma_r2_c14(8), OutOfDomain);
}

TEST_CASE("c14 construction matches the printed patterns") {
    CHECK(format_assignment(construct_c14(19)) == "1002001002001002201");
    CHECK(format_assignment(construct_c14(12)) == "100200100200");
    CHECK(format_assignment(construct_c14(9)) == "300200100");
    CHECK(format_assignment(construct_c14(10)) == "1002001212");
    CHECK(format_assignment(construct_c14(11)) == "10020010220");
    CHECK(format_assignment(construct_c14(14)) == "10020010020210");
    CHECK(format_assignment(construct_c14(15)) == "300200100200100");
    CHECK(construct_c14(12).weight() == 4);
    CHECK(construct_c14(9).weight() == 4);
    CHECK_THROWS_AS(construct_c14(8), OutOfDomain);
}

TEST_CASE("construction soundness across three hundred vertices") {
    for (int n = 9; n <= 300; ++n) {
        RainbowAssignment f = construct_c14(n);
        REQUIRE(f.size() == n);
        Graph g = make_circulant(n, {1, 4});
        CHECK(validate_krdf(g, f).valid);
        CHECK(f.weight() == gamma_r2_c14(n).value);
    }
}

TEST_CASE("c13 closed form") {
    CHECK(gamma_r2_c13(10) == 4);
    CHECK(gamma_r2_c13(7) == 3);
    CHECK(gamma_r2_c13(13) == 6);
    CHECK(gamma_r2_c13(15) == 6);
    CHECK(gamma_r2_c13(11) == 5);
    CHECK(gamma_r2_c13(12) == 5);
    CHECK(gamma_r2_c13(14) == 6);
    CHECK_THROWS_AS(gamma_r2_c13(6), OutOfDomain);
}

TEST_CASE("pn2 closed form") {
    CHECK(gamma_r2_pn2(5) == 5);
    CHECK(gamma_r2_pn2(10) == 8);
    CHECK(gamma_r2_pn2(13) == 11);
    CHECK(gamma_r2_pn2(3) == 3);   // 3 mod 10 tight: ceil(12/5) = 3
    CHECK(gamma_r2_pn2(6) == 6);   // ceil(24/5) + 1
    CHECK_THROWS_AS(gamma_r2_pn2(2), OutOfDomain);
}

TEST_CASE("p5kk values and intervals") {
    CHECK(gamma_r2_p5kk(8) == BoundResult{32, 32});
    CHECK(gamma_r2_p5kk(5) == BoundResult{21, 21});
    CHECK(gamma_r2_p5kk(3) == BoundResult{13, 14});
    CHECK(gamma_r2_p5kk(1) == BoundResult{5, 5});
    CHECK(gamma_r2_p5kk(2) == BoundResult{10, 10});
    CHECK(gamma_r2_p5kk(12) == BoundResult{48, 48});
    CHECK(gamma_r2_p5kk(15) == BoundResult{61, 61});
    CHECK(gamma_r2_p5kk(19) == BoundResult{77, 77});
    CHECK(gamma_r2_p5kk(11) == BoundResult{45, 46});
    CHECK(gamma_r2_p5kk(16) == BoundResult{65, 66});
    CHECK(gamma_r2_p5kk(17) == BoundResult{69, 70});
    CHECK(gamma_r2_p5kk(10) == BoundResult{41, 43});
    CHECK(gamma_r2_p5kk(13) == BoundResult{53, 55});
    CHECK(gamma_r2_p5kk(14) == BoundResult{57, 59});
    CHECK_THROWS_AS(gamma_r2_p5kk(0), OutOfDomain);

    for (int k = 1; k <= 60; ++k) {
        BoundResult b = gamma_r2_p5kk(k);
        CHECK(b.lower <= b.upper);
        CHECK(b.lower >= regular_lower_bound(10 * k, 3));
    }
}

TEST_CASE("regular lower bound") {
    CHECK(regular_lower_bound(12, 4) == 4);
    CHECK(regular_lower_bound(19, 4) == 7);
    CHECK(regular_lower_bound(3, 2) == 2);
    CHECK(regular_lower_bound(20, 3) == 8);
    CHECK_THROWS_AS(regular_lower_bound(0, 4), InvalidParameter);
}

TEST_CASE("bound consistency against the closed forms") {
    for (int n = 9; n <= 400; ++n)
        CHECK(regular_lower_bound(n, 4) <= gamma_r2_c14(n).value);
    for (int n = 7; n <= 400; ++n)
        CHECK(regular_lower_bound(n, 4) <= gamma_r2_c13(n));
}

TEST_CASE("beta bound restated arithmetically on the formula values") {
    for (int n = 9; n <= 400; ++n) {
        int value = gamma_r2_c14(n).value;
        int r = n % 6;
        if (r == 1 || r == 2 || r == 3 || r == 5)
            CHECK(value >= (2 * n + 6 + 5) / 6);
        if (r == 4)
            CHECK(value >= (2 * n + 12 + 5) / 6);
    }
}

TEST_CASE("bound result serialization") {
    CHECK(to_json(gamma_r2_p5kk(3)) == R"({"lower":13,"upper":14,"exact":false})");
    CHECK(to_json(gamma_r2_p5kk(8)) == R"({"lower":32,"upper":32,"exact":true})");
}
