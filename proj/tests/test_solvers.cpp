#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/formulas.hpp"
#include "rainbow/serialize.hpp"
#include "rainbow/solvers.hpp"

using namespace rainbow;

TEST_CASE("brute force on the spec anchors") {
    Graph c9 = make_circulant(9, {1, 4});
    SolverResult r = solve_bruteforce(c9, 2);
    CHECK(r.optimum == 4);
    CHECK(r.method == "brute");
    CHECK(r.exact);
    CHECK(validate_krdf(c9, r.witness).valid);
    CHECK(r.witness.weight() == 4);

    Graph triangle = make_circulant(3, {1});
    CHECK(solve_bruteforce(triangle, 2).optimum == 2);

    Graph c7 = make_circulant(7, {1, 3});
    CHECK(solve_bruteforce(c7, 2).optimum == 3);
}

TEST_CASE("brute force guard and override") {
    Graph c19 = make_circulant(19, {1, 4});
    CHECK_THROWS_AS(solve_bruteforce(c19, 2), InstanceTooLarge);
    Graph c9 = make_circulant(9, {1, 4});
    CHECK_THROWS_AS(solve_bruteforce(c9, 3), InstanceTooLarge);  // 27 > 26

    // n*k = 28 just over the guard; the override runs the full 4^14 sweep.
    Graph c14 = make_circulant(14, {1, 4});
    CHECK(solve_bruteforce(c14, 2, true).optimum == 6);
}

TEST_CASE("branch and bound matches the published small cases") {
    Graph p52 = make_generalized_petersen(5, 2);
    SolverResult r = solve_branch_bound(p52, 2);
    CHECK(r.optimum == 5);
    CHECK(r.method == "branch-bound");
    CHECK(r.exact);

    Graph c12 = make_circulant(12, {1, 4});
    CHECK(solve_branch_bound(c12, 2).optimum == 4);
}

TEST_CASE("transfer dp anchors") {
    CHECK(solve_transfer_dp(12, 4).optimum == 4);
    // 4 = -6 (mod 10): the wrap-around coincidence admits a weight-4 cover,
    // confirmed by exhaustive enumeration and branch-bound.
    CHECK(solve_transfer_dp(10, 4).optimum == 4);
    CHECK(solve_transfer_dp(16, 4).optimum == 7);
    CHECK(solve_transfer_dp(22, 4).optimum == 9);
    CHECK(solve_transfer_dp(28, 4).optimum == 12);
    CHECK(solve_transfer_dp(20, 3).optimum == 8);
    SolverResult r = solve_transfer_dp(12, 4);
    CHECK(r.method == "transfer-dp");
    CHECK(r.exact);
    CHECK(r.witness.weight() == 4);
}

TEST_CASE("branch-bound confirms the dp beyond the brute-force window") {
    for (int n = 14; n <= 22; ++n) {
        Graph g = make_circulant(n, {1, 4});
        CHECK(solve_branch_bound(g, 2).optimum == solve_transfer_dp(n, 4).optimum);
    }
    // wide jumps, where the boundary and closing windows nearly touch
    for (int s : {5, 6}) {
        for (int n = 14; n <= 3 * s; ++n) {
            Graph g = make_circulant(n, {1, s});
            CHECK(solve_branch_bound(g, 2).optimum == solve_transfer_dp(n, s).optimum);
        }
    }
}

TEST_CASE("branch-bound settles P(10,2) at 8") {
    Graph p = make_generalized_petersen(10, 2);
    SolverResult r = solve_branch_bound(p, 2);
    CHECK(r.optimum == 8);
    CHECK(r.exact);
    CHECK(validate_krdf(p, r.witness).valid);
}

TEST_CASE("transfer dp rejects unsupported shapes") {
    CHECK_THROWS_AS(solve_transfer_dp(20, 7), UnsupportedGraph);
    CHECK_THROWS_AS(solve_transfer_dp(20, 1), UnsupportedGraph);
    CHECK_THROWS_AS(solve_transfer_dp(8, 4), UnsupportedGraph);
    CHECK_THROWS_AS(solve_transfer_dp(20, 4, 3), UnsupportedParameters);
}

TEST_CASE("the three solvers agree on every small instance") {
    for (int n = 9; n <= 13; ++n) {
        Graph g = make_circulant(n, {1, 4});
        SolverResult brute = solve_bruteforce(g, 2);
        SolverResult bb = solve_branch_bound(g, 2);
        SolverResult dp = solve_transfer_dp(n, 4);
        CHECK(brute.optimum == bb.optimum);
        CHECK(brute.optimum == dp.optimum);
        // both tie-break to the lexicographically smallest optimum
        CHECK(format_assignment(brute.witness) == format_assignment(bb.witness));
        CHECK(format_assignment(brute.witness) == format_assignment(dp.witness));
    }
    for (int n = 7; n <= 13; ++n) {
        Graph g = make_circulant(n, {1, 3});
        SolverResult brute = solve_bruteforce(g, 2);
        SolverResult bb = solve_branch_bound(g, 2);
        SolverResult dp = solve_transfer_dp(n, 3);
        CHECK(brute.optimum == bb.optimum);
        CHECK(brute.optimum == dp.optimum);
        CHECK(format_assignment(brute.witness) == format_assignment(bb.witness));
        CHECK(format_assignment(brute.witness) == format_assignment(dp.witness));
    }
    for (int n : {5, 6}) {
        Graph g = make_generalized_petersen(n, 2);
        CHECK(solve_bruteforce(g, 2).optimum == solve_branch_bound(g, 2).optimum);
    }
}

TEST_CASE("transfer dp agrees with brute force on every supported jump") {
    for (int s = 2; s <= 6; ++s) {
        for (int n = 2 * s + 1; n <= 13; ++n) {
            Graph g = make_circulant(n, {1, s});
            SolverResult brute = solve_bruteforce(g, 2);
            SolverResult dp = solve_transfer_dp(n, s);
            CHECK(brute.optimum == dp.optimum);
            CHECK(format_assignment(brute.witness) == format_assignment(dp.witness));
        }
    }
}

TEST_CASE("optima satisfy the regular lower bound") {
    for (int n = 9; n <= 13; ++n) {
        Graph g = make_circulant(n, {1, 4});
        CHECK(solve_bruteforce(g, 2).optimum >= regular_lower_bound(n, 4));
    }
    Graph p = make_generalized_petersen(5, 2);
    CHECK(solve_branch_bound(p, 2).optimum >= regular_lower_bound(10, 3));
}

TEST_CASE("rainbow domination interpolates the domination number") {
    for (const Graph& g : {make_circulant(3, {1}), make_circulant(9, {1, 4}),
                           make_circulant(7, {1, 3}), make_generalized_petersen(5, 2)}) {
        int g1 = solve_bruteforce(g, 1).optimum;
        int g2 = solve_bruteforce(g, 2).optimum;
        CHECK(g1 <= g2);
        CHECK(g2 <= 2 * g1);
    }
}

TEST_CASE("solvers are deterministic") {
    Graph g = make_circulant(11, {1, 4});
    SolverResult a = solve_bruteforce(g, 2);
    SolverResult b = solve_bruteforce(g, 2);
    CHECK(format_assignment(a.witness) == format_assignment(b.witness));
    CHECK(a.nodes == b.nodes);

    SolverResult c = solve_branch_bound(g, 2);
    SolverResult d = solve_branch_bound(g, 2);
    CHECK(format_assignment(c.witness) == format_assignment(d.witness));
    CHECK(c.nodes == d.nodes);

    SolverResult e = solve_transfer_dp(11, 4);
    SolverResult f = solve_transfer_dp(11, 4);
    CHECK(format_assignment(e.witness) == format_assignment(f.witness));
    CHECK(e.nodes == f.nodes);
}

TEST_CASE("branch and bound respects budgets") {
    Graph g = make_circulant(13, {1, 4});
    SearchLimits limits;
    limits.node_budget = 1;
    SolverResult r = solve_branch_bound(g, 2, limits);
    CHECK(!r.exact);
    CHECK(validate_krdf(g, r.witness).valid);
    CHECK(r.witness.weight() == r.optimum);

    Graph big = make_circulant(60, {1, 4});
    SearchLimits tiny_time;
    tiny_time.time_budget = std::chrono::milliseconds(1);
    SolverResult t = solve_branch_bound(big, 2, tiny_time);
    CHECK(!t.exact);
    CHECK(validate_krdf(big, t.witness).valid);

    SearchLimits bad;
    bad.node_budget = 0;
    CHECK_THROWS_AS(solve_branch_bound(g, 2, bad), InvalidParameter);
    SearchLimits bad_time;
    bad_time.time_budget = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(solve_branch_bound(g, 2, bad_time), InvalidParameter);
}

TEST_CASE("enumerate_optima lists every optimum of the triangle") {
    Graph triangle = make_circulant(3, {1});
    OptimaList optima = enumerate_optima(triangle, 2);
    CHECK(optima.optimum == 2);
    CHECK(!optima.truncated);
    CHECK(optima.optima.size() == 9);  // 3 rotations of {1,2} + 6 two-singleton covers
    for (const auto& f : optima.optima) {
        CHECK(f.weight() == 2);
        CHECK(validate_krdf(triangle, f).valid);
    }
    for (std::size_t i = 1; i < optima.optima.size(); ++i)
        CHECK(optima.optima[i - 1].labels < optima.optima[i].labels);
}

TEST_CASE("enumerate_optima on C(9;{1,4}) forces beta = 6") {
    Graph g = make_circulant(9, {1, 4});
    OptimaList optima = enumerate_optima(g, 2);
    CHECK(optima.optimum == 4);
    CHECK(!optima.optima.empty());
    for (const auto& f : optima.optima) {
        CHECK(f.weight() == 4);
        CHECK(beta_audit(g, f).beta == 6);
    }
}

TEST_CASE("enumerate_optima honors the cap") {
    Graph triangle = make_circulant(3, {1});
    SearchLimits limits;
    limits.enumeration_cap = 4;
    OptimaList optima = enumerate_optima(triangle, 2, limits);
    CHECK(optima.truncated);
    CHECK(optima.optima.size() == 4);
}

TEST_CASE("solver result serialization shape") {
    Graph triangle = make_circulant(3, {1});
    SolverResult r = solve_bruteforce(triangle, 2);
    std::string j = to_json(r);
    CHECK(j.find("\"method\":\"brute\"") != std::string::npos);
    CHECK(j.find("\"optimum\":2") != std::string::npos);
    CHECK(j.find("\"witness\":\"") != std::string::npos);
    CHECK(j.find("\"exact\":true") != std::string::npos);
}
