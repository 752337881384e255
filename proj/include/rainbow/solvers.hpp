#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/rdf.hpp"

namespace rainbow {

struct SearchLimits {
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
    std::optional<std::uint64_t> enumeration_cap;
};

// Result of an exact solver run. Construction checks the witness: it must
// validate and its weight must equal the reported optimum.
struct SolverResult {
    std::string method;  // "brute" | "branch-bound" | "transfer-dp"
    int optimum = 0;
    RainbowAssignment witness;
    std::uint64_t nodes = 0;  // assignments enumerated / tree nodes / dp states
    double elapsed_ms = 0.0;
    bool exact = true;  // false when a budget stopped the search early

    static SolverResult checked(const Graph& g, std::string method, int optimum,
                                RainbowAssignment witness, std::uint64_t nodes,
                                double elapsed_ms, bool exact);
};

// Exhaustive enumeration of all (2^k)^n label vectors in lexicographic order
// (vertex 0 most significant). Guarded by n*k <= 26 unless overridden.
SolverResult solve_bruteforce(const Graph& g, int k, bool override_guard = false);

// Depth-first branch and bound over vertex labels in natural vertex order.
// Prunes with the incumbent weight, a coverage-deficiency bound, and the
// K-regular lower bound. Returns the lexicographically smallest optimal
// witness; with an exhausted budget, the best known so far flagged inexact.
SolverResult solve_branch_bound(const Graph& g, int k, const SearchLimits& limits = {});

// Exact optimum of gamma_r2(C(n;{1,s})) for 2 <= s <= 6, n >= 2s+1, via
// dynamic programming over a sliding window of the last s vertices; cyclic
// closure by enumerating boundary window configurations of the first s
// vertices. Witness is the lexicographically smallest optimal assignment.
SolverResult solve_transfer_dp(int n, int s, int k = 2);

struct OptimaList {
    int optimum = 0;
    std::vector<RainbowAssignment> optima;  // lexicographic order
    bool truncated = false;                 // enumeration cap reached
};

// All valid assignments of weight exactly gamma_rk(g), up to
// limits.enumeration_cap.
OptimaList enumerate_optima(const Graph& g, int k, const SearchLimits& limits = {},
                            bool override_guard = false);

} // namespace rainbow
