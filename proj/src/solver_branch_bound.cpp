#include <algorithm>
#include <chrono>

#include "rainbow/formulas.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

struct BranchBound {
    const Graph& g;
    const int n;
    const int k;
    const Label full;
    int max_degree = 1;
    int global_lb = 0;  // k n / (K + k) for K-regular graphs, 0 otherwise

    std::uint64_t node_budget;
    Clock::time_point deadline;
    bool has_deadline = false;

    std::vector<Label> labels;
    std::vector<Label> cover;                    // union of assigned neighbor labels
    std::vector<std::vector<int>> finalized_at;  // depth -> vertices with N[v] complete
    std::vector<bool> self_final;                // all neighbors of v are below v
    std::vector<std::vector<Label>> saved_cover; // per-depth undo buffers

    // Color units still missing at assigned empty vertices whose neighborhood
    // is incomplete; each future weight unit can serve at most max_degree of
    // them, giving an admissible bound on the remaining weight.
    int open_demand = 0;

    int best;
    std::vector<Label> best_labels;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
    bool done = false;

    BranchBound(const Graph& graph, int colors, const SearchLimits& limits)
        : g(graph), n(graph.n()), k(colors), full(static_cast<Label>((1u << colors) - 1)),
          node_budget(limits.node_budget.value_or(UINT64_MAX)),
          labels(static_cast<std::size_t>(graph.n()), 0),
          cover(static_cast<std::size_t>(graph.n()), 0),
          finalized_at(static_cast<std::size_t>(graph.n() + 1)),
          self_final(static_cast<std::size_t>(graph.n()), false),
          saved_cover(static_cast<std::size_t>(graph.n())) {
        if (limits.node_budget && *limits.node_budget == 0)
            throw InvalidParameter("node budget must be positive");
        if (limits.time_budget) {
            if (*limits.time_budget <= std::chrono::milliseconds::zero())
                throw InvalidParameter("time budget must be positive");
            has_deadline = true;
            deadline = Clock::now() + *limits.time_budget;
        }
        for (int v = 0; v < n; ++v) {
            max_degree = std::max(max_degree, g.degree(v));
            int last = v;
            for (int u : g.open_neighborhood(v)) last = std::max(last, u);
            finalized_at[static_cast<std::size_t>(last + 1)].push_back(v);
            self_final[static_cast<std::size_t>(v)] = last == v;
            saved_cover[static_cast<std::size_t>(v)].resize(g.open_neighborhood(v).size());
        }
        if (auto K = g.regular_degree())
            global_lb = static_cast<int>((static_cast<long long>(k) * n + *K + k - 1) / (*K + k));
        // The all-colors assignment is always a valid incumbent.
        best = n * k;
        best_labels.assign(static_cast<std::size_t>(n), full);
    }

    bool over_budget() {
        if (nodes > node_budget) return true;
        if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline) return true;
        return false;
    }

    int missing_at(int v) const {
        return label_size(static_cast<Label>(full & ~cover[static_cast<std::size_t>(v)]));
    }

    void dfs(int depth, int weight) {
        if (done) return;
        ++nodes;
        if (over_budget()) {
            budget_hit = true;
            done = true;
            return;
        }
        if (depth == n) {
            // Every closure was checked as it completed, so this leaf is valid.
            if (weight < best) {
                best = weight;
                best_labels = labels;
                if (global_lb > 0 && best == global_lb) done = true;  // provably optimal
            }
            return;
        }
        const auto& nbrs = g.open_neighborhood(depth);
        auto& saved = saved_cover[static_cast<std::size_t>(depth)];
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            saved[i] = cover[static_cast<std::size_t>(nbrs[i])];

        for (Label l = 0; l <= full; ++l) {
            int w = weight + label_size(l);
            if (w >= best) {
                labels[static_cast<std::size_t>(depth)] = 0;
                continue;
            }
            int demand_delta = 0;
            for (int u : nbrs) {
                bool tracked = u < depth && labels[static_cast<std::size_t>(u)] == 0;
                if (tracked) demand_delta -= missing_at(u);
                cover[static_cast<std::size_t>(u)] =
                    static_cast<Label>(cover[static_cast<std::size_t>(u)] | l);
                if (tracked) demand_delta += missing_at(u);
            }
            labels[static_cast<std::size_t>(depth)] = l;

            // finalized_at[depth+1] is a subset of N(depth) + {depth}: a dead
            // entry kills the branch, a live empty entry has zero residual.
            bool dead = false;
            for (int v : finalized_at[static_cast<std::size_t>(depth + 1)]) {
                if (labels[static_cast<std::size_t>(v)] == 0 && missing_at(v) > 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                int new_open = open_demand + demand_delta;
                if (l == 0 && !self_final[static_cast<std::size_t>(depth)])
                    new_open += missing_at(depth);
                int lb = (new_open + max_degree - 1) / max_degree;
                if (w + lb < best) {
                    int saved_open = open_demand;
                    open_demand = new_open;
                    dfs(depth + 1, w);
                    open_demand = saved_open;
                }
            }

            for (std::size_t i = 0; i < nbrs.size(); ++i)
                cover[static_cast<std::size_t>(nbrs[i])] = saved[i];
            labels[static_cast<std::size_t>(depth)] = 0;
            if (done) return;
        }
    }
};

} // namespace

SolverResult solve_branch_bound(const Graph& g, int k, const SearchLimits& limits) {
    if (k < 1 || k > 8) throw InvalidParameter("k must be in [1, 8]");
    auto t0 = Clock::now();
    BranchBound search(g, k, limits);
    search.dfs(0, 0);
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return SolverResult::checked(g, "branch-bound", search.best,
                                 RainbowAssignment(k, std::move(search.best_labels)),
                                 search.nodes, ms, !search.budget_hit);
}

} // namespace rainbow
