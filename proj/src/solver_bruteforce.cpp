#include <algorithm>
#include <chrono>

#include "rainbow/solvers.hpp"

namespace rainbow {

SolverResult SolverResult::checked(const Graph& g, std::string method, int optimum,
                                   RainbowAssignment witness, std::uint64_t nodes,
                                   double elapsed_ms, bool exact) {
    if (!validate_krdf(g, witness).valid)
        throw Error("solver produced an invalid witness (" + method + ")");
    if (witness.weight() != optimum)
        throw Error("witness weight " + std::to_string(witness.weight()) +
                    " does not match reported optimum " + std::to_string(optimum));
    SolverResult r;
    r.method = std::move(method);
    r.optimum = optimum;
    r.witness = std::move(witness);
    r.nodes = nodes;
    r.elapsed_ms = elapsed_ms;
    r.exact = exact;
    return r;
}

namespace {

bool valid_under(const Graph& g, const std::vector<Label>& labels, Label full) {
    for (int v = 0; v < g.n(); ++v) {
        if (labels[static_cast<std::size_t>(v)] != 0) continue;
        Label seen = 0;
        for (int u : g.open_neighborhood(v)) {
            seen |= labels[static_cast<std::size_t>(u)];
            if (seen == full) break;
        }
        if (seen != full) return false;
    }
    return true;
}

void check_guard(const Graph& g, int k, bool override_guard, const char* what) {
    if (k < 1 || k > 8) throw InvalidParameter("k must be in [1, 8]");
    if (!override_guard && g.n() * k > 26)
        throw InstanceTooLarge(std::string(what) + ": n*k = " + std::to_string(g.n() * k) +
                               " exceeds the guard of 26");
}

} // namespace

SolverResult solve_bruteforce(const Graph& g, int k, bool override_guard) {
    check_guard(g, k, override_guard, "brute force");
    auto t0 = std::chrono::steady_clock::now();

    const int n = g.n();
    const Label full = static_cast<Label>((1u << k) - 1);
    const Label max_label = full;

    // Odometer over all label vectors in lexicographic order (vertex 0 most
    // significant), with the running weight maintained incrementally.
    std::vector<Label> labels(static_cast<std::size_t>(n), 0);
    int weight = 0;
    int best = -1;
    std::vector<Label> best_labels;
    std::uint64_t visited = 0;

    while (true) {
        ++visited;
        if ((best < 0 || weight < best) && valid_under(g, labels, full)) {
            best = weight;
            best_labels = labels;
        }
        int i = n - 1;
        while (i >= 0 && labels[static_cast<std::size_t>(i)] == max_label) {
            weight -= label_size(max_label);
            labels[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        weight -= label_size(labels[static_cast<std::size_t>(i)]);
        ++labels[static_cast<std::size_t>(i)];
        weight += label_size(labels[static_cast<std::size_t>(i)]);
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return SolverResult::checked(g, "brute", best, RainbowAssignment(k, std::move(best_labels)),
                                 visited, ms, true);
}

namespace {

struct OptimaSearch {
    const Graph& g;
    int k;
    Label full;
    int target;
    std::uint64_t cap;
    std::vector<Label> labels;
    std::vector<Label> cover;                    // union of assigned neighbor labels
    std::vector<std::vector<int>> finalized_at;  // depth -> vertices whose N[v] completes there
    OptimaList out;

    OptimaSearch(const Graph& graph, int colors, int optimum, std::uint64_t cap_limit)
        : g(graph), k(colors), full(static_cast<Label>((1u << colors) - 1)), target(optimum),
          cap(cap_limit), labels(static_cast<std::size_t>(graph.n()), 0),
          cover(static_cast<std::size_t>(graph.n()), 0),
          finalized_at(static_cast<std::size_t>(graph.n() + 1)) {
        for (int v = 0; v < g.n(); ++v) {
            int last = v;
            for (int u : g.open_neighborhood(v)) last = std::max(last, u);
            finalized_at[static_cast<std::size_t>(last + 1)].push_back(v);
        }
    }

    // True until the cap is hit.
    bool dfs(int depth, int weight) {
        if (depth == g.n()) {
            if (weight != target) return true;
            RainbowAssignment f(k, labels);
            if (!validate_krdf(g, f).valid) return true;
            out.optima.push_back(std::move(f));
            if (out.optima.size() >= cap) {
                out.truncated = true;
                return false;
            }
            return true;
        }
        std::vector<Label> saved;
        const auto& nbrs = g.open_neighborhood(depth);
        saved.reserve(nbrs.size());
        for (int u : nbrs) saved.push_back(cover[static_cast<std::size_t>(u)]);
        for (Label l = 0; l <= full; ++l) {
            int w = weight + label_size(l);
            if (w > target) continue;
            labels[static_cast<std::size_t>(depth)] = l;
            for (int u : nbrs)
                cover[static_cast<std::size_t>(u)] = static_cast<Label>(cover[static_cast<std::size_t>(u)] | l);
            bool dead = false;
            for (int v : finalized_at[static_cast<std::size_t>(depth + 1)]) {
                if (labels[static_cast<std::size_t>(v)] == 0 && cover[static_cast<std::size_t>(v)] != full) {
                    dead = true;
                    break;
                }
            }
            bool keep_going = dead || dfs(depth + 1, w);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                cover[static_cast<std::size_t>(nbrs[i])] = saved[i];
            labels[static_cast<std::size_t>(depth)] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

} // namespace

OptimaList enumerate_optima(const Graph& g, int k, const SearchLimits& limits, bool override_guard) {
    check_guard(g, k, override_guard, "optimum enumeration");
    if (limits.enumeration_cap && *limits.enumeration_cap == 0)
        throw InvalidParameter("enumeration cap must be positive");
    std::uint64_t cap = limits.enumeration_cap.value_or(UINT64_MAX);
    SolverResult base = solve_bruteforce(g, k, override_guard);

    OptimaSearch search(g, k, base.optimum, cap);
    search.dfs(0, 0);
    search.out.optimum = base.optimum;
    return search.out;
}

} // namespace rainbow
