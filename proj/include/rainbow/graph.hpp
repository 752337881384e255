#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

struct RainbowAssignment;

enum class GraphFamily { Circulant, GeneralizedPetersen, Custom };

// Immutable simple undirected graph on dense vertex ids 0..n-1 with sorted
// adjacency lists. The family tag records how the graph was constructed so
// structure-aware solvers can dispatch on it.
class Graph {
public:
    int n() const { return static_cast<int>(adj_.size()); }
    GraphFamily family() const { return family_; }

    // Circulant jump set (sorted); empty unless family is Circulant.
    const std::vector<int>& jumps() const { return jumps_; }
    // Inner skip; 0 unless family is GeneralizedPetersen.
    int petersen_skip() const { return skip_; }

    // N(v), as stored (sorted, no duplicates).
    const std::vector<int>& open_neighborhood(int v) const;
    // N[v] = N(v) union {v}, sorted.
    std::vector<int> closed_neighborhood(int v) const;

    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(open_neighborhood(v).size()); }

    // K if every vertex has degree K, otherwise nullopt.
    std::optional<int> regular_degree() const;

    std::size_t edge_count() const;

    // Canonical spec string for family graphs ("circulant:n:j1,j2", "petersen:n:k"),
    // "custom:n" otherwise.
    std::string spec_string() const;

    static Graph circulant(int n, const std::vector<int>& jumps);
    static Graph generalized_petersen(int n, int k);
    // Adjacency given as arbitrary edge list over 0..n-1; loops rejected.
    static Graph custom(int n, const std::vector<std::pair<int, int>>& edges);

private:
    Graph() = default;
    GraphFamily family_ = GraphFamily::Custom;
    std::vector<int> jumps_;
    int skip_ = 0;
    std::vector<std::vector<int>> adj_;
};

Graph make_circulant(int n, const std::vector<int>& jumps);
Graph make_generalized_petersen(int n, int k);

// Grammar: `circulant:<n>:<j1>,<j2>,...` (jumps strictly increasing) | `petersen:<n>:<k>`.
Graph parse_graph_spec(const std::string& text);

// Undirected DOT output; when an assignment is given, each vertex is labeled
// with its color set and styled by class (empty = gray fill, singleton = black
// fill, full = doublecircle).
std::string to_dot(const Graph& g, const RainbowAssignment* f = nullptr);

} // namespace rainbow
