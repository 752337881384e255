#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Color subsets of {1..k} are encoded as bitmasks: bit c-1 set iff color c is
// in the set. With k=2 this is the 0,1,2,3 digit convention for
// (empty, {1}, {2}, {1,2}).
using Label = std::uint8_t;

inline int label_size(Label l) { return __builtin_popcount(l); }

// Per-vertex color subsets of {1..k}.
struct RainbowAssignment {
    int k = 2;
    std::vector<Label> labels;

    RainbowAssignment() = default;
    RainbowAssignment(int k_, std::vector<Label> labels_);

    int size() const { return static_cast<int>(labels.size()); }
    Label full_mask() const { return static_cast<Label>((1u << k) - 1); }

    // w(f) = sum over vertices of |f(v)|.
    int weight() const;

    bool operator==(const RainbowAssignment& o) const = default;
};

// Digit string for k <= 3 (one digit per vertex, digit = encoded set),
// comma-separated decimal encodings for k > 3.
RainbowAssignment parse_assignment(const std::string& text, int k);
std::string format_assignment(const RainbowAssignment& f);

// Label of vertex v becomes the original label of (v - shift) mod n.
RainbowAssignment rotate(const RainbowAssignment& f, int shift);
// Colors c1 and c2 exchanged in every label.
RainbowAssignment swap_colors(const RainbowAssignment& f, int c1, int c2);

struct Violation {
    int vertex;
    Label missing;  // colors absent from the neighborhood union
    bool operator==(const Violation& o) const = default;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
};

// The kRDF condition: every vertex with the empty set must see all k colors
// across its open neighborhood.
ValidationReport validate_krdf(const Graph& g, const RainbowAssignment& f);

// Class accounting over a 4-regular graph with k=2: V0/V1/V2 sizes, the
// V_ij table over empty vertices (i singleton-labeled neighbors, j fully
// labeled neighbors), edge classes within/between V1 and V2, the linear
// combination beta with 6 w(f) = 2n + beta, and both sides of the two
// double-counting equations.
struct BetaAudit {
    int n = 0;
    int weight = 0;
    int v0 = 0, v1 = 0, v2 = 0;
    std::array<std::array<int, 5>, 5> vij{};  // vij[i][j], i + j <= 4
    int e1 = 0, e2 = 0, e12 = 0;
    long long beta = 0;
    long long eq1_lhs = 0, eq1_rhs = 0;
    long long eq2_lhs = 0, eq2_rhs = 0;
    bool identity_holds = false;  // 6 w == 2 n + beta
};

BetaAudit beta_audit(const Graph& g, const RainbowAssignment& f);

} // namespace rainbow
