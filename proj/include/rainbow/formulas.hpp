#pragma once

#include "rainbow/rdf.hpp"

namespace rainbow {

// An integer interval [lower, upper]; exact when the endpoints meet.
struct BoundResult {
    int lower = 0;
    int upper = 0;
    bool exact() const { return lower == upper; }
    bool operator==(const BoundResult& o) const = default;
};

// gamma_r2(C(n;{1,4})) = ceil(n/3) + alpha with alpha driven by n mod 6.
struct C14FormulaValue {
    int n = 0;
    int residue = 0;  // n mod 6
    int alpha = 0;    // 0 for residue 0; 1 for 1,2,3,5; 2 for 4
    int value = 0;    // ceil(n/3) + alpha
};

// n >= 9.
C14FormulaValue gamma_r2_c14(int n);

// The explicit optimal 2RDF pattern for C(n;{1,4}), n >= 9: repetitions of
// "100200" with a residue-dependent head/tail. Valid and of weight
// gamma_r2_c14(n) by construction.
RainbowAssignment construct_c14(int n);

// gamma_r2(C(n;{1,3})) for n >= 7: with m = floor(n/5) and a = n - 5m,
// 2m (a=0), 2m+1 (a in {1,2}), 2m+2 (a in {3,4}).
int gamma_r2_c13(int n);

// gamma_r2(P(n,2)) for n >= 3: ceil(4n/5) for n = 0,3,4,9 (mod 10), else +1.
int gamma_r2_pn2(int n);

// gamma_r2(P(5k,k)) for k >= 1; open cases are returned as intervals.
BoundResult gamma_r2_p5kk(int k);

// ceil(2n / (K+2)): lower bound on gamma_r2 of any K-regular graph on n vertices.
int regular_lower_bound(int n, int K);

} // namespace rainbow
