#include "rainbow/formulas.hpp"

#include <string>

namespace rainbow {

namespace {

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

} // namespace

C14FormulaValue gamma_r2_c14(int n) {
    if (n < 9) throw OutOfDomain("gamma_r2(C(n;{1,4})) formula needs n >= 9, got " + std::to_string(n));
    C14FormulaValue v;
    v.n = n;
    v.residue = n % 6;
    v.alpha = v.residue == 0 ? 0 : (v.residue == 4 ? 2 : 1);
    v.value = ceil_div(n, 3) + v.alpha;
    return v;
}

RainbowAssignment construct_c14(int n) {
    if (n < 9) throw OutOfDomain("construction for C(n;{1,4}) needs n >= 9, got " + std::to_string(n));
    static const char* block = "100200";
    std::string head, tail;
    switch (n % 6) {
        case 0: break;
        case 1: tail = "1002201"; break;
        case 2: tail = "10020210"; break;
        case 3: head = "300200"; tail = "100"; break;
        case 4: tail = "1212"; break;
        case 5: tail = "10220"; break;
    }
    std::string pattern = head;
    int blocks = (n - static_cast<int>(head.size() + tail.size())) / 6;
    for (int b = 0; b < blocks; ++b) pattern += block;
    pattern += tail;
    return parse_assignment(pattern, 2);
}

int gamma_r2_c13(int n) {
    if (n < 7) throw OutOfDomain("gamma_r2(C(n;{1,3})) formula needs n >= 7, got " + std::to_string(n));
    int m = n / 5;
    int a = n - 5 * m;
    if (a == 0) return 2 * m;
    if (a <= 2) return 2 * m + 1;
    return 2 * m + 2;
}

int gamma_r2_pn2(int n) {
    if (n < 3) throw OutOfDomain("gamma_r2(P(n,2)) formula needs n >= 3, got " + std::to_string(n));
    int r = n % 10;
    int base = ceil_div(4LL * n, 5);
    bool tight = r == 0 || r == 3 || r == 4 || r == 9;
    return tight ? base : base + 1;
}

BoundResult gamma_r2_p5kk(int k) {
    if (k < 1) throw OutOfDomain("gamma_r2(P(5k,k)) needs k >= 1, got " + std::to_string(k));
    if (k == 1) return {5, 5};     // P(5,1)
    if (k == 2) return {10, 10};   // P(10,2), as listed alongside the k > 3 cases
    if (k == 3) return {13, 14};   // P(15,3)
    switch (k % 10) {
        case 2: case 8: return {4 * k, 4 * k};
        case 5: case 9: return {4 * k + 1, 4 * k + 1};
        case 1: case 6: case 7: return {4 * k + 1, 4 * k + 2};
        default: return {4 * k + 1, 4 * k + 3};  // k = 0, 3, 4 (mod 10)
    }
}

int regular_lower_bound(int n, int K) {
    if (n < 1 || K < 1) throw InvalidParameter("regular_lower_bound needs n >= 1 and K >= 1");
    return ceil_div(2LL * n, K + 2);
}

} // namespace rainbow
