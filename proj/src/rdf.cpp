#include "rainbow/rdf.hpp"

#include <algorithm>

namespace rainbow {

namespace {

void check_k(int k) {
    if (k < 1 || k > 8)
        throw InvalidParameter("k must be in [1, 8], got " + std::to_string(k));
}

} // namespace

RainbowAssignment::RainbowAssignment(int k_, std::vector<Label> labels_)
    : k(k_), labels(std::move(labels_)) {
    check_k(k);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] >= (1u << k))
            throw InvalidParameter("label at vertex " + std::to_string(i) +
                                   " is not a subset of {1.." + std::to_string(k) + "}");
}

int RainbowAssignment::weight() const {
    int w = 0;
    for (Label l : labels) w += label_size(l);
    return w;
}

RainbowAssignment parse_assignment(const std::string& text, int k) {
    check_k(k);
    std::vector<Label> labels;
    if (k <= 3) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9') throw ParseError("expected a digit", i);
            int v = c - '0';
            if (v >= (1 << k))
                throw ParseError("digit " + std::to_string(v) + " is not a subset encoding for k = " +
                                     std::to_string(k),
                                 i);
            labels.push_back(static_cast<Label>(v));
        }
    } else {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t start = pos;
            int v = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                v = v * 10 + (text[pos] - '0');
                if (v >= 256) throw ParseError("encoding too large", start);
                ++pos;
            }
            if (pos == start) throw ParseError("expected a decimal encoding", pos);
            if (v >= (1 << k))
                throw ParseError("encoding " + std::to_string(v) + " is not a subset of {1.." +
                                     std::to_string(k) + "}",
                                 start);
            labels.push_back(static_cast<Label>(v));
            if (pos < text.size()) {
                if (text[pos] != ',') throw ParseError("expected ','", pos);
                ++pos;
                if (pos == text.size()) throw ParseError("trailing ','", pos - 1);
            }
        }
    }
    return RainbowAssignment(k, std::move(labels));
}

std::string format_assignment(const RainbowAssignment& f) {
    std::string out;
    if (f.k <= 3) {
        out.reserve(f.labels.size());
        for (Label l : f.labels) out.push_back(static_cast<char>('0' + l));
    } else {
        for (std::size_t i = 0; i < f.labels.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(static_cast<int>(f.labels[i]));
        }
    }
    return out;
}

RainbowAssignment rotate(const RainbowAssignment& f, int shift) {
    int n = f.size();
    if (n == 0) return f;
    int s = ((shift % n) + n) % n;
    std::vector<Label> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<std::size_t>(v)] = f.labels[static_cast<std::size_t>(((v - s) % n + n) % n)];
    return RainbowAssignment(f.k, std::move(out));
}

RainbowAssignment swap_colors(const RainbowAssignment& f, int c1, int c2) {
    if (c1 < 1 || c1 > f.k || c2 < 1 || c2 > f.k)
        throw InvalidParameter("color out of range [1, " + std::to_string(f.k) + "]");
    Label b1 = static_cast<Label>(1u << (c1 - 1));
    Label b2 = static_cast<Label>(1u << (c2 - 1));
    std::vector<Label> out = f.labels;
    for (Label& l : out) {
        Label rest = static_cast<Label>(l & ~(b1 | b2));
        Label swapped = static_cast<Label>(((l & b1) ? b2 : 0) | ((l & b2) ? b1 : 0));
        l = static_cast<Label>(rest | swapped);
    }
    return RainbowAssignment(f.k, std::move(out));
}

ValidationReport validate_krdf(const Graph& g, const RainbowAssignment& f) {
    if (f.size() != g.n())
        throw InvalidParameter("assignment covers " + std::to_string(f.size()) +
                               " vertices, graph has " + std::to_string(g.n()));
    ValidationReport report;
    Label full = f.full_mask();
    for (int v = 0; v < g.n(); ++v) {
        if (f.labels[static_cast<std::size_t>(v)] != 0) continue;
        Label seen = 0;
        for (int u : g.open_neighborhood(v)) seen |= f.labels[static_cast<std::size_t>(u)];
        if (seen != full)
            report.violations.push_back({v, static_cast<Label>(full & ~seen)});
    }
    report.valid = report.violations.empty();
    return report;
}

BetaAudit beta_audit(const Graph& g, const RainbowAssignment& f) {
    auto deg = g.regular_degree();
    if (!deg || *deg != 4)
        throw UnsupportedGraph("beta audit requires a 4-regular graph");
    if (f.k != 2) throw UnsupportedParameters("beta audit requires k = 2");
    if (f.size() != g.n())
        throw InvalidParameter("assignment covers " + std::to_string(f.size()) +
                               " vertices, graph has " + std::to_string(g.n()));

    BetaAudit a;
    a.n = g.n();
    a.weight = f.weight();

    auto cls = [&](int v) {  // 0 = empty, 1 = singleton, 2 = full
        Label l = f.labels[static_cast<std::size_t>(v)];
        return l == 0 ? 0 : (label_size(l) == 1 ? 1 : 2);
    };

    for (int v = 0; v < a.n; ++v) {
        switch (cls(v)) {
            case 0: {
                ++a.v0;
                int i = 0, j = 0;
                for (int u : g.open_neighborhood(v)) {
                    int c = cls(u);
                    if (c == 1) ++i;
                    if (c == 2) ++j;
                }
                ++a.vij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                break;
            }
            case 1: ++a.v1; break;
            default: ++a.v2; break;
        }
    }

    for (int u = 0; u < a.n; ++u)
        for (int v : g.open_neighborhood(u)) {
            if (u >= v) continue;
            int cu = cls(u), cv = cls(v);
            if (cu == 1 && cv == 1) ++a.e1;
            else if (cu == 2 && cv == 2) ++a.e2;
            else if ((cu == 1 && cv == 2) || (cu == 2 && cv == 1)) ++a.e12;
        }

    // beta = |V11| + 3|V12| + 5|V13| + 2|V21| + 4|V22| + |V30| + 3|V31| + 2|V40|
    //      + 2|V02| + 4|V03| + 6|V04| + 3|E12| + 2|E1| + 4|E2| + 2|V2|
    a.beta = a.vij[1][1] + 3LL * a.vij[1][2] + 5LL * a.vij[1][3] + 2LL * a.vij[2][1] +
             4LL * a.vij[2][2] + a.vij[3][0] + 3LL * a.vij[3][1] + 2LL * a.vij[4][0] +
             2LL * a.vij[0][2] + 4LL * a.vij[0][3] + 6LL * a.vij[0][4] + 3LL * a.e12 +
             2LL * a.e1 + 4LL * a.e2 + 2LL * a.v2;

    // Double counting of V0-V1 and V0-V2 edges; the right-hand sides sum i
    // (resp. j) over the whole V_ij table.
    a.eq1_lhs = 4LL * a.v1 - 2LL * a.e1 - a.e12;
    a.eq2_lhs = 4LL * a.v2 - 2LL * a.e2 - a.e12;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j) {
            a.eq1_rhs += static_cast<long long>(i) * a.vij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            a.eq2_rhs += static_cast<long long>(j) * a.vij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }

    a.identity_holds = 6LL * a.weight == 2LL * a.n + a.beta;
    return a;
}

} // namespace rainbow
