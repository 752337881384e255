#include "rainbow/serialize.hpp"

#include <json.hpp>

namespace rainbow {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json validation_json(const ValidationReport& r) {
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) {
        ordered_json missing = ordered_json::array();
        for (int c = 1; c <= 8; ++c)
            if (v.missing & (1u << (c - 1))) missing.push_back(c);
        violations.push_back({{"vertex", v.vertex}, {"missing_colors", missing}});
    }
    return ordered_json{{"valid", r.valid}, {"violations", violations}};
}

} // namespace

std::string to_json(const ValidationReport& r) { return validation_json(r).dump(); }

std::string to_json(const BetaAudit& a) {
    ordered_json vij = ordered_json::array();
    for (int i = 0; i <= 4; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j <= 4; ++j) row.push_back(a.vij[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        vij.push_back(row);
    }
    ordered_json out{{"n", a.n},   {"weight", a.weight}, {"v0", a.v0},
                     {"v1", a.v1}, {"v2", a.v2},         {"vij", vij},
                     {"e1", a.e1}, {"e2", a.e2},         {"e12", a.e12},
                     {"beta", a.beta}, {"identity_holds", a.identity_holds}};
    return out.dump();
}

std::string to_json(const C14FormulaValue& v) {
    ordered_json out{{"n", v.n}, {"residue", v.residue}, {"alpha", v.alpha}, {"value", v.value}};
    return out.dump();
}

std::string to_json(const BoundResult& b) {
    ordered_json out{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact()}};
    return out.dump();
}

std::string to_json(const SolverResult& r) {
    ordered_json out{{"method", r.method},
                     {"optimum", r.optimum},
                     {"witness", format_assignment(r.witness)},
                     {"nodes", r.nodes},
                     {"elapsed_ms", r.elapsed_ms},
                     {"exact", r.exact}};
    return out.dump();
}

} // namespace rainbow
