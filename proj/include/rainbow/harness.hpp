#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/formulas.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

enum class VerifyFamily { C14, C13 };

std::string family_name(VerifyFamily f);
VerifyFamily family_from_name(const std::string& name);

struct OracleSelection {
    bool formula = true;
    bool construction = true;  // ignored for families without a construction
    bool dp = true;
    bool brute = true;  // participates only under the size guard
    static OracleSelection parse(const std::string& comma_list);
};

// One cross-verification line: every selected oracle evaluated at n, plus an
// agreement verdict over the values that are present.
struct VerifyRow {
    int n = 0;
    std::string family;
    int formula = 0;
    std::optional<int> construction_weight;
    std::optional<int> dp;
    std::optional<int> exhaustive;
    std::string status;  // "agree" | "disagree" | "skipped"
    std::string notes;
};

std::vector<VerifyRow> verify_range(VerifyFamily family, int lo, int hi,
                                    const OracleSelection& oracles);

bool all_agree(const std::vector<VerifyRow>& rows);

std::string verify_rows_to_json(const std::vector<VerifyRow>& rows);
// Schema: n,family,formula,construction_weight,dp,exhaustive,status,notes.
std::string verify_rows_to_csv(const std::vector<VerifyRow>& rows);

// Audit of every optimal 2RDF of C(n;{1,4}).
struct BetaReport {
    int n = 0;
    int residue = 0;
    int optimum = 0;
    std::uint64_t optima_count = 0;
    bool truncated = false;
    std::uint64_t identity_failures = 0;  // optima violating 6w == 2n + beta
    long long min_beta = 0;
    long long max_beta = 0;
    std::string requirement;  // residue-dependent bound on beta over optima
    bool requirement_met = false;
};

BetaReport beta_report(int n, const SearchLimits& limits = {});
std::string beta_report_to_json(const BetaReport& r);

// Exact search on P(10,2), where the two published sources disagree (8 vs 10).
struct AdjudicationReport {
    int pn2_formula_value = 0;   // from the P(n,2) closed form
    int p5kk_listed_value = 0;   // from the P(5k,k) small-case list
    bool conclusive = false;     // search completed within budget
    int computed_optimum = 0;
    std::string matches;  // "pn2_formula" | "p5kk_listed" | "neither" | "inconclusive"
    std::string witness;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

AdjudicationReport adjudicate_p10_2(const SearchLimits& limits = {});
std::string adjudication_to_json(const AdjudicationReport& r);

// Full command-line front door; returns the process exit code.
// 0 = verified/valid, 1 = domain error or disagreement, 2 = usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rainbow
