#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpq/extract.hpp"
#include "fpq/family.hpp"
#include "fpq/probe.hpp"

namespace fpq {

using ordered_json = nlohmann::ordered_json;

/// Machine-readable verdict for one named check. Failures always carry a
/// concrete witness.
struct CheckReport {
    std::string name;
    ordered_json parameters = ordered_json::object();
    std::string status = "fail";  // "pass" | "fail"
    ordered_json details = ordered_json::object();
    ordered_json witness;  // null unless failed
    double timing_ms = 0;

    bool passed() const { return status == "pass"; }
    ordered_json to_json() const;
};

struct VerifyConfig {
    std::vector<std::string> checks;  // which criteria to run
    std::uint64_t seed = 42;
    std::string mutation = "none";  // harness self-test hook
    std::uint64_t budget = kDefaultBudget;

    static VerifyConfig all();
    static VerifyConfig from_json(const ordered_json& j);
    ordered_json to_json() const;
};

// ---- reusable harness operations -------------------------------------------

struct ImplicationResult {
    bool pass = false;
    std::optional<Vec> witness;
    std::uint64_t zero_points = 0;
    std::uint64_t scanned = 0;
};

// Exhaustively verifies: for all x in v with every family member zero at x,
// 24 * (degree-4 part of f)(x) = 0.
ImplicationResult implication_check(const Polynomial& f, const QuadFamily& fam,
                                    const Subspace& v, std::uint64_t budget = kDefaultBudget);

struct RestrictionRankCheck {
    enum class Status { kPass, kFail, kSkipped };
    Status status = Status::kSkipped;
    std::uint32_t rank_full = 0;
    std::uint32_t rank_restricted = 0;
    std::uint32_t codim = 0;
};

// rank(f) <= rank(f|V) + codim(V), by bounded probes; skipped when either
// probe is unresolvable under the cap.
RestrictionRankCheck restriction_rank_check(const Polynomial& f, const Subspace& v,
                                            std::uint32_t cap,
                                            std::uint64_t budget = kDefaultBudget);

struct PipelineResult {
    bool extraction_complete = false;
    bool pass = false;
    std::string status;  // "pass" | "fail" | "not-found"
    std::optional<Vec> witness;
    std::vector<Polynomial> pool;
    QuadFamily family;
    Subspace subspace;  // V_out
    std::uint32_t family_size = 0;
    std::uint32_t codim_out = 0;
    ImplicationResult implication;
};

// (1) extract quadratic pool from derivative presentations, (2) regularize,
// (3) exhaustively check the zero-set implication. A pass is always backed by
// the exhaustive step; extraction is best-effort and may report not-found.
PipelineResult run_pipeline(const Polynomial& f, std::uint32_t r_target, std::uint32_t cap,
                            std::uint64_t seed = 0x5eedULL,
                            std::uint64_t budget = kDefaultBudget);

// ---- acceptance criteria ----------------------------------------------------

CheckReport check_gauss_sum_law(const VerifyConfig& cfg);
CheckReport check_bias_rank_bound(const VerifyConfig& cfg);
CheckReport check_rank_bruteforce_agreement(const VerifyConfig& cfg);
CheckReport check_restriction_rank_inequality(const VerifyConfig& cfg);
CheckReport check_affine_counting_bound(const VerifyConfig& cfg);
CheckReport check_admissible_density_bound(const VerifyConfig& cfg);
CheckReport check_bogolyubov_subspace(const VerifyConfig& cfg);
CheckReport check_quartic_taylor_identity(const VerifyConfig& cfg);
CheckReport check_structured_quartic_pipeline(const VerifyConfig& cfg);
CheckReport check_performance_floor(const VerifyConfig& cfg);

// All criterion names in declared order.
const std::vector<std::string>& all_check_names();

struct VerifyOutcome {
    std::vector<CheckReport> reports;
    int exit_code = 0;  // 0 all pass, 1 violation
    ordered_json to_json(const VerifyConfig& cfg) const;
};

VerifyOutcome verify_suite(const VerifyConfig& cfg);

}  // namespace fpq
