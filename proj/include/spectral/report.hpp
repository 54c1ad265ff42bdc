#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectral/boolean_function.hpp"
#include "spectral/families.hpp"
#include "spectral/io.hpp"
#include "spectral/pdt.hpp"

namespace spectral {

// Report building shared by the CLI and the acceptance suite, so both
// produce byte-identical artifacts for identical inputs.

struct ProcedureRunSummary {
    std::int64_t tau = 0;
    std::string tau_spec;  // "s23", "2sqrt" or the literal number
    std::string finder;    // "greedy" | "exact"
    std::string selector;  // "exhaustive" | "sampled:N"
    int depth = 0;
    int lemma_violations = 0;
    bool certificate_ok = false;
    ProcedureTrace trace;
    NadtCertificate certificate;
};

struct AnalysisReport {
    std::string input_descriptor;
    int n = 0;
    std::int64_t s = 0;
    int dim = 0;
    Rational l1_norm;
    bool eq1_ok = false;
    bool norm_sparsity_ok = false;
    int optimal_nadt_depth = 0;
    std::vector<ProcedureRunSummary> procedure_runs;
    bool failed = false;  // an invariant above came out false
};

AnalysisReport analyze(const BooleanFunction& f, const std::string& descriptor);
nlohmann::json analysis_report_to_json(const AnalysisReport& report);

// Resolves "s23" / "2sqrt" / integer literal against the sparsity.
std::int64_t resolve_tau(const std::string& tau_spec, std::int64_t s);

ProcedureRunSummary run_procedure_summary(const BooleanFunction& f,
                                          const std::string& tau_spec,
                                          FinderStrategy finder,
                                          SelectorConfig selector);

struct SweepRow {
    std::string family;
    std::string params;
    int n = 0;
    std::int64_t s = 0;
    int dim = 0;
    std::string tau_spec;
    std::int64_t tau = 0;
    int depth = 0;
    double depth_over_ceil_s23 = 0.0;
    double depth_over_ceil_2sqrt = 0.0;
    int greedy_codim = 0;
    double greedy_codim_over_sqrt_s = 0.0;
    std::int64_t min_lemma_margin = 0;
    std::string status;  // "ok" | "failed: ..."
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool any_failed = false;
    double max_ratio_s23 = 0.0;    // over rows with tau_spec == "s23"
    double max_ratio_2sqrt = 0.0;  // over rows with tau_spec == "2sqrt"
    double max_greedy_codim_ratio = 0.0;
    bool greedy_ratio_flagged = false;
};

inline constexpr double kGreedyCodimRatioThreshold = 4.0;

SweepResult run_sweep(const std::vector<FamilySpec>& families,
                      const std::vector<std::string>& tau_specs,
                      FinderStrategy finder, int jobs);

std::string sweep_to_csv(const SweepResult& result);
nlohmann::json sweep_summary_json(const SweepResult& result);

struct UpCheckReport {
    int trials = 0;
    int max_n = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    Rational min_slack{0, 1};  // min over trials of fraction - 1/terms
};

UpCheckReport up_check(int trials, int max_n, std::uint64_t seed);
nlohmann::json up_check_to_json(const UpCheckReport& report);

}  // namespace spectral
