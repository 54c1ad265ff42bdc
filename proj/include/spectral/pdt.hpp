#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spectral/boolean_function.hpp"
#include "spectral/constant_subspace.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

// A non-adaptive parity decision tree: the queried forms (in query order),
// their row-reduced basis, and a dense decision table indexed by
// assignments to the basis rows (bit i of the index = value of row i,
// table bit 1 = function value -1). Depth counts independent queries.
struct NadtCertificate {
    int n = 0;
    std::vector<LinearForm> queried;
    Gf2Basis queried_basis;
    std::vector<std::uint64_t> table_bits;

    int depth() const { return queried_basis.rank(); }

    std::uint32_t assignment_of(std::uint32_t x) const;
    int decide(std::uint32_t assignment) const {
        return (table_bits[assignment >> 6] >> (assignment & 63)) & 1 ? -1 : +1;
    }
    int evaluate(std::uint32_t x) const { return decide(assignment_of(x)); }
};

enum class SelectionMode { kExhaustive, kSampled };

struct SelectorConfig {
    SelectionMode mode = SelectionMode::kExhaustive;
    int samples = 0;             // sampled mode: number of draws per iteration
    std::uint64_t seed = 0;
};

struct IterationRecord {
    int index = 0;  // 1-based
    std::int64_t l_before = 0;
    std::int64_t l_after = 0;
    int codim_added = 0;
    std::int64_t chosen_leaf_sparsity = 0;
    SelectionMode mode = SelectionMode::kExhaustive;
    // Sampled mode only: whether the chosen leaf met ceil(l^2/s).
    bool sampled_met_bound = true;
};

struct ProcedureTrace {
    std::int64_t s = 0;
    std::int64_t tau = 0;
    std::vector<IterationRecord> iterations;
    int final_coset_queries = 0;
    int total_depth = 0;
};

// Depth-optimal tree: query a basis of span(Supp), tabulate by sweeping
// all inputs. Depth equals the Fourier dimension.
NadtCertificate build_optimal_nadt(const BooleanFunction& f);

// The iterative construction: while the support-coset count l exceeds tau,
// pick the restriction with the largest Fourier sparsity among the current
// leaves (skipping already-constant leaves; ties to the smallest
// assignment), make it constant with the chosen finder, and query the
// finder's parities at every leaf. Afterwards query one representative per
// support coset not inside span(Gamma). Throws std::invalid_argument for
// tau < 1.
std::pair<NadtCertificate, ProcedureTrace> run_procedure(
    const BooleanFunction& f, std::int64_t tau, FinderStrategy finder,
    SelectorConfig selector);

// (a) every support element lies in the queried span; (b) the decision
// table reproduces f on all 2^n inputs for n <= 16, else on 10^5 seeded
// random inputs.
bool verify_certificate(const BooleanFunction& f, const NadtCertificate& cert);

// Smallest t such that some t-subset of the nonzero forms determines f,
// by exhaustive subset search. Requires n <= 4 (DimensionTooLargeError).
int brute_force_min_nadt(const BooleanFunction& f);

struct DimensionTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LemmaViolation {
    int iteration;      // 0 for trace-level checks
    std::string check;  // "support" | "reduction" | "final" | "monotone"
    std::string detail;
};

// Integer-exact checks on a trace:
//   support:   chosen_leaf_sparsity * s >= l_before^2
//   reduction: 2 * (l_before - l_after) * s >= l_before^2 - s
//   monotone:  l_after < l_before
//   final:     i * l_after_i <= 4s for every i, when tau^2 >= 2s
// Sampled-mode iterations that missed ceil(l^2/s) are skipped for the
// first two; the final check is only reported for sampled traces.
std::vector<LemmaViolation> assert_lemmas(const ProcedureTrace& trace);

struct DepthBoundReport {
    int depth = 0;
    int dim = 0;
    std::int64_t s = 0;
    std::int64_t ceil_s23 = 0;    // least m with m^3 >= s^2
    std::int64_t ceil_2sqrt = 0;  // least m with m^2 >= 4s
    double ratio_depth_to_s23 = 0.0;
    double ratio_depth_to_sqrt_s = 0.0;
};

// Packages the depth ratios for sweep aggregation. Hard-checks
// dim <= depth <= s (std::logic_error on violation, which would mean a
// broken engine); the ratios themselves are informational.
DepthBoundReport depth_bound_report(const BooleanFunction& f,
                                    const ProcedureTrace& trace);

// Integer ceil(s^{2/3}) and ceil(2*sqrt(s)), float-free.
std::int64_t ceil_s_pow_2_3(std::int64_t s);
std::int64_t ceil_2_sqrt(std::int64_t s);

const char* to_string(SelectionMode mode);

}  // namespace spectral
