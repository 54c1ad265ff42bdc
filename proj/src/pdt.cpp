#include "spectral/pdt.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "spectral/affine.hpp"
#include "spectral/rng.hpp"

namespace spectral {

std::uint32_t NadtCertificate::assignment_of(std::uint32_t x) const {
    std::uint32_t a = 0;
    for (std::size_t i = 0; i < queried_basis.rows.size(); ++i) {
        a |= static_cast<std::uint32_t>(form_value(queried_basis.rows[i], x)) << i;
    }
    return a;
}

namespace {

// Tabulates the junta by sweeping all inputs; every assignment of an
// independent basis is hit, and a clash on revisit means the queried
// forms do not determine f.
std::vector<std::uint64_t> build_decision_table(const BooleanFunction& f,
                                                const Gf2Basis& basis) {
    const int rank = basis.rank();
    const std::size_t entries = std::size_t{1} << rank;
    std::vector<std::uint64_t> table(entries / 64 + 1, 0);
    std::vector<std::uint64_t> seen(entries / 64 + 1, 0);
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        std::uint32_t a = 0;
        for (int i = 0; i < rank; ++i) {
            a |= static_cast<std::uint32_t>(form_value(basis.rows[i], x)) << i;
        }
        const std::uint64_t bit = std::uint64_t{1} << (a & 63);
        const int b = f.bit(x);
        if (seen[a >> 6] & bit) {
            const int stored = (table[a >> 6] >> (a & 63)) & 1;
            if (stored != b)
                throw std::logic_error("decision table: queried forms do not determine f");
        } else {
            seen[a >> 6] |= bit;
            if (b) table[a >> 6] |= bit;
        }
    }
    return table;
}

}  // namespace

NadtCertificate build_optimal_nadt(const BooleanFunction& f) {
    const Spectrum sp = wht(f);
    const auto supp = sp.support();
    NadtCertificate cert;
    cert.n = f.n();
    cert.queried_basis = row_reduce(supp, f.n());
    cert.queried = cert.queried_basis.rows;
    cert.table_bits = build_decision_table(f, cert.queried_basis);
    return cert;
}

namespace {

struct LeafChoice {
    std::uint32_t b = 0;
    std::int64_t sparsity = 0;
    bool met_bound = true;
};

// Sparsity of the leaf at b, and whether the leaf still has a coset
// representative outside span(Gamma) (i.e. is not already constant).
std::pair<std::int64_t, bool> leaf_stats(const CosetDecomposition& dec,
                                         const std::vector<bool>& rep_in_span,
                                         std::uint32_t b) {
    std::int64_t count = 0;
    bool has_outside = false;
    for (std::size_t j = 0; j < dec.buckets.size(); ++j) {
        if (eval_bucket(dec.buckets[j], b) != 0) {
            ++count;
            if (!rep_in_span[j]) has_outside = true;
        }
    }
    return {count, has_outside};
}

LeafChoice select_leaf(const CosetDecomposition& dec, const SelectorConfig& selector,
                       std::int64_t s, std::int64_t l, int iteration) {
    const int rank = dec.gamma.rank();
    std::vector<bool> rep_in_span(dec.buckets.size());
    for (std::size_t j = 0; j < dec.buckets.size(); ++j) {
        rep_in_span[j] = in_span(dec.buckets[j].rep, dec.gamma);
    }

    LeafChoice best;
    bool found = false;
    if (selector.mode == SelectionMode::kExhaustive) {
        const std::uint64_t leaves = std::uint64_t{1} << rank;
        for (std::uint64_t b = 0; b < leaves; ++b) {
            const auto [count, outside] = leaf_stats(dec, rep_in_span,
                                                     static_cast<std::uint32_t>(b));
            if (!outside) continue;  // constant leaf, nothing to restrict
            if (!found || count > best.sparsity) {
                best.b = static_cast<std::uint32_t>(b);
                best.sparsity = count;
                found = true;
            }
        }
    } else {
        // Fresh engine per iteration so traces do not depend on how many
        // draws earlier iterations consumed.
        std::mt19937_64 rng(selector.seed + 0x9e3779b97f4a7c15ULL *
                                                static_cast<std::uint64_t>(iteration));
        const std::uint64_t leaves = std::uint64_t{1} << rank;
        const int draws = std::max(1, selector.samples);
        for (int t = 0; t < draws; ++t) {
            const auto b = static_cast<std::uint32_t>(draw_below(rng, leaves));
            const auto [count, outside] = leaf_stats(dec, rep_in_span, b);
            if (!outside) continue;
            if (!found || count > best.sparsity ||
                (count == best.sparsity && b < best.b)) {
                best.b = b;
                best.sparsity = count;
                found = true;
            }
        }
        // A non-constant leaf always exists while l >= 2; keep drawing.
        std::int64_t guard = 1024 + 64 * s;
        while (!found && guard-- > 0) {
            const auto b = static_cast<std::uint32_t>(draw_below(rng, leaves));
            const auto [count, outside] = leaf_stats(dec, rep_in_span, b);
            if (outside) {
                best.b = b;
                best.sparsity = count;
                found = true;
            }
        }
        best.met_bound = best.sparsity * s >= l * l;
    }
    if (!found) throw std::logic_error("select_leaf: no non-constant leaf found");
    return best;
}

}  // namespace

std::pair<NadtCertificate, ProcedureTrace> run_procedure(const BooleanFunction& f,
                                                         std::int64_t tau,
                                                         FinderStrategy finder,
                                                         SelectorConfig selector) {
    if (tau < 1) throw std::invalid_argument("run_procedure: tau must be >= 1");
    const int n = f.n();
    const Spectrum sp = wht(f);

    ProcedureTrace trace;
    trace.s = sp.sparsity();
    trace.tau = tau;

    Gf2Basis gamma;
    gamma.ambient_n = n;
    std::vector<LinearForm> queried;

    CosetDecomposition dec = decompose(sp, gamma);
    int iteration = 0;
    while (static_cast<std::int64_t>(dec.buckets.size()) > tau) {
        ++iteration;
        const std::int64_t l_before = static_cast<std::int64_t>(dec.buckets.size());
        const LeafChoice choice = select_leaf(dec, selector, trace.s, l_before, iteration);

        AffineSubspace leaf_space{gamma, choice.b, n};
        std::vector<GreedyConstraint> fresh;
        if (finder == FinderStrategy::kGreedyMerge) {
            fresh = greedy_merge_constraints(sp, leaf_space, nullptr);
        } else {
            // Exact oracle: restrict to the leaf, search the small function,
            // translate the constraints back through the completion rows.
            const BooleanFunction g = materialize(f, leaf_space);
            const auto found = exact_min_codim(g, g.n());
            if (!found) throw std::logic_error("exact finder failed at full codim");
            const std::vector<LinearForm> full = extend_to_full_basis(gamma);
            const int codim = gamma.rank();
            const int m = g.n();
            for (const auto& [form, value] : found->subspace.constraint_list()) {
                LinearForm ambient = 0;
                for (int j = 0; j < m; ++j) {
                    if ((form >> (m - 1 - j)) & 1) ambient ^= full[codim + j];
                }
                fresh.push_back(GreedyConstraint{ambient, value});
            }
        }

        const int rank_before = gamma.rank();
        std::vector<LinearForm> rows = gamma.rows;
        for (const GreedyConstraint& c : fresh) {
            rows.push_back(c.form);
            queried.push_back(c.form);
        }
        gamma = row_reduce(rows, n);
        const int codim_added = gamma.rank() - rank_before;
        if (codim_added != static_cast<int>(fresh.size()))
            throw std::logic_error("finder returned dependent constraints");
        if (codim_added == 0)
            throw std::logic_error("procedure made no progress");

        dec = decompose(sp, gamma);
        IterationRecord rec;
        rec.index = iteration;
        rec.l_before = l_before;
        rec.l_after = static_cast<std::int64_t>(dec.buckets.size());
        rec.codim_added = codim_added;
        rec.chosen_leaf_sparsity = choice.sparsity;
        rec.mode = selector.mode;
        rec.sampled_met_bound = choice.met_bound;
        trace.iterations.push_back(rec);
    }

    // Close out: query one representative per coset not already spanned.
    int coset_queries = 0;
    for (const Bucket& bucket : dec.buckets) {
        if (!in_span(bucket.rep, gamma)) {
            queried.push_back(bucket.rep);
            ++coset_queries;
        }
    }
    trace.final_coset_queries = coset_queries;

    NadtCertificate cert;
    cert.n = n;
    cert.queried = queried;
    cert.queried_basis = row_reduce(queried, n);
    cert.table_bits = build_decision_table(f, cert.queried_basis);
    trace.total_depth = cert.depth();
    return {std::move(cert), std::move(trace)};
}

bool verify_certificate(const BooleanFunction& f, const NadtCertificate& cert) {
    const Spectrum sp = wht(f);
    for (const auto& [mask, c] : sp.coeffs) {
        if (!in_span(mask, cert.queried_basis)) return false;
    }
    if (f.n() <= 16) {
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            if (cert.evaluate(x) != f.value(x)) return false;
        }
    } else {
        std::mt19937_64 rng(0x5eed5eed5eedULL);
        for (int t = 0; t < 100000; ++t) {
            const auto x = static_cast<std::uint32_t>(draw_below(rng, f.size()));
            if (cert.evaluate(x) != f.value(x)) return false;
        }
    }
    return true;
}

int brute_force_min_nadt(const BooleanFunction& f) {
    const int n = f.n();
    if (n > 4) throw DimensionTooLargeError("brute_force_min_nadt: n > 4");
    const std::uint32_t form_count = (std::uint32_t{1} << n) - 1;  // nonzero forms

    std::vector<LinearForm> forms;
    for (LinearForm g = 1; g <= form_count; ++g) forms.push_back(g);

    for (int t = 0; t <= static_cast<int>(form_count); ++t) {
        // All t-subsets, lexicographic.
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        for (;;) {
            // Does this subset determine f? Group points by assignment.
            std::vector<int> first_value(std::size_t{1} << t, 0);
            bool determines = true;
            for (std::uint32_t x = 0; x < f.size() && determines; ++x) {
                std::uint32_t a = 0;
                for (int i = 0; i < t; ++i) {
                    a |= static_cast<std::uint32_t>(form_value(forms[idx[i]], x)) << i;
                }
                if (first_value[a] == 0) first_value[a] = f.value(x);
                else if (first_value[a] != f.value(x)) determines = false;
            }
            if (determines) return t;

            int i = t - 1;
            while (i >= 0 && idx[i] == static_cast<int>(form_count) - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("brute_force_min_nadt: exhausted all subsets");
}

std::vector<LemmaViolation> assert_lemmas(const ProcedureTrace& trace) {
    std::vector<LemmaViolation> violations;
    const std::int64_t s = trace.s;
    bool any_sampled = false;

    for (const IterationRecord& rec : trace.iterations) {
        const bool checkable =
            rec.mode == SelectionMode::kExhaustive || rec.sampled_met_bound;
        if (rec.mode == SelectionMode::kSampled) any_sampled = true;
        if (checkable) {
            if (rec.chosen_leaf_sparsity * s < rec.l_before * rec.l_before) {
                violations.push_back({rec.index, "support",
                                      "chosen leaf sparsity * s < l_before^2"});
            }
            if (2 * (rec.l_before - rec.l_after) * s < rec.l_before * rec.l_before - s) {
                violations.push_back({rec.index, "reduction",
                                      "2*(l_before - l_after)*s < l_before^2 - s"});
            }
        }
        if (rec.l_after >= rec.l_before) {
            violations.push_back({rec.index, "monotone", "l did not decrease"});
        }
    }

    if (trace.tau * trace.tau >= 2 * s && !any_sampled) {
        for (const IterationRecord& rec : trace.iterations) {
            if (static_cast<std::int64_t>(rec.index) * rec.l_after > 4 * s) {
                violations.push_back({rec.index, "final", "i * l_i > 4s"});
            }
        }
    }
    return violations;
}

DepthBoundReport depth_bound_report(const BooleanFunction& f,
                                    const ProcedureTrace& trace) {
    DepthBoundReport report;
    const Spectrum sp = wht(f);
    report.depth = trace.total_depth;
    report.dim = dimension(sp);
    report.s = sp.sparsity();
    report.ceil_s23 = ceil_s_pow_2_3(report.s);
    report.ceil_2sqrt = ceil_2_sqrt(report.s);
    if (report.depth < report.dim)
        throw std::logic_error("depth bound: depth < dimension");
    if (report.depth > report.s)
        throw std::logic_error("depth bound: depth > sparsity");
    report.ratio_depth_to_s23 =
        report.ceil_s23 ? static_cast<double>(report.depth) / static_cast<double>(report.ceil_s23) : 0.0;
    report.ratio_depth_to_sqrt_s =
        report.ceil_2sqrt ? static_cast<double>(report.depth) / static_cast<double>(report.ceil_2sqrt) : 0.0;
    return report;
}

std::int64_t ceil_s_pow_2_3(std::int64_t s) {
    if (s <= 0) return 0;
    const __int128 target = static_cast<__int128>(s) * s;
    std::int64_t lo = 1, hi = s;  // m = s always satisfies m^3 >= s^2
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        const __int128 cube = static_cast<__int128>(mid) * mid * mid;
        if (cube >= target) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

std::int64_t ceil_2_sqrt(std::int64_t s) {
    if (s <= 0) return 0;
    const __int128 target = static_cast<__int128>(4) * s;
    std::int64_t lo = 1, hi = 2 * s;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (static_cast<__int128>(mid) * mid >= target) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

const char* to_string(SelectionMode mode) {
    return mode == SelectionMode::kExhaustive ? "exhaustive" : "sampled";
}

}  // namespace spectral
