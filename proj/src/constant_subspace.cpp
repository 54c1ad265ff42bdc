#include "spectral/constant_subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectral {

namespace {

// Support of the current restriction, largest magnitude first, ties by
// smaller mask.
std::vector<std::pair<LinearForm, std::int64_t>> ranked_support(const Spectrum& leaf) {
    auto ranked = leaf.coeffs;
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        const std::int64_t ma = a.second < 0 ? -a.second : a.second;
        const std::int64_t mb = b.second < 0 ? -b.second : b.second;
        if (ma != mb) return ma > mb;
        return a.first < b.first;
    });
    return ranked;
}

}  // namespace

std::vector<GreedyConstraint> greedy_merge_constraints(const Spectrum& sp,
                                                       const AffineSubspace& initial,
                                                       int* constant_value) {
    AffineSubspace acc = initial;
    std::vector<GreedyConstraint> added;
    std::int64_t prev_sparsity = -1;

    for (;;) {
        const CosetDecomposition dec = decompose(sp, acc.basis);
        const Spectrum leaf = leaf_spectrum(dec, acc.values);
        if (leaf.sparsity() == 0)
            throw std::logic_error("greedy: restriction lost all mass");
        if (prev_sparsity >= 2 && leaf.sparsity() >= prev_sparsity)
            throw std::logic_error("greedy: merge step failed to shrink support");
        prev_sparsity = leaf.sparsity();

        if (leaf.sparsity() == 1) {
            const auto [rep, c] = leaf.coeffs.front();
            if (in_span(rep, acc.basis)) {
                // chi_rep is itself constant on the subspace; fold its sign in.
                int sign = c < 0 ? -1 : +1;
                if (__builtin_popcount(acc.basis.coords(rep) & acc.values) & 1)
                    sign = -sign;
                if (constant_value) *constant_value = sign;
                return added;
            }
            // A lone non-constant character: pin it to its 0 side.
            if (!acc.add_constraint(rep, 0))
                throw std::logic_error("greedy: independent constraint rejected");
            added.push_back(GreedyConstraint{rep, 0});
            continue;
        }

        const auto ranked = ranked_support(leaf);
        bool placed = false;
        for (std::size_t j = 1; j < ranked.size() && !placed; ++j) {
            for (std::size_t i = 0; i < j && !placed; ++i) {
                const LinearForm delta = ranked[i].first ^ ranked[j].first;
                if (in_span(delta, acc.basis)) continue;  // cannot happen for reps
                // Choose the side that adds the two magnitudes.
                const bool same_sign = (ranked[i].second < 0) == (ranked[j].second < 0);
                const int eps = same_sign ? 0 : 1;
                if (!acc.add_constraint(delta, eps))
                    throw std::logic_error("greedy: independent constraint rejected");
                added.push_back(GreedyConstraint{delta, eps});
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("greedy: no mergeable pair found");
    }
}

ConstantSubspaceResult greedy_constant_subspace(const Spectrum& sp) {
    ConstantSubspaceResult result;
    result.strategy = FinderStrategy::kGreedyMerge;
    AffineSubspace initial = AffineSubspace::whole_space(sp.n);
    int value = +1;
    const auto constraints = greedy_merge_constraints(sp, initial, &value);
    AffineSubspace acc = initial;
    for (const GreedyConstraint& c : constraints) {
        if (!acc.add_constraint(c.form, c.value))
            throw std::logic_error("greedy: inconsistent accumulated constraints");
    }
    result.subspace = acc;
    result.constant_value = value;
    result.codim = acc.codim();
    return result;
}

namespace {

struct ExactSearch {
    const BooleanFunction& f;
    int n;
    int target_depth;
    std::vector<std::vector<std::uint32_t>> points;  // one buffer per level
    std::vector<std::pair<LinearForm, int>> chain;
    std::uint32_t lead_mask = 0;  // leading bits of rows on the chain

    explicit ExactSearch(const BooleanFunction& fn) : f(fn), n(fn.n()) {}

    bool dfs(int level, int min_lead) {
        if (level == target_depth) {
            const auto& pts = points[level];
            const int first = f.bit(pts.front());
            for (const std::uint32_t x : pts) {
                if (f.bit(x) != first) return false;
            }
            return true;
        }
        // Canonical chains: new leading bit above all previous ones, no
        // bits at previous leading positions, so each reduced echelon
        // basis is enumerated exactly once.
        for (int lead = min_lead; lead < n; ++lead) {
            const LinearForm high = LinearForm{1} << lead;
            for (LinearForm low = 0; low < high; ++low) {
                if (low & lead_mask) continue;
                const LinearForm row = high | low;
                for (int value = 0; value <= 1; ++value) {
                    auto& next = points[level + 1];
                    next.clear();
                    for (const std::uint32_t x : points[level]) {
                        if (form_value(row, x) == value) next.push_back(x);
                    }
                    chain.emplace_back(row, value);
                    lead_mask |= high;
                    if (dfs(level + 1, lead + 1)) return true;
                    lead_mask &= ~high;
                    chain.pop_back();
                }
            }
        }
        return false;
    }
};

}  // namespace

std::optional<ConstantSubspaceResult> exact_min_codim(const BooleanFunction& f,
                                                      int max_codim) {
    const int n = f.n();
    if (max_codim < 0) throw std::invalid_argument("exact_min_codim: negative max_codim");
    const int cap = std::min(max_codim, n);

    ExactSearch search(f);
    search.points.resize(cap + 1);
    search.points[0].resize(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) search.points[0][x] = x;

    for (int depth = 0; depth <= cap; ++depth) {
        search.target_depth = depth;
        search.chain.clear();
        search.lead_mask = 0;
        if (search.dfs(0, 0)) {
            auto subspace = AffineSubspace::from_constraints(search.chain, n);
            if (!subspace) throw std::logic_error("exact_min_codim: chain inconsistent");
            ConstantSubspaceResult result;
            result.subspace = *subspace;
            result.codim = depth;
            result.strategy = FinderStrategy::kExactMin;
            result.constant_value = f.value(search.points[depth].front());
            return result;
        }
    }
    return std::nullopt;
}

bool validate_constant(const Spectrum& sp, const ConstantSubspaceResult& result) {
    const CosetDecomposition dec = decompose(sp, result.subspace.basis);
    const Spectrum leaf = leaf_spectrum(dec, result.subspace.values);
    if (leaf.sparsity() != 1) return false;
    const auto [rep, c] = leaf.coeffs.front();
    if (!in_span(rep, result.subspace.basis)) return false;
    const std::int64_t scale = std::int64_t{1} << sp.n;
    if (c != scale && c != -scale) return false;
    int sign = c < 0 ? -1 : +1;
    if (__builtin_popcount(result.subspace.basis.coords(rep) & result.subspace.values) & 1)
        sign = -sign;
    return sign == result.constant_value;
}

}  // namespace spectral
