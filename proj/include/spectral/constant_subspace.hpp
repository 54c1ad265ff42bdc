#pragma once

#include <optional>
#include <vector>

#include "spectral/affine.hpp"

namespace spectral {

enum class FinderStrategy { kGreedyMerge, kExactMin };

struct ConstantSubspaceResult {
    AffineSubspace subspace;
    int constant_value = +1;  // +-1
    int codim = 0;
    FinderStrategy strategy = FinderStrategy::kGreedyMerge;
};

// One constraint produced by the greedy merger, in ambient coordinates.
struct GreedyConstraint {
    LinearForm form;
    int value;
};

// Greedy coefficient merging: repeatedly constrain the xor of the two
// largest-magnitude support elements of the working (restricted) spectrum,
// choosing the value that adds their magnitudes, until the restriction is
// constant. Returns only the constraints added on top of `initial`. Every
// step removes at least one support element, so at most s-1 constraints
// are added. Ties break lexicographically by mask; a lone non-constant
// character is constrained directly to 0.
std::vector<GreedyConstraint> greedy_merge_constraints(
    const Spectrum& sp, const AffineSubspace& initial, int* constant_value);

ConstantSubspaceResult greedy_constant_subspace(const Spectrum& sp);

// Exact minimum co-dimension of a constant restriction, by iterative
// deepening over canonical constraint chains (new rows in increasing
// leading-bit order, reduced against earlier rows, both value branches).
// nullopt when no constant subspace exists within max_codim; max_codim = n
// always succeeds. Intended for small n.
std::optional<ConstantSubspaceResult> exact_min_codim(const BooleanFunction& f,
                                                      int max_codim);

// Recomputes the restriction of sp under the result's subspace and checks
// it is a single constant bucket of full magnitude with the claimed sign.
bool validate_constant(const Spectrum& sp, const ConstantSubspaceResult& result);

}  // namespace spectral
