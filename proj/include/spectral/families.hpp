#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "spectral/affine.hpp"
#include "spectral/boolean_function.hpp"

namespace spectral {

// Deterministic generators for test function families. Every claimed
// (sparsity, dimension) pair is a consequence of the construction and is
// re-verified against the transform in the test suites, never assumed.

// k address bits (the k most significant variables) select one of 2^k
// addressee bits. n = k + 2^k, sparsity 4^k, dimension k + 2^k.
BooleanFunction address(int k);  // 1 <= k <= 4

// +-1 indicator of an affine subspace: f = 1 - 2*1_V. Requires
// codim >= 2 (at codim 1 the constant coefficient vanishes).
// Sparsity 2^codim, dimension codim.
BooleanFunction subspace_indicator(const AffineSubspace& v);

// f(x,y) = (-1)^{<x,y>} on n = 2m variables; sparsity 4^m, dimension 2m.
BooleanFunction inner_product(int m);

// f = chi_mask; sparsity 1.
BooleanFunction parity(int n, LinearForm mask);

// Majority on odd n (ties impossible); more ones than zeros maps to -1.
BooleanFunction majority(int n);

BooleanFunction constant(int sign, int n);

// f(x) = g(gamma_1(x), ..., gamma_k(x)) for explicit forms and an explicit
// inner function g on k = |forms| variables; gamma_1 feeds g's most
// significant input bit.
BooleanFunction parity_junta(int n, std::span<const LinearForm> forms,
                             const BooleanFunction& g);

// Seeded random junta: a uniformly random g on k bits composed with a
// random rank-k set of forms. Bit-reproducible across platforms.
BooleanFunction random_parity_junta(int n, int k, std::uint64_t seed);

BooleanFunction random_function(int n, std::uint64_t seed);

// Parsed {"family": ..., params...} descriptor.
struct FamilySpec {
    std::string family;
    int k = 0;
    int n = 0;
    int m = 0;
    int codim = 0;
    int sign = +1;
    LinearForm mask = 0;
    std::uint64_t seed = 0;

    std::string descriptor() const;  // canonical compact JSON
};

FamilySpec parse_family_spec(const std::string& json_text);
BooleanFunction make_family(const FamilySpec& spec);

}  // namespace spectral
