#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

// Linear algebra over F2 on bitmask-encoded linear forms.
//
// Bit convention used everywhere in this library: masks and point indices
// share one layout in which bit n-1 (the most significant of the low n
// bits) is variable x1 and bit 0 is xn. The zero mask is the constant
// character chi_0 == 1.

namespace spectral {

using LinearForm = std::uint32_t;

inline constexpr int kMaxVars = 24;

// Hard cap on the ambient dimension; SPECTRAL_PDT_MAX_N can lower it.
int max_vars();

// gamma(x) in {0,1}.
inline int form_value(LinearForm gamma, std::uint32_t x) {
    return __builtin_popcount(gamma & x) & 1;
}

// Position of the highest set bit, -1 for the zero form.
inline int leading_bit(LinearForm f) {
    return f == 0 ? -1 : 31 - __builtin_clz(f);
}

// Reduced row echelon basis: rows have distinct leading bits in strictly
// decreasing order, and no row has a bit at another row's leading position.
// This form is canonical for the row space.
struct Gf2Basis {
    std::vector<LinearForm> rows;
    int ambient_n = 0;

    int rank() const { return static_cast<int>(rows.size()); }

    // Residue of v modulo the row space; zero iff v is in the span.
    // The residue is a canonical coset key.
    LinearForm reduce(LinearForm v) const;

    bool contains(LinearForm v) const { return reduce(v) == 0; }

    // Combination bits for v in span: bit i set iff rows[i] participates.
    // Precondition: contains(v).
    std::uint32_t coords(LinearForm v) const;
};

Gf2Basis row_reduce(std::span<const LinearForm> forms, int n);
int gf2_rank(std::span<const LinearForm> forms, int n);
bool in_span(LinearForm v, const Gf2Basis& basis);

struct CosetClass {
    LinearForm representative;        // smallest member mask
    std::vector<LinearForm> members;  // ascending
};

// Partition of `support` into cosets of the row space: two forms share a
// class iff their sum reduces to zero. Classes ordered by representative.
std::vector<CosetClass> coset_partition(std::span<const LinearForm> support,
                                        const Gf2Basis& basis);

// Full-rank completion: the input rows verbatim, followed by unit forms at
// the leading positions the input does not cover (high to low).
std::vector<LinearForm> extend_to_full_basis(const Gf2Basis& basis);

// A point x with gamma(x)=b for every constraint, or nullopt when the
// system is inconsistent. Free coordinates are set to zero.
std::optional<std::uint32_t> solve_affine_point(
    std::span<const std::pair<LinearForm, int>> constraints, int n);

}  // namespace spectral
