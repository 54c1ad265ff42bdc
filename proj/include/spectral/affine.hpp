#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spectral/boolean_function.hpp"
#include "spectral/gf2.hpp"
#include "spectral/rational.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

// Affine subspace {x : gamma_i(x) = b_i} in canonical form: the constraint
// forms are a reduced echelon basis, values[i] is the bit attached to
// basis.rows[i]. Co-dimension = basis rank.
struct AffineSubspace {
    Gf2Basis basis;
    std::uint32_t values = 0;
    int ambient_n = 0;

    int codim() const { return basis.rank(); }

    // Canonicalizes an arbitrary constraint list by augmented row
    // reduction. nullopt when the system is inconsistent. A zero form with
    // value 0 is dropped, with value 1 it is the inconsistent system.
    static std::optional<AffineSubspace> from_constraints(
        std::span<const std::pair<LinearForm, int>> constraints, int n);

    static AffineSubspace whole_space(int n) {
        return AffineSubspace{Gf2Basis{{}, n}, 0, n};
    }

    // Adds one constraint in place. Returns false when it contradicts the
    // system (the subspace is left unchanged). A dependent consistent
    // constraint collapses silently.
    bool add_constraint(LinearForm form, int value);

    bool contains_point(std::uint32_t x) const;
    std::vector<std::pair<LinearForm, int>> constraint_list() const;
};

// One coset of span(Gamma) meeting the support. rep is the smallest
// support mask in the coset; each member is an original support element
// rep ^ alpha with alpha in span(Gamma). gamma_coords caches the
// combination bits of alpha so a bucket evaluates with one popcount
// parity per member.
struct BucketMember {
    LinearForm alpha;
    std::uint32_t gamma_coords;
    std::int64_t coeff;
};

struct Bucket {
    LinearForm rep;
    std::vector<BucketMember> members;
};

// The expansion f = sum_j P_j(x) chi_{rep_j}(x) with buckets the coset
// polynomials P_j. Bucket count = number of support cosets; member counts
// sum to the sparsity.
struct CosetDecomposition {
    int n = 0;
    Gf2Basis gamma;
    std::vector<Bucket> buckets;
};

CosetDecomposition decompose(const Spectrum& sp, const Gf2Basis& gamma);

// P_j at the assignment b (bit i of b = value of gamma.rows[i]): the exact
// scaled coefficient of chi_{rep} in the restriction.
std::int64_t eval_bucket(const Bucket& bucket, std::uint32_t b);

// Spectrum of f restricted to the leaf b, in ambient coordinates and at
// ambient scale 2^n: support = {rep_j : P_j(b) != 0}.
Spectrum leaf_spectrum(const CosetDecomposition& dec, std::uint32_t b);

// The restriction as a function of the n - codim free coordinates,
// realized by completing the constraint basis and inverting the induced
// linear map. Its transform matches leaf_spectrum up to the coordinate
// change and the 2^codim scale factor.
BooleanFunction materialize(const BooleanFunction& f, const AffineSubspace& v);

struct PolyTerm {
    LinearForm monomial;  // variable subset over {+-1}^m
    std::int64_t coeff;
};

struct EmptyPolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact fraction of {+-1}^m assignments where the polynomial is nonzero,
// by full enumeration. Throws EmptyPolyError when all coefficients vanish.
// The uncertainty principle guarantees a result >= 1/#terms.
Rational nonzero_fraction(std::span<const PolyTerm> poly, int m);

}  // namespace spectral
