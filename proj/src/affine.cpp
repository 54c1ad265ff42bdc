#include "spectral/affine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spectral {

std::optional<AffineSubspace> AffineSubspace::from_constraints(
    std::span<const std::pair<LinearForm, int>> constraints, int n) {
    AffineSubspace v = whole_space(n);
    for (const auto& [form, value] : constraints) {
        if (!v.add_constraint(form, value)) return std::nullopt;
    }
    return v;
}

bool AffineSubspace::add_constraint(LinearForm form, int value) {
    value &= 1;
    const LinearForm limit = (LinearForm{1} << ambient_n) - 1;
    if (form & ~limit) throw std::invalid_argument("constraint form exceeds ambient n");
    // Forward-reduce against the canonical rows, folding values along.
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        if (form & (LinearForm{1} << leading_bit(basis.rows[i]))) {
            form ^= basis.rows[i];
            value ^= (values >> i) & 1;
        }
    }
    if (form == 0) return value == 0;  // duplicate or contradiction
    const int lead = leading_bit(form);
    // Clear the new leading bit from existing rows (stay fully reduced).
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        if (basis.rows[i] & (LinearForm{1} << lead)) {
            basis.rows[i] ^= form;
            values ^= static_cast<std::uint32_t>(value) << i;
        }
    }
    auto pos = std::upper_bound(basis.rows.begin(), basis.rows.end(), form,
                                [](LinearForm a, LinearForm b) {
                                    return leading_bit(a) > leading_bit(b);
                                });
    const std::size_t idx = static_cast<std::size_t>(pos - basis.rows.begin());
    basis.rows.insert(pos, form);
    const std::uint32_t low = values & ((std::uint32_t{1} << idx) - 1);
    const std::uint32_t high = values >> idx;
    values = low | (static_cast<std::uint32_t>(value) << idx) | (high << (idx + 1));
    return true;
}

bool AffineSubspace::contains_point(std::uint32_t x) const {
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        if (form_value(basis.rows[i], x) != static_cast<int>((values >> i) & 1))
            return false;
    }
    return true;
}

std::vector<std::pair<LinearForm, int>> AffineSubspace::constraint_list() const {
    std::vector<std::pair<LinearForm, int>> out;
    out.reserve(basis.rows.size());
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        out.emplace_back(basis.rows[i], static_cast<int>((values >> i) & 1));
    }
    return out;
}

CosetDecomposition decompose(const Spectrum& sp, const Gf2Basis& gamma) {
    CosetDecomposition dec;
    dec.n = sp.n;
    dec.gamma = gamma;
    // Group support by coset residue; the class representative is the
    // smallest member mask.
    std::map<LinearForm, std::vector<std::pair<LinearForm, std::int64_t>>> classes;
    for (const auto& [mask, c] : sp.coeffs) classes[gamma.reduce(mask)].emplace_back(mask, c);
    dec.buckets.reserve(classes.size());
    for (auto& [residue, members] : classes) {
        Bucket bucket;
        bucket.rep = members.front().first;  // members come mask-sorted
        for (const auto& [mask, c] : members) {
            const LinearForm alpha = mask ^ bucket.rep;
            bucket.members.push_back(BucketMember{alpha, gamma.coords(alpha), c});
        }
        std::sort(bucket.members.begin(), bucket.members.end(),
                  [](const BucketMember& a, const BucketMember& b) { return a.alpha < b.alpha; });
        dec.buckets.push_back(std::move(bucket));
    }
    std::sort(dec.buckets.begin(), dec.buckets.end(),
              [](const Bucket& a, const Bucket& b) { return a.rep < b.rep; });
    return dec;
}

std::int64_t eval_bucket(const Bucket& bucket, std::uint32_t b) {
    std::int64_t sum = 0;
    for (const BucketMember& m : bucket.members) {
        sum += (__builtin_popcount(m.gamma_coords & b) & 1) ? -m.coeff : m.coeff;
    }
    return sum;
}

Spectrum leaf_spectrum(const CosetDecomposition& dec, std::uint32_t b) {
    Spectrum sp;
    sp.n = dec.n;
    for (const Bucket& bucket : dec.buckets) {
        const std::int64_t v = eval_bucket(bucket, b);
        if (v != 0) sp.coeffs.emplace_back(bucket.rep, v);
    }
    return sp;  // buckets are rep-sorted, so coeffs stay sorted
}

BooleanFunction materialize(const BooleanFunction& f, const AffineSubspace& v) {
    const int n = f.n();
    if (v.ambient_n != n) throw std::invalid_argument("materialize: ambient mismatch");
    const int codim = v.codim();
    const int m = n - codim;
    if (m < 1) throw std::invalid_argument("materialize: no free coordinates left");

    const std::vector<LinearForm> full = extend_to_full_basis(v.basis);

    // Solve L(x) = y for unit assignments: unit_point[i] is the x with
    // full[i](x) = 1 and all other rows zero; a general y is the xor of
    // its unit points. Gaussian elimination on (row, y-combination) pairs.
    std::vector<LinearForm> rows(full);
    std::vector<std::uint32_t> combo(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) combo[i] = std::uint32_t{1} << i;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t pivot = i;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            if (leading_bit(rows[j]) > leading_bit(rows[pivot])) pivot = j;
        }
        std::swap(rows[i], rows[pivot]);
        std::swap(combo[i], combo[pivot]);
        const int lead = leading_bit(rows[i]);
        if (lead < 0) throw std::logic_error("materialize: completion not full rank");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != i && (rows[j] & (LinearForm{1} << lead))) {
                rows[j] ^= rows[i];
                combo[j] ^= combo[i];
            }
        }
    }
    // Now rows[i] is a unit form e_{lead_i}; x's bit lead_i equals the
    // parity of combo[i] against y.
    std::vector<std::uint32_t> unit_point(full.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int bitpos = leading_bit(rows[i]);
        for (std::size_t yi = 0; yi < full.size(); ++yi) {
            if (combo[i] & (std::uint32_t{1} << yi))
                unit_point[yi] |= std::uint32_t{1} << bitpos;
        }
    }

    std::uint32_t base = 0;  // x-image of the constrained coordinates
    for (int i = 0; i < codim; ++i) {
        if ((v.values >> i) & 1) base ^= unit_point[i];
    }

    BooleanFunction g(m);
    for (std::uint32_t z = 0; z < (std::uint32_t{1} << m); ++z) {
        std::uint32_t x = base;
        for (int j = 0; j < m; ++j) {
            // z's bit m-1-j is the value of full[codim + j] (x1-MSB style).
            if ((z >> (m - 1 - j)) & 1) x ^= unit_point[codim + j];
        }
        g.set_bit(z, f.bit(x));
    }
    return g;
}

Rational nonzero_fraction(std::span<const PolyTerm> poly, int m) {
    if (m < 0 || m > 20) throw std::invalid_argument("nonzero_fraction: m out of range");
    std::vector<PolyTerm> terms;
    for (const PolyTerm& t : poly) {
        if (t.coeff != 0) terms.push_back(t);
    }
    if (terms.empty()) throw EmptyPolyError("nonzero_fraction: all coefficients zero");
    const std::uint32_t size = std::uint32_t{1} << m;
    std::int64_t nonzero = 0;
    for (std::uint32_t a = 0; a < size; ++a) {
        // Bit set in a means that variable takes the value -1.
        std::int64_t val = 0;
        for (const PolyTerm& t : terms) {
            val += (__builtin_popcount(t.monomial & a) & 1) ? -t.coeff : t.coeff;
        }
        if (val != 0) ++nonzero;
    }
    return Rational(nonzero, static_cast<std::int64_t>(size));
}

}  // namespace spectral
