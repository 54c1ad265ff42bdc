#include "spectral/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectral {

std::vector<LinearForm> Spectrum::support() const {
    std::vector<LinearForm> out;
    out.reserve(coeffs.size());
    for (const auto& [mask, c] : coeffs) out.push_back(mask);
    return out;
}

std::int64_t Spectrum::coeff(LinearForm gamma) const {
    auto it = std::lower_bound(coeffs.begin(), coeffs.end(), gamma,
                               [](const auto& e, LinearForm g) { return e.first < g; });
    return (it != coeffs.end() && it->first == gamma) ? it->second : 0;
}

namespace {

// In-place integer butterfly; afterwards v[gamma] = sum_x v0[x] (-1)^<gamma,x>.
void butterfly(std::vector<std::int64_t>& v) {
    const std::size_t size = v.size();
    for (std::size_t len = 1; len < size; len <<= 1) {
        for (std::size_t i = 0; i < size; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const std::int64_t a = v[j];
                const std::int64_t b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

}  // namespace

Spectrum wht(const BooleanFunction& f) {
    const std::uint32_t size = f.size();
    std::vector<std::int64_t> v(size);
    for (std::uint32_t x = 0; x < size; ++x) v[x] = f.value(x);
    butterfly(v);
    Spectrum sp;
    sp.n = f.n();
    for (std::uint32_t gamma = 0; gamma < size; ++gamma) {
        if (v[gamma] != 0) sp.coeffs.emplace_back(gamma, v[gamma]);
    }
    return sp;
}

BooleanFunction inverse_wht(const Spectrum& sp) {
    const std::uint32_t size = std::uint32_t{1} << sp.n;
    std::vector<std::int64_t> v(size, 0);
    for (const auto& [mask, c] : sp.coeffs) {
        if (mask >= size) throw std::invalid_argument("coefficient mask exceeds 2^n");
        v[mask] = c;
    }
    butterfly(v);  // self-inverse up to the 2^n factor
    const std::int64_t scale = sp.scale();
    BooleanFunction f(sp.n);
    for (std::uint32_t x = 0; x < size; ++x) {
        if (v[x] == scale) continue;
        if (v[x] == -scale) f.set_bit(x, 1);
        else throw NotBooleanError("inverse_wht: reconstructed value not +-1");
    }
    return f;
}

int dimension(const Spectrum& sp) {
    const auto supp = sp.support();
    return gf2_rank(supp, sp.n);
}

Rational spectral_norm(const Spectrum& sp, int p) {
    if (p == 1) {
        std::int64_t sum = 0;
        for (const auto& [mask, c] : sp.coeffs) sum += c < 0 ? -c : c;
        return Rational(sum, sp.scale());
    }
    if (p == 2) {
        std::int64_t sum = 0;
        for (const auto& [mask, c] : sp.coeffs) sum += c * c;
        return Rational(sum, sp.scale() * sp.scale());
    }
    throw std::invalid_argument("spectral_norm: only p = 1 and p = 2 supported");
}

bool check_norm_sparsity(const Spectrum& sp) {
    unsigned __int128 sum = 0;
    for (const auto& [mask, c] : sp.coeffs) sum += static_cast<unsigned __int128>(c < 0 ? -c : c);
    const unsigned __int128 lhs = sum * sum;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(sp.sparsity()) *
                                  static_cast<unsigned __int128>(sp.scale()) *
                                  static_cast<unsigned __int128>(sp.scale());
    return lhs <= rhs;
}

}  // namespace spectral
