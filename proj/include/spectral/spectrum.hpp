#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spectral/boolean_function.hpp"
#include "spectral/gf2.hpp"
#include "spectral/rational.hpp"

namespace spectral {

// Exact Fourier spectrum at scale 2^n: stores c_gamma = 2^n * fhat(gamma)
// as signed integers, nonzero entries only, sorted by mask. For a spectrum
// of a Boolean function, sum of c^2 equals 4^n (scaled Parseval).
struct Spectrum {
    int n = 0;
    std::vector<std::pair<LinearForm, std::int64_t>> coeffs;

    std::int64_t scale() const { return std::int64_t{1} << n; }
    int sparsity() const { return static_cast<int>(coeffs.size()); }
    std::vector<LinearForm> support() const;
    std::int64_t coeff(LinearForm gamma) const;  // 0 when absent
};

// Exact Walsh-Hadamard transform: c_gamma = sum_x f(x) chi_gamma(x),
// computed by an integer butterfly. No rounding anywhere.
Spectrum wht(const BooleanFunction& f);

// Throws NotBooleanError when some reconstructed value is not +-1.
BooleanFunction inverse_wht(const Spectrum& sp);

int dimension(const Spectrum& sp);

// p = 1: the 1-norm sum|c|/2^n as an exact rational.
// p = 2: the SQUARED 2-norm sum c^2/4^n (equals 1 for Boolean spectra).
// Other p throws std::invalid_argument.
Rational spectral_norm(const Spectrum& sp, int p);

// (sum|c|)^2 <= s * 4^n, checked in 128-bit integer arithmetic.
bool check_norm_sparsity(const Spectrum& sp);

struct NotBooleanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spectral
