#pragma once

#include <cstdint>
#include <vector>

#include "spectral/gf2.hpp"

namespace spectral {

// Truth table over F2^n with values in {+1,-1}, bit-packed: a set bit at
// point x encodes f(x) = -1 (the (-1)^b convention, 0 -> +1, 1 -> -1).
class BooleanFunction {
public:
    explicit BooleanFunction(int n);

    int n() const { return n_; }
    std::uint32_t size() const { return std::uint32_t{1} << n_; }

    int value(std::uint32_t x) const {
        return (bits_[x >> 6] >> (x & 63)) & 1 ? -1 : +1;
    }
    // 0/1 view of the same table (1 means f(x) = -1).
    int bit(std::uint32_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1; }

    void set_bit(std::uint32_t x, int b) {
        const std::uint64_t m = std::uint64_t{1} << (x & 63);
        if (b) bits_[x >> 6] |= m; else bits_[x >> 6] &= ~m;
    }
    void set_value(std::uint32_t x, int v) { set_bit(x, v < 0 ? 1 : 0); }

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    int n_;
    std::vector<std::uint64_t> bits_;
};

inline int evaluate(const BooleanFunction& f, std::uint32_t x) { return f.value(x); }

// chi_gamma(x) = (-1)^{gamma(x)}.
inline int evaluate_character(LinearForm gamma, std::uint32_t x) {
    return form_value(gamma, x) ? -1 : +1;
}

}  // namespace spectral
