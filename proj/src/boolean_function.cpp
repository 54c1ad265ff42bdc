#include "spectral/boolean_function.hpp"

#include <stdexcept>

namespace spectral {

BooleanFunction::BooleanFunction(int n) : n_(n) {
    if (n < 1 || n > max_vars())
        throw std::invalid_argument("BooleanFunction: n out of range");
    bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
}

}  // namespace spectral
