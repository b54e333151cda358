#include "dp1asym/context.hpp"

#include <stdexcept>
#include <string>

namespace dp1 {

Context::Context(mpfr_prec_t precision_bits) : bits_(precision_bits) {
    if (precision_bits < min_bits) {
        throw std::invalid_argument(
            "precision must be at least 64 bits, got " +
            std::to_string(static_cast<long>(precision_bits)));
    }
}

} // namespace dp1
