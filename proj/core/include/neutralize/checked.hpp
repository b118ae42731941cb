#pragma once

#include <cstdint>

namespace neutralize {

using Weight = std::int64_t;

// Overflow-checked 64-bit arithmetic. Each throws OverflowError instead of wrapping.
Weight checked_add(Weight a, Weight b);
Weight checked_sub(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

/// 3^k, checked.
Weight checked_pow3(unsigned k);

}  // namespace neutralize
