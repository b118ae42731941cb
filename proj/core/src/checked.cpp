#include "neutralize/checked.hpp"

#include <string>

#include "neutralize/errors.hpp"

namespace neutralize {

Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

Weight checked_pow3(unsigned k) {
  Weight r = 1;
  for (unsigned i = 0; i < k; ++i) r = checked_mul(r, 3);
  return r;
}

}  // namespace neutralize
