#pragma once

#include <cstdint>
#include <string>

#include "fibcalc/rational.hpp"

namespace fibcalc::testing {

inline Rational rat(const std::string& text) { return parse_rational(text); }
inline Rational rat(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(num), BigInt(den));
}

}  // namespace fibcalc::testing
