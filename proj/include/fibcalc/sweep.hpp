#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibcalc/roman.hpp"

namespace fibcalc {

enum class Identity { kSymmetry, kPascal, kProduct, kCaseFormula };

Identity parse_identity(const std::string& name);
std::string identity_name(Identity id);

struct SweepViolation {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::optional<std::int64_t> j;  // present for the product identity only
  Rational lhs;
  Rational rhs;

  friend bool operator==(const SweepViolation&, const SweepViolation&) =
      default;
};

// Exhaustive evaluation of one identity over an inclusive window; violations
// list exactly the grid points where lhs != rhs, ordered by (n, k, j).
struct SweepReport {
  std::string identity;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<SweepViolation> violations;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

// Serial reference implementation.
SweepReport run_sweep_serial(const PsiInstance& inst, std::int64_t lo,
                             std::int64_t hi, Identity identity);

// OpenMP-parallel sweep; produces the same report as the serial reference.
SweepReport run_sweep(const PsiInstance& inst, std::int64_t lo,
                      std::int64_t hi, Identity identity);

std::string to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const std::string& text);

}  // namespace fibcalc
