#pragma once

#include <cstdint>
#include <shared_mutex>
#include <string>
#include <vector>

#include "fibcalc/rational.hpp"

namespace fibcalc {

// Fibonacci numbers F_1 = F_2 = 1, F_n = F_{n-1} + F_{n-2}; exact.
BigInt fibonacci(std::int64_t n);

// A psi-sequence: a named total map n -> nonzero bracket value for n >= 1.
// The bracket sequence parametrizes the whole calculus; built-ins are
// fibonacci (n -> F_n), classic (n -> n) and q-gauss (n -> (1-q^n)/(1-q)).
//
// Bracket and factorial values are memoized; instances are immutable after
// construction and safe to share across threads (reads and idempotent cache
// fills are guarded).
class PsiInstance {
 public:
  static PsiInstance fibonacci();
  static PsiInstance classic();
  static PsiInstance q_gauss(const Rational& q);

  PsiInstance(const PsiInstance&) = delete;
  PsiInstance& operator=(const PsiInstance&) = delete;

  const std::string& name() const { return name_; }

  // n-th bracket value, n >= 1. Never zero.
  Rational bracket(std::int64_t n) const;

  // Product of bracket(1..n); 1 when n == 0. Requires n >= 0.
  Rational factorial(std::int64_t n) const;

  // Harmonic number: sum of 1/bracket(1..n); 0 when n == 0. Requires n >= 0.
  Rational harmonic(std::int64_t n) const;

 private:
  enum class Kind { kFibonacci, kClassic, kQGauss };

  PsiInstance(Kind kind, std::string name, Rational q);

  Rational compute_bracket(std::int64_t n, const Rational& prev) const;

  Kind kind_;
  std::string name_;
  Rational q_;

  mutable std::shared_mutex bracket_mutex_;
  mutable std::vector<Rational> brackets_;  // brackets_[i] == bracket(i + 1)
  mutable std::shared_mutex factorial_mutex_;
  mutable std::vector<Rational> factorials_;  // factorials_[i] == factorial(i)
  mutable std::shared_mutex harmonic_mutex_;
  mutable std::vector<Rational> harmonics_;  // harmonics_[i] == harmonic(i)
};

inline Rational psi_factorial(const PsiInstance& inst, std::int64_t n) {
  return inst.factorial(n);
}

}  // namespace fibcalc
