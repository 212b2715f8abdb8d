#pragma once

#include <cstdint>
#include <optional>

#include "fibcalc/psi.hpp"

namespace fibcalc {

// Roman bracket over all of Z: bracket(n) for n > 0, 1 at n == 0, and
// -bracket(-n) for n < 0 (the unique extension under which the Roman
// factorial satisfies [n]! = [n] * [n-1]! everywhere).
Rational roman_bracket(const PsiInstance& inst, std::int64_t n);

// Roman factorial: psi-factorial for n >= 0, (-1)^(n+1) / (-n-1)_psi! below.
Rational roman_factorial(const PsiInstance& inst, std::int64_t n);

// Roman coefficient [n k] = [n]! / ([k]! [n-k]!), defined for all integer
// pairs; generally rational.
Rational roman_coefficient(const PsiInstance& inst, std::int64_t n,
                           std::int64_t k);

// psi-binomial n_psi! / (k_psi! (n-k)_psi!) for 0 <= k <= n.
Rational psi_binomial(const PsiInstance& inst, std::int64_t n, std::int64_t k);

// Fibonomial coefficient F_n!/(F_k! F_{n-k}!), 0 <= k <= n; always an
// integer (checked).
BigInt fibonomial(std::int64_t n, std::int64_t k);

// Falling factorial over Roman brackets: product of roman_bracket(n - j)
// for j = 0..k-1; the plain bracket product when n >= k >= 0.
Rational falling_factorial(const PsiInstance& inst, std::int64_t n,
                           std::int64_t k);

// Piecewise closed form for the Roman coefficient:
//   0 <= k <= n       ->  psi-binomial(n, k)
//   k >= 0 > n        ->  (-1)^k   * psi-binomial(-n-1+k, k)
//   0 > n >= k        ->  (-1)^(k+n) * psi-binomial(-k-1, n-k)
// Any other region has no closed form here; nullopt means not applicable.
std::optional<Rational> case_formula(const PsiInstance& inst, std::int64_t n,
                                     std::int64_t k);

// Signed residual [n k] - [n-1 k-1] - [n-1 k]; zero exactly where the
// additive recurrence holds.
Rational pascal_residual(const PsiInstance& inst, std::int64_t n,
                         std::int64_t k);

}  // namespace fibcalc
