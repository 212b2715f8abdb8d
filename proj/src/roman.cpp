#include "fibcalc/roman.hpp"

namespace fibcalc {

namespace {
int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

const PsiInstance& fibonacci_instance() {
  static const PsiInstance inst = PsiInstance::fibonacci();
  return inst;
}
}  // namespace

Rational roman_bracket(const PsiInstance& inst, std::int64_t n) {
  if (n > 0) return inst.bracket(n);
  if (n == 0) return Rational(1);
  return -inst.bracket(-n);
}

Rational roman_factorial(const PsiInstance& inst, std::int64_t n) {
  if (n >= 0) return inst.factorial(n);
  // (-1)^(n+1) / (-n-1)_psi!
  return Rational(sign_pow(n + 1)) / inst.factorial(-n - 1);
}

Rational roman_coefficient(const PsiInstance& inst, std::int64_t n,
                           std::int64_t k) {
  return roman_factorial(inst, n) /
         (roman_factorial(inst, k) * roman_factorial(inst, n - k));
}

Rational psi_binomial(const PsiInstance& inst, std::int64_t n,
                      std::int64_t k) {
  if (k < 0 || k > n) throw std::domain_error("psi binomial: need 0 <= k <= n");
  return inst.factorial(n) / (inst.factorial(k) * inst.factorial(n - k));
}

BigInt fibonomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error("fibonomial: need 0 <= k <= n");
  const Rational value = psi_binomial(fibonacci_instance(), n, k);
  if (!is_integer(value))
    throw std::logic_error("fibonomial is not an integer at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  return numerator(value);
}

Rational falling_factorial(const PsiInstance& inst, std::int64_t n,
                           std::int64_t k) {
  if (k < 0) throw std::domain_error("falling factorial: need k >= 0");
  Rational product(1);
  for (std::int64_t j = 0; j < k; ++j) product *= roman_bracket(inst, n - j);
  return product;
}

std::optional<Rational> case_formula(const PsiInstance& inst, std::int64_t n,
                                     std::int64_t k) {
  if (n >= 0 && k >= 0 && k <= n) return psi_binomial(inst, n, k);
  if (k >= 0 && n < 0)
    return Rational(sign_pow(k)) * psi_binomial(inst, -n - 1 + k, k);
  if (n < 0 && n >= k)
    return Rational(sign_pow(k + n)) * psi_binomial(inst, -k - 1, n - k);
  return std::nullopt;
}

Rational pascal_residual(const PsiInstance& inst, std::int64_t n,
                         std::int64_t k) {
  return roman_coefficient(inst, n, k) - roman_coefficient(inst, n - 1, k - 1) -
         roman_coefficient(inst, n - 1, k);
}

}  // namespace fibcalc
