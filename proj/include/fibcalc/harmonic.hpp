#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibcalc/roman.hpp"

namespace fibcalc {

// Harmonic number f_n = 1/bracket(1) + ... + 1/bracket(n), f_0 = 0.
Rational harmonic_number(const PsiInstance& inst, std::int64_t n);

// Harmonic-logarithm basis function at a point x > 0:
//   t = 0:  x^n for n >= 0, identically 0 for n < 0;
//   t = 1:  x^n (ln x - f_n) for n >= 0, x^n for n < 0.
double harmonic_log_eval(const PsiInstance& inst, int t, std::int64_t n,
                         double x);

// Finite linear combination of harmonic-logarithm basis functions, indexed
// by (t, n). Canonical form: no (t=0, n<0) keys (those basis functions are
// identically zero), no zero coefficients.
class LogElement {
 public:
  using Key = std::pair<int, std::int64_t>;

  LogElement() = default;
  static LogElement basis(int t, std::int64_t n);

  void add_term(int t, std::int64_t n, const Rational& coeff);
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coefficient(int t, std::int64_t n) const;
  bool is_zero() const { return terms_.empty(); }
  // True if some term needs a logarithm to evaluate (t=1, n>=0).
  bool has_log_term() const;

  friend bool operator==(const LogElement&, const LogElement&) = default;

  double evaluate(const PsiInstance& inst, double x) const;
  // Exact evaluation at a rational point; rejects log-bearing terms.
  Rational evaluate_exact(const Rational& x) const;

  std::string to_json() const;
  static LogElement from_json(const std::string& text);

 private:
  std::map<Key, Rational> terms_;
};

// Basiswise derivative: phi(t, n) -> roman_bracket(n) * phi(t, n-1).
LogElement log_derivative(const PsiInstance& inst, const LogElement& e);

// Basiswise antiderivative: phi(t, n) -> phi(t, n+1) / roman_bracket(n+1),
// except (t=0, n=-1) which maps to 0.
LogElement log_antiderivative(const PsiInstance& inst, const LogElement& e);

// Truncated exponential of the shift operator: sum over k = 0..terms of
// (a^k / psi_factorial(k)) applied to the k-th basiswise derivative of
// phi(t, n).
LogElement generalized_shift(const PsiInstance& inst, int t, std::int64_t n,
                             const Rational& a, int terms);

// Partial sum of the binomial-style expansion:
// sum over k = 0..terms of [n k] * phi(t, n-k)(a) * x^k, in floating point.
double log_binomial_rhs(const PsiInstance& inst, int t, std::int64_t n,
                        double a, double x, int terms);

// Absolute difference between the shift-operator expansion (shift by x,
// evaluated at a: the expansion in powers of x that converges for |x| < a)
// and log_binomial_rhs. Exact internally when no logarithm is involved.
double log_binomial_residual(const PsiInstance& inst, int t, std::int64_t n,
                             const Rational& a, const Rational& x, int terms);

struct BinomialityResult {
  bool ok = false;
  std::vector<Rational> row;  // shift coefficients on a^k x^{n-k}, k = 0..n
};

// Symbolic check (fibonacci instance) that the degree-n shift expansion
// carries fibonomial(n, k) on a^k x^{n-k}.
BinomialityResult binomiality_check(std::int64_t n);

}  // namespace fibcalc
