#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "fibcalc/psi.hpp"

namespace fibcalc {

// Truncated formal power series with exact rational coefficients. Degrees
// run 0..order; zero coefficients are never stored. Operators that push
// mass past the order drop it and mark the result truncated.
class FormalSeries {
 public:
  explicit FormalSeries(int order);

  static FormalSeries monomial(int degree, const Rational& coeff, int order);
  static FormalSeries constant(const Rational& value, int order);

  int order() const { return order_; }
  bool truncated() const { return truncated_; }
  void mark_truncated() { truncated_ = true; }

  const std::map<int, Rational>& coefficients() const { return coef_; }
  Rational coefficient(int degree) const;
  void set_coefficient(int degree, const Rational& value);

  bool is_zero() const { return coef_.empty(); }
  // Highest stored degree; -1 for the zero series.
  int degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }

  FormalSeries& operator+=(const FormalSeries& other);
  friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) {
    lhs += rhs;
    return lhs;
  }
  FormalSeries& operator*=(const Rational& scalar);
  friend FormalSeries operator*(const Rational& scalar, FormalSeries s) {
    s *= scalar;
    return s;
  }

  // Coefficientwise equality up to the common (smaller) order.
  friend bool operator==(const FormalSeries& a, const FormalSeries& b);

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  std::string to_string() const;  // "c0 + c1 x + c2 x^2 + ..."
  std::string to_json() const;
  static FormalSeries from_json(const std::string& text);

 private:
  std::map<int, Rational> coef_;
  int order_;
  bool truncated_ = false;
};

// x^n -> x^{n-1}, constants -> 0 (divided-difference-style down shift).
FormalSeries shift_down(const FormalSeries& s);

// Ordinary derivative: x^n -> n x^{n-1}.
FormalSeries derivative(const FormalSeries& s);

// psi-derivative: x^n -> bracket(n) x^{n-1}, constants -> 0.
FormalSeries psi_derivative(const PsiInstance& inst, const FormalSeries& s);

// Star-product action of x: x^n -> ((n+1)/bracket(n+1)) x^{n+1}.
FormalSeries star_x(const PsiInstance& inst, const FormalSeries& s);

// Noncommutative star product: f acts as the operator f(star_x) on g,
// extended linearly over g's monomials.
FormalSeries star(const PsiInstance& inst, const FormalSeries& f,
                  const FormalSeries& g);

// n-th star power of x: (n!/psi_factorial(n)) x^n. Requires n <= order.
FormalSeries star_power(const PsiInstance& inst, int n, int order);

// psi-exponential: sum of alpha^k x^k / psi_factorial(k), k = 0..order.
FormalSeries exp_psi(const PsiInstance& inst, const Rational& alpha,
                     int order);

// Difference operator: sum over k >= 1 of psi_derivative^k / psi_factorial(k)
// (finite on polynomials).
FormalSeries delta_psi(const PsiInstance& inst, const FormalSeries& s);

// Antiderivative with zero constant term: x^n -> x^{n+1}/bracket(n+1).
FormalSeries psi_integral(const PsiInstance& inst, const FormalSeries& s);

// Definite integral: antiderivative at b minus at a, exact (no truncation).
Rational psi_integral(const PsiInstance& inst, const FormalSeries& s,
                      const Rational& a, const Rational& b);

}  // namespace fibcalc
