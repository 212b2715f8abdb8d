#pragma once

#include <cstdint>

#include "fibcalc/series.hpp"

namespace fibcalc {

// Deformation parameter for the q-calculus; exact rational, q not 0 or 1.
class QParam {
 public:
  explicit QParam(Rational q);
  const Rational& q() const { return q_; }

 private:
  Rational q_;
};

// [n]_q = 1 + q + ... + q^{n-1} for n >= 1; 0 at n == 0.
Rational q_bracket(const QParam& qp, std::int64_t n);

// q-derivative: x^n -> [n]_q x^{n-1}, constants -> 0. Agrees with the
// operator form (1 - q Q)/(1 - q) composed with the down shift, where
// Q rescales the argument by q.
FormalSeries q_derivative(const QParam& qp, const FormalSeries& s);

// Argument rescaling operator: f(x) -> f(qx).
FormalSeries q_scale(const QParam& qp, const FormalSeries& s);

// Right inverse of the q-derivative: x^n -> x^{n+1}/[n+1]_q.
FormalSeries q_integral(const QParam& qp, const FormalSeries& s);

// Partial sum of the q-integral over the geometric lattice:
// (1-q) z sum_{k=0}^{terms-1} phi(q^k z) q^k, exact.
Rational q_integral_sum(const QParam& qp, const FormalSeries& phi,
                        const Rational& z, int terms);

// Checks q_derivative(q_integral(x^n)) == x^n exactly for n = 0..max_degree.
bool q_right_inverse_holds(const QParam& qp, int max_degree);

}  // namespace fibcalc
