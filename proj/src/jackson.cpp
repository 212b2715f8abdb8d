#include "fibcalc/jackson.hpp"

namespace fibcalc {

QParam::QParam(Rational q) : q_(std::move(q)) {
  if (q_ == 0 || q_ == 1) throw std::domain_error("q must not be 0 or 1");
}

Rational q_bracket(const QParam& qp, std::int64_t n) {
  if (n < 0) throw std::domain_error("q bracket: index must be >= 0");
  Rational sum(0), power(1);
  for (std::int64_t j = 0; j < n; ++j) {
    sum += power;
    power *= qp.q();
  }
  return sum;
}

FormalSeries q_derivative(const QParam& qp, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients())
    if (deg >= 1) out.set_coefficient(deg - 1, q_bracket(qp, deg) * c);
  return out;
}

FormalSeries q_scale(const QParam& qp, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients())
    out.set_coefficient(deg, c * pow_rational(qp.q(), deg));
  return out;
}

FormalSeries q_integral(const QParam& qp, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients()) {
    if (deg + 1 > s.order()) {
      out.mark_truncated();
      continue;
    }
    const Rational denom = q_bracket(qp, deg + 1);
    if (denom == 0)
      throw std::domain_error("q integral: [" + std::to_string(deg + 1) +
                              "]_q vanishes for this q");
    out.set_coefficient(deg + 1, c / denom);
  }
  return out;
}

Rational q_integral_sum(const QParam& qp, const FormalSeries& phi,
                        const Rational& z, int terms) {
  if (terms < 1) throw std::domain_error("q integral sum: need terms >= 1");
  Rational sum(0);
  Rational qk(1);  // q^k
  for (int k = 0; k < terms; ++k) {
    sum += phi.evaluate(qk * z) * qk;
    qk *= qp.q();
  }
  return (Rational(1) - qp.q()) * z * sum;
}

bool q_right_inverse_holds(const QParam& qp, int max_degree) {
  if (max_degree < 0) return true;
  for (int n = 0; n <= max_degree; ++n) {
    const auto mono = FormalSeries::monomial(n, Rational(1), max_degree + 1);
    if (!(q_derivative(qp, q_integral(qp, mono)) == mono)) return false;
  }
  return true;
}

}  // namespace fibcalc
