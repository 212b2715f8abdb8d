#include "fibcalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace fibcalc {

FormalSeries::FormalSeries(int order) : order_(order) {
  if (order < 0) throw std::domain_error("series: order must be >= 0");
}

FormalSeries FormalSeries::monomial(int degree, const Rational& coeff,
                                    int order) {
  FormalSeries s(order);
  s.set_coefficient(degree, coeff);
  return s;
}

FormalSeries FormalSeries::constant(const Rational& value, int order) {
  return monomial(0, value, order);
}

Rational FormalSeries::coefficient(int degree) const {
  const auto it = coef_.find(degree);
  return it == coef_.end() ? Rational(0) : it->second;
}

void FormalSeries::set_coefficient(int degree, const Rational& value) {
  if (degree < 0) throw std::domain_error("series: negative degree");
  if (degree > order_)
    throw std::domain_error("series: degree exceeds truncation order");
  if (value == 0)
    coef_.erase(degree);
  else
    coef_[degree] = value;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
  order_ = std::min(order_, other.order_);
  truncated_ = truncated_ || other.truncated_;
  std::erase_if(coef_, [&](const auto& e) { return e.first > order_; });
  for (const auto& [deg, c] : other.coef_) {
    if (deg > order_) continue;
    const Rational sum = coefficient(deg) + c;
    set_coefficient(deg, sum);
  }
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& [deg, c] : coef_) c *= scalar;
  return *this;
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
  const int order = std::min(a.order_, b.order_);
  auto ia = a.coef_.begin(), ib = b.coef_.begin();
  while (true) {
    // degrees above the common order do not participate
    if (ia != a.coef_.end() && ia->first > order) ia = a.coef_.end();
    if (ib != b.coef_.end() && ib->first > order) ib = b.coef_.end();
    const bool ea = ia == a.coef_.end(), eb = ib == b.coef_.end();
    if (ea || eb) return ea && eb;
    if (*ia != *ib) return false;
    ++ia;
    ++ib;
  }
}

Rational FormalSeries::evaluate(const Rational& x) const {
  // Horner over the sparse map, highest degree first.
  Rational acc(0);
  int top = -1;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
    if (top < 0)
      acc = it->second;
    else
      acc = acc * pow_rational(x, top - it->first) + it->second;
    top = it->first;
  }
  return top < 0 ? Rational(0) : acc * pow_rational(x, top);
}

double FormalSeries::evaluate(double x) const {
  double acc = 0;
  int top = -1;
  for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
    if (top < 0)
      acc = to_double(it->second);
    else
      acc = acc * std::pow(x, top - it->first) + to_double(it->second);
    top = it->first;
  }
  return top < 0 ? 0.0 : acc * std::pow(x, top);
}

std::string FormalSeries::to_string() const {
  if (coef_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : coef_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = mag == 1 && deg != 0;
    if (!unit) out << fibcalc::to_string(mag);
    if (deg >= 1) {
      if (!unit) out << " ";
      out << "x";
      if (deg >= 2) out << "^" << deg;
    }
  }
  return out.str();
}

std::string FormalSeries::to_json() const {
  nlohmann::json j;
  j["order"] = order_;
  j["truncated"] = truncated_;
  j["coefficients"] = nlohmann::json::object();
  for (const auto& [deg, c] : coef_)
    j["coefficients"][std::to_string(deg)] = fibcalc::to_string(c);
  return j.dump();
}

FormalSeries FormalSeries::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FormalSeries s(j.at("order").get<int>());
  if (j.value("truncated", false)) s.mark_truncated();
  for (const auto& [key, value] : j.at("coefficients").items())
    s.set_coefficient(std::stoi(key),
                      parse_rational(value.get<std::string>()));
  return s;
}

FormalSeries shift_down(const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients())
    if (deg >= 1) out.set_coefficient(deg - 1, c);
  return out;
}

FormalSeries derivative(const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients())
    if (deg >= 1) out.set_coefficient(deg - 1, Rational(deg) * c);
  return out;
}

FormalSeries psi_derivative(const PsiInstance& inst, const FormalSeries& s) {
  // bracket-weight operator composed with the down shift
  FormalSeries out = shift_down(s);
  FormalSeries weighted(out.order());
  if (out.truncated()) weighted.mark_truncated();
  for (const auto& [deg, c] : out.coefficients())
    weighted.set_coefficient(deg, inst.bracket(deg + 1) * c);
  return weighted;
}

FormalSeries star_x(const PsiInstance& inst, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients()) {
    if (deg + 1 > s.order()) {
      out.mark_truncated();
      continue;
    }
    out.set_coefficient(deg + 1,
                        c * Rational(deg + 1) / inst.bracket(deg + 1));
  }
  return out;
}

FormalSeries star(const PsiInstance& inst, const FormalSeries& f,
                  const FormalSeries& g) {
  const int order = std::min(f.order(), g.order());
  FormalSeries out(order);
  if (f.truncated() || g.truncated()) out.mark_truncated();
  for (const auto& [n, gc] : g.coefficients()) {
    if (n > order) {
      out.mark_truncated();
      continue;
    }
    // f(star_x) applied to x^n: the degree-(n+m) weight is
    // prod_{j=n+1}^{n+m} j / bracket(j).
    Rational weight(1);
    int m = 0;
    for (const auto& [fm, fc] : f.coefficients()) {
      while (m < fm) {
        ++m;
        if (n + m > order) break;
        weight *= Rational(n + m) / inst.bracket(n + m);
      }
      if (n + fm > order) {
        out.mark_truncated();
        break;
      }
      const Rational term = fc * gc * weight;
      out.set_coefficient(n + fm, out.coefficient(n + fm) + term);
    }
  }
  return out;
}

FormalSeries star_power(const PsiInstance& inst, int n, int order) {
  if (n < 0) throw std::domain_error("star power: need n >= 0");
  if (n > order)
    throw std::domain_error("star power: degree exceeds truncation order");
  Rational factorial(1);
  for (int j = 2; j <= n; ++j) factorial *= j;
  return FormalSeries::monomial(n, factorial / inst.factorial(n), order);
}

FormalSeries exp_psi(const PsiInstance& inst, const Rational& alpha,
                     int order) {
  FormalSeries out(order);
  Rational power(1);
  for (int k = 0; k <= order; ++k) {
    out.set_coefficient(k, power / inst.factorial(k));
    power *= alpha;
  }
  return out;
}

FormalSeries delta_psi(const PsiInstance& inst, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  FormalSeries power = s;
  std::int64_t k = 0;
  while (!power.is_zero()) {
    ++k;
    power = psi_derivative(inst, power);
    out += Rational(1) / inst.factorial(k) * power;
  }
  return out;
}

FormalSeries psi_integral(const PsiInstance& inst, const FormalSeries& s) {
  FormalSeries out(s.order());
  if (s.truncated()) out.mark_truncated();
  for (const auto& [deg, c] : s.coefficients()) {
    if (deg + 1 > s.order()) {
      out.mark_truncated();
      continue;
    }
    out.set_coefficient(deg + 1, c / inst.bracket(deg + 1));
  }
  return out;
}

Rational psi_integral(const PsiInstance& inst, const FormalSeries& s,
                      const Rational& a, const Rational& b) {
  // widen the order so the top-degree term is not dropped
  FormalSeries wide(s.order() + 1);
  for (const auto& [deg, c] : s.coefficients()) wide.set_coefficient(deg, c);
  const FormalSeries anti = psi_integral(inst, wide);
  return anti.evaluate(b) - anti.evaluate(a);
}

}  // namespace fibcalc
