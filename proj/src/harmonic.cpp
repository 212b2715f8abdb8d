#include "fibcalc/harmonic.hpp"

#include <cmath>

#include <json.hpp>

namespace fibcalc {

Rational harmonic_number(const PsiInstance& inst, std::int64_t n) {
  return inst.harmonic(n);
}

double harmonic_log_eval(const PsiInstance& inst, int t, std::int64_t n,
                         double x) {
  if (x <= 0)
    throw std::domain_error("harmonic log: x must be positive");
  if (t != 0 && t != 1) throw std::domain_error("harmonic log: t must be 0 or 1");
  const double power = std::pow(x, static_cast<double>(n));
  if (t == 0) return n >= 0 ? power : 0.0;
  if (n < 0) return power;
  return power * (std::log(x) - to_double(inst.harmonic(n)));
}

LogElement LogElement::basis(int t, std::int64_t n) {
  LogElement e;
  e.add_term(t, n, Rational(1));
  return e;
}

void LogElement::add_term(int t, std::int64_t n, const Rational& coeff) {
  if (t != 0 && t != 1) throw std::domain_error("log element: t must be 0 or 1");
  if (t == 0 && n < 0) return;  // identically zero basis function
  if (coeff == 0) return;
  const Key key{t, n};
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational LogElement::coefficient(int t, std::int64_t n) const {
  const auto it = terms_.find({t, n});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LogElement::has_log_term() const {
  for (const auto& [key, coeff] : terms_)
    if (key.first == 1 && key.second >= 0) return true;
  return false;
}

double LogElement::evaluate(const PsiInstance& inst, double x) const {
  double sum = 0;
  for (const auto& [key, coeff] : terms_)
    sum += to_double(coeff) * harmonic_log_eval(inst, key.first, key.second, x);
  return sum;
}

Rational LogElement::evaluate_exact(const Rational& x) const {
  if (x <= 0) throw std::domain_error("harmonic log: x must be positive");
  Rational sum(0);
  for (const auto& [key, coeff] : terms_) {
    if (key.first == 1 && key.second >= 0)
      throw std::domain_error(
          "exact evaluation: element has a logarithmic term");
    sum += coeff * pow_rational(x, key.second);
  }
  return sum;
}

std::string LogElement::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, coeff] : terms_) {
    nlohmann::json e;
    e["t"] = key.first;
    e["n"] = key.second;
    e["coefficient"] = to_string(coeff);
    j.push_back(std::move(e));
  }
  return j.dump();
}

LogElement LogElement::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  LogElement e;
  for (const auto& item : j)
    e.add_term(item.at("t").get<int>(), item.at("n").get<std::int64_t>(),
               parse_rational(item.at("coefficient").get<std::string>()));
  return e;
}

LogElement log_derivative(const PsiInstance& inst, const LogElement& e) {
  LogElement out;
  for (const auto& [key, coeff] : e.terms())
    out.add_term(key.first, key.second - 1,
                 coeff * roman_bracket(inst, key.second));
  return out;
}

LogElement log_antiderivative(const PsiInstance& inst, const LogElement& e) {
  LogElement out;
  for (const auto& [key, coeff] : e.terms()) {
    if (key.first == 0 && key.second == -1) continue;  // maps to 0
    out.add_term(key.first, key.second + 1,
                 coeff / roman_bracket(inst, key.second + 1));
  }
  return out;
}

LogElement generalized_shift(const PsiInstance& inst, int t, std::int64_t n,
                             const Rational& a, int terms) {
  if (terms < 0) throw std::domain_error("generalized shift: need terms >= 0");
  LogElement out;
  Rational power(1);       // a^k
  Rational brackets(1);    // product of roman_bracket(n - j), j < k
  for (int k = 0; k <= terms; ++k) {
    out.add_term(t, n - k, power * brackets / inst.factorial(k));
    power *= a;
    brackets *= roman_bracket(inst, n - k);
  }
  return out;
}

double log_binomial_rhs(const PsiInstance& inst, int t, std::int64_t n,
                        double a, double x, int terms) {
  double sum = 0;
  double xk = 1;
  for (int k = 0; k <= terms; ++k) {
    sum += to_double(roman_coefficient(inst, n, k)) *
           harmonic_log_eval(inst, t, n - k, a) * xk;
    xk *= x;
  }
  return sum;
}

namespace {
// phi(t, n) at a rational point, defined only for log-free branches.
Rational harmonic_log_eval_exact(int t, std::int64_t n, const Rational& x) {
  if (x <= 0) throw std::domain_error("harmonic log: x must be positive");
  if (t == 0) return n >= 0 ? pow_rational(x, n) : Rational(0);
  if (n < 0) return pow_rational(x, n);
  throw std::domain_error("exact evaluation: logarithmic branch");
}
}  // namespace

double log_binomial_residual(const PsiInstance& inst, int t, std::int64_t n,
                             const Rational& a, const Rational& x, int terms) {
  // Expansion in powers of x (the series the |x| < a condition governs):
  // shift by x, evaluate at a.
  const LogElement lhs = generalized_shift(inst, t, n, x, terms);
  const bool log_free = (t == 0) || (t == 1 && n < 0);
  if (log_free) {
    Rational rhs(0);
    Rational xk(1);
    for (int k = 0; k <= terms; ++k) {
      rhs += roman_coefficient(inst, n, k) *
             harmonic_log_eval_exact(t, n - k, a) * xk;
      xk *= x;
    }
    const Rational diff = lhs.evaluate_exact(a) - rhs;
    return std::abs(to_double(diff));
  }
  const double lhs_value = lhs.evaluate(inst, to_double(a));
  const double rhs_value =
      log_binomial_rhs(inst, t, n, to_double(a), to_double(x), terms);
  return std::abs(lhs_value - rhs_value);
}

BinomialityResult binomiality_check(std::int64_t n) {
  if (n < 0) throw std::domain_error("binomiality check: need n >= 0");
  static const PsiInstance fib = PsiInstance::fibonacci();
  BinomialityResult result;
  result.ok = true;
  Rational brackets(1);
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational coeff = brackets / fib.factorial(k);
    result.row.push_back(coeff);
    if (coeff != Rational(fibonomial(n, k))) result.ok = false;
    brackets *= roman_bracket(fib, n - k);
  }
  return result;
}

}  // namespace fibcalc
