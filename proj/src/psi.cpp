#include "fibcalc/psi.hpp"

#include <mutex>

namespace fibcalc {

namespace {
constexpr std::int64_t kMaxIndex = 1'000'000;

std::shared_mutex g_fib_mutex;
std::vector<BigInt> g_fib;  // g_fib[i] == F_{i+1}
}  // namespace

BigInt fibonacci(std::int64_t n) {
  if (n < 1) throw std::domain_error("fibonacci: index must be >= 1");
  if (n > kMaxIndex) throw std::domain_error("fibonacci: index too large");
  {
    std::shared_lock lock(g_fib_mutex);
    if (static_cast<std::size_t>(n) <= g_fib.size()) return g_fib[n - 1];
  }
  std::unique_lock lock(g_fib_mutex);
  if (g_fib.empty()) g_fib = {BigInt(1), BigInt(1)};
  while (static_cast<std::int64_t>(g_fib.size()) < n)
    g_fib.push_back(g_fib[g_fib.size() - 1] + g_fib[g_fib.size() - 2]);
  return g_fib[n - 1];
}

PsiInstance PsiInstance::fibonacci() {
  return PsiInstance(Kind::kFibonacci, "fibonacci", Rational(0));
}

PsiInstance PsiInstance::classic() {
  return PsiInstance(Kind::kClassic, "classic", Rational(0));
}

PsiInstance PsiInstance::q_gauss(const Rational& q) {
  // q in {0, 1} is excluded by definition; q == -1 would make bracket(2)
  // vanish, violating the nonzero-bracket invariant.
  if (q == 0 || q == 1 || q == -1)
    throw std::domain_error("q-gauss: q must not be 0, 1 or -1");
  return PsiInstance(Kind::kQGauss, "q-gauss(" + to_string(q) + ")", q);
}

PsiInstance::PsiInstance(Kind kind, std::string name, Rational q)
    : kind_(kind), name_(std::move(name)), q_(std::move(q)) {}

Rational PsiInstance::compute_bracket(std::int64_t n,
                                      const Rational& prev) const {
  switch (kind_) {
    case Kind::kFibonacci:
      return Rational(::fibcalc::fibonacci(n));
    case Kind::kClassic:
      return Rational(n);
    case Kind::kQGauss:
      // [n]_q = 1 + q * [n-1]_q
      return n == 1 ? Rational(1) : Rational(1) + q_ * prev;
  }
  throw std::logic_error("unreachable");
}

Rational PsiInstance::bracket(std::int64_t n) const {
  if (n < 1) throw std::domain_error("bracket: index must be >= 1");
  if (n > kMaxIndex) throw std::domain_error("bracket: index too large");
  {
    std::shared_lock lock(bracket_mutex_);
    if (static_cast<std::size_t>(n) <= brackets_.size())
      return brackets_[n - 1];
  }
  std::unique_lock lock(bracket_mutex_);
  while (static_cast<std::int64_t>(brackets_.size()) < n) {
    const std::int64_t i = static_cast<std::int64_t>(brackets_.size()) + 1;
    Rational value =
        compute_bracket(i, i > 1 ? brackets_[i - 2] : Rational(0));
    if (value == 0)
      throw std::logic_error("psi bracket vanished at index " +
                             std::to_string(i));
    brackets_.push_back(std::move(value));
  }
  return brackets_[n - 1];
}

Rational PsiInstance::factorial(std::int64_t n) const {
  if (n < 0) throw std::domain_error("psi factorial: index must be >= 0");
  if (n > kMaxIndex) throw std::domain_error("psi factorial: index too large");
  if (n > 0) bracket(n);  // warm the bracket cache outside our own lock
  {
    std::shared_lock lock(factorial_mutex_);
    if (static_cast<std::size_t>(n) < factorials_.size())
      return factorials_[n];
  }
  std::unique_lock lock(factorial_mutex_);
  if (factorials_.empty()) factorials_ = {Rational(1)};
  while (static_cast<std::int64_t>(factorials_.size()) <= n) {
    const std::int64_t i = static_cast<std::int64_t>(factorials_.size());
    factorials_.push_back(factorials_[i - 1] * bracket(i));
  }
  return factorials_[n];
}

Rational PsiInstance::harmonic(std::int64_t n) const {
  if (n < 0) throw std::domain_error("harmonic number: index must be >= 0");
  if (n > kMaxIndex) throw std::domain_error("harmonic number: index too large");
  if (n > 0) bracket(n);
  {
    std::shared_lock lock(harmonic_mutex_);
    if (static_cast<std::size_t>(n) < harmonics_.size()) return harmonics_[n];
  }
  std::unique_lock lock(harmonic_mutex_);
  if (harmonics_.empty()) harmonics_ = {Rational(0)};
  while (static_cast<std::int64_t>(harmonics_.size()) <= n) {
    const std::int64_t i = static_cast<std::int64_t>(harmonics_.size());
    harmonics_.push_back(harmonics_[i - 1] + Rational(1) / bracket(i));
  }
  return harmonics_[n];
}

}  // namespace fibcalc
