#include "fibcalc/cobweb.hpp"

#include <sstream>

#include "fibcalc/psi.hpp"
#include "fibcalc/roman.hpp"

namespace fibcalc {

CobwebPoset::CobwebPoset(int num_levels) : num_levels_(num_levels) {
  if (num_levels < 1)
    throw std::domain_error("cobweb: need at least one level");
  level_sizes_.reserve(num_levels);
  for (int s = 1; s <= num_levels; ++s) level_sizes_.push_back(fibonacci(s));
}

namespace {
void check_level(const CobwebPoset& poset, int level, const char* what) {
  if (level < 1 || level > poset.num_levels())
    throw std::domain_error(std::string(what) + ": level out of range");
}
}  // namespace

BigInt count_chains_root_to_level(const CobwebPoset& poset, int n) {
  check_level(poset, n, "count chains");
  BigInt count(1);
  for (int s = 2; s <= n; ++s) count *= poset.level_sizes()[s - 1];
  return count;
}

BigInt count_chains_from_point(const CobwebPoset& poset, int k, int n) {
  check_level(poset, k, "count chains");
  check_level(poset, n, "count chains");
  if (k > n) throw std::domain_error("count chains: need k <= n");
  BigInt count(1);
  for (int s = k + 1; s <= n; ++s) count *= poset.level_sizes()[s - 1];
  return count;
}

std::vector<Chain> enumerate_chains(const CobwebPoset& poset, int k, int n,
                                    std::int64_t cap) {
  const BigInt total = count_chains_from_point(poset, k, n);
  if (total > cap)
    throw std::domain_error("enumerate chains: " + total.str() +
                            " chains exceed the enumeration cap of " +
                            std::to_string(cap));

  std::vector<std::int64_t> radix;  // level sizes k+1..n, all small under cap
  for (int s = k + 1; s <= n; ++s)
    radix.push_back(
        static_cast<std::int64_t>(poset.level_sizes()[s - 1]));

  std::vector<Chain> chains;
  chains.reserve(static_cast<std::size_t>(total));
  std::vector<std::int64_t> idx(radix.size(), 0);
  while (true) {
    Chain chain;
    chain.points.reserve(radix.size() + 1);
    chain.points.emplace_back(k, 0);
    for (std::size_t i = 0; i < radix.size(); ++i)
      chain.points.emplace_back(k + 1 + static_cast<int>(i), idx[i]);
    chains.push_back(std::move(chain));
    // odometer, least-significant digit last: lexicographic index order
    std::size_t pos = radix.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < radix[pos]) break;
      idx[pos] = 0;
      if (pos == 0) return chains;
    }
    if (radix.empty()) return chains;
  }
}

Observation3Result verify_observation3(std::int64_t n, std::int64_t m) {
  if (m < 0 || m > n)
    throw std::domain_error("observation check: need 0 <= m <= n");
  static const PsiInstance fib = PsiInstance::fibonacci();
  Observation3Result result;
  result.lhs = falling_factorial(fib, n, m) / fib.factorial(m);
  result.rhs = Rational(fibonomial(n, m));
  result.ok = result.lhs == result.rhs;
  return result;
}

std::string export_dot(const CobwebPoset& poset, bool allow_large) {
  if (poset.num_levels() > 12 && !allow_large)
    throw std::domain_error(
        "dot export: more than 12 levels; pass the override to force");
  std::ostringstream out;
  out << "digraph cobweb {\n  rankdir=BT;\n";
  for (int s = 1; s <= poset.num_levels(); ++s) {
    const auto size = static_cast<std::int64_t>(poset.level_sizes()[s - 1]);
    out << "  { rank=same;";
    for (std::int64_t i = 0; i < size; ++i) out << " L" << s << "_" << i << ";";
    out << " }\n";
  }
  for (int s = 1; s < poset.num_levels(); ++s) {
    const auto from = static_cast<std::int64_t>(poset.level_sizes()[s - 1]);
    const auto to = static_cast<std::int64_t>(poset.level_sizes()[s]);
    for (std::int64_t a = 0; a < from; ++a)
      for (std::int64_t b = 0; b < to; ++b)
        out << "  L" << s << "_" << a << " -> L" << s + 1 << "_" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fibcalc
