#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibcalc/rational.hpp"

namespace fibcalc {

// Leveled DAG with Fibonacci level sizes; every element of level s is
// covered by every element of level s + 1. Immutable once built.
class CobwebPoset {
 public:
  explicit CobwebPoset(int num_levels);

  int num_levels() const { return num_levels_; }
  const std::vector<BigInt>& level_sizes() const { return level_sizes_; }

 private:
  int num_levels_;
  std::vector<BigInt> level_sizes_;  // level_sizes_[s - 1] == F_s
};

// One saturated chain: (level, index-within-level) pairs over a contiguous
// level range, indices 0-based.
struct Chain {
  std::vector<std::pair<int, std::int64_t>> points;

  friend bool operator==(const Chain&, const Chain&) = default;
};

// Number of maximal chains from the root to any element of level n
// (product of level sizes 2..n).
BigInt count_chains_root_to_level(const CobwebPoset& poset, int n);

// Number of chains from one fixed level-k element to any element of level n
// (product of level sizes k+1..n), 1 <= k <= n.
BigInt count_chains_from_point(const CobwebPoset& poset, int k, int n);

// All chains from the first level-k element to any level-n element, in
// lexicographic order by index tuple. Refuses (naming the cap) when the
// count exceeds `cap`.
std::vector<Chain> enumerate_chains(const CobwebPoset& poset, int k, int n,
                                    std::int64_t cap = 1'000'000);

struct Observation3Result {
  bool ok = false;
  Rational lhs;  // falling factorial over m trailing levels / m_F!
  Rational rhs;  // fibonomial(n, m)
};

// Checks falling(n, m) / m_F! == fibonomial(n, m) exactly, 0 <= m <= n.
Observation3Result verify_observation3(std::int64_t n, std::int64_t m);

// DOT text with node ids "L<level>_<index>", cover edges, levels ranked.
// Guarded to num_levels <= 12 unless allow_large.
std::string export_dot(const CobwebPoset& poset, bool allow_large = false);

}  // namespace fibcalc
