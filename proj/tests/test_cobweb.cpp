#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "fibcalc/cobweb.hpp"
#include "fibcalc/psi.hpp"
#include "fibcalc/roman.hpp"

using namespace fibcalc;

namespace {
int count_lines_containing(const std::string& text, const std::string& what) {
  int count = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.find(what) != std::string::npos) ++count;
  return count;
}

int count_declared_nodes(const std::string& text) {
  int count = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find("rank=same") == std::string::npos) continue;
    for (std::size_t pos = line.find(" L"); pos != std::string::npos;
         pos = line.find(" L", pos + 1))
      ++count;
  }
  return count;
}
}  // namespace

TEST_CASE("poset construction") {
  CHECK(CobwebPoset(1).level_sizes() == std::vector<BigInt>{1});
  CHECK(CobwebPoset(5).level_sizes() == std::vector<BigInt>{1, 1, 2, 3, 5});
  CHECK(CobwebPoset(8).level_sizes() ==
        std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13, 21});
  CHECK_THROWS_AS(CobwebPoset(0), std::domain_error);
}

TEST_CASE("chain counts from the root") {
  const CobwebPoset poset(12);
  CHECK(count_chains_root_to_level(poset, 1) == 1);
  CHECK(count_chains_root_to_level(poset, 4) == 6);
  CHECK(count_chains_root_to_level(poset, 5) == 30);
  CHECK_THROWS_AS(count_chains_root_to_level(poset, 13), std::domain_error);
  CHECK_THROWS_AS(count_chains_root_to_level(poset, 0), std::domain_error);

  const auto fib = PsiInstance::fibonacci();
  for (int n = 1; n <= 12; ++n)
    CHECK(Rational(count_chains_root_to_level(poset, n)) ==
          psi_factorial(fib, n));
}

TEST_CASE("chain counts from a fixed point") {
  const CobwebPoset poset(12);
  CHECK(count_chains_from_point(poset, 4, 4) == 1);
  CHECK(count_chains_from_point(poset, 3, 6) == 120);
  CHECK(count_chains_from_point(poset, 1, 4) ==
        count_chains_root_to_level(poset, 4));
  CHECK_THROWS_AS(count_chains_from_point(poset, 5, 3), std::domain_error);

  const auto fib = PsiInstance::fibonacci();
  for (int k = 1; k <= 12; ++k)
    for (int n = k; n <= 12; ++n)
      CHECK(Rational(count_chains_from_point(poset, k, n)) ==
            falling_factorial(fib, n, n - k));
}

TEST_CASE("chain enumeration") {
  const CobwebPoset poset(7);
  CHECK(enumerate_chains(poset, 1, 3).size() == 2);
  CHECK(enumerate_chains(poset, 2, 2).size() == 1);
  CHECK(enumerate_chains(poset, 1, 5).size() == 30);

  for (int k = 1; k <= 7; ++k)
    for (int n = k; n <= 7; ++n) {
      const auto chains = enumerate_chains(poset, k, n);
      CHECK(BigInt(chains.size()) == count_chains_from_point(poset, k, n));

      std::set<std::vector<std::pair<int, std::int64_t>>> distinct;
      const Chain* previous = nullptr;
      for (const auto& chain : chains) {
        REQUIRE(chain.points.size() == static_cast<std::size_t>(n - k + 1));
        for (int i = 0; i < n - k + 1; ++i) {
          const auto [level, index] = chain.points[i];
          CHECK(level == k + i);  // strictly increasing, contiguous levels
          CHECK(index >= 0);
          CHECK(BigInt(index) < poset.level_sizes()[level - 1]);
        }
        CHECK(chain.points.front().second == 0);  // fixed start element
        if (previous != nullptr)
          CHECK(previous->points < chain.points);  // lexicographic order
        previous = &chain;
        distinct.insert(chain.points);
      }
      CHECK(distinct.size() == chains.size());
    }
}

TEST_CASE("enumeration cap refusal names the cap") {
  const CobwebPoset poset(12);
  try {
    enumerate_chains(poset, 1, 12, 1000);
    FAIL("expected a refusal");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }
}

TEST_CASE("subposet count identity") {
  const auto r63 = verify_observation3(6, 3);
  CHECK(r63.ok);
  CHECK(r63.lhs == 60);
  CHECK(r63.rhs == 60);
  CHECK(verify_observation3(9, 0).lhs == 1);
  const auto r52 = verify_observation3(5, 2);
  CHECK(r52.ok);
  CHECK(r52.lhs == 15);

  for (std::int64_t n = 0; n <= 16; ++n)
    for (std::int64_t m = 0; m <= n; ++m) CHECK(verify_observation3(n, m).ok);
  CHECK_THROWS_AS(verify_observation3(3, 4), std::domain_error);
}

TEST_CASE("dot export") {
  const auto two = export_dot(CobwebPoset(2));
  CHECK(count_lines_containing(two, "->") == 1);
  CHECK(count_declared_nodes(two) == 2);

  const auto four = export_dot(CobwebPoset(4));
  CHECK(count_lines_containing(four, "->") == 9);
  CHECK(count_declared_nodes(four) == 7);
  CHECK(four.find("L1_0") != std::string::npos);
  CHECK(four.find("L4_2") != std::string::npos);
  CHECK(four.find("digraph") != std::string::npos);

  const auto five = export_dot(CobwebPoset(5));
  CHECK(count_lines_containing(five, "->") == 24);
  CHECK(count_declared_nodes(five) == 12);
  CHECK(count_lines_containing(five, "rank=same") == 5);

  CHECK_THROWS_AS(export_dot(CobwebPoset(13)), std::domain_error);
  CHECK_NOTHROW(export_dot(CobwebPoset(13), /*allow_large=*/true));
}
