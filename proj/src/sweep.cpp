#include "fibcalc/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>

#include <json.hpp>

namespace fibcalc {

namespace {

// Violations for one value of n, in (k, j) order.
std::vector<SweepViolation> sweep_row(const PsiInstance& inst, std::int64_t n,
                                      std::int64_t lo, std::int64_t hi,
                                      Identity identity) {
  std::vector<SweepViolation> out;
  const auto record = [&](std::int64_t k, std::optional<std::int64_t> j,
                          Rational lhs, Rational rhs) {
    if (lhs != rhs)
      out.push_back({n, k, j, std::move(lhs), std::move(rhs)});
  };
  for (std::int64_t k = lo; k <= hi; ++k) {
    switch (identity) {
      case Identity::kSymmetry:
        record(k, std::nullopt, roman_coefficient(inst, n, k),
               roman_coefficient(inst, n, n - k));
        break;
      case Identity::kPascal:
        record(k, std::nullopt, roman_coefficient(inst, n, k),
               roman_coefficient(inst, n - 1, k - 1) +
                   roman_coefficient(inst, n - 1, k));
        break;
      case Identity::kProduct:
        for (std::int64_t j = lo; j <= hi; ++j)
          record(k, j,
                 roman_coefficient(inst, n, j) * roman_coefficient(inst, j, k),
                 roman_coefficient(inst, n, k) *
                     roman_coefficient(inst, n - j, j - k));
        break;
      case Identity::kCaseFormula:
        if (auto closed = case_formula(inst, n, k))
          record(k, std::nullopt, std::move(*closed),
                 roman_coefficient(inst, n, k));
        break;
    }
  }
  return out;
}

void warm_caches(const PsiInstance& inst, std::int64_t lo, std::int64_t hi) {
  const std::int64_t reach =
      std::max(std::abs(lo), std::abs(hi)) * 2 + 4;  // covers n-k and n-j
  inst.factorial(reach);
}

}  // namespace

Identity parse_identity(const std::string& name) {
  if (name == "symmetry") return Identity::kSymmetry;
  if (name == "pascal") return Identity::kPascal;
  if (name == "product") return Identity::kProduct;
  if (name == "case-formula") return Identity::kCaseFormula;
  throw std::invalid_argument("unknown identity: \"" + name + "\"");
}

std::string identity_name(Identity id) {
  switch (id) {
    case Identity::kSymmetry: return "symmetry";
    case Identity::kPascal: return "pascal";
    case Identity::kProduct: return "product";
    case Identity::kCaseFormula: return "case-formula";
  }
  throw std::logic_error("unreachable");
}

SweepReport run_sweep_serial(const PsiInstance& inst, std::int64_t lo,
                             std::int64_t hi, Identity identity) {
  if (lo > hi) throw std::domain_error("sweep: empty window");
  SweepReport report{identity_name(identity), lo, hi, {}};
  for (std::int64_t n = lo; n <= hi; ++n) {
    auto row = sweep_row(inst, n, lo, hi, identity);
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(row.begin()),
                             std::make_move_iterator(row.end()));
  }
  return report;
}

SweepReport run_sweep(const PsiInstance& inst, std::int64_t lo,
                      std::int64_t hi, Identity identity) {
  if (lo > hi) throw std::domain_error("sweep: empty window");
  warm_caches(inst, lo, hi);
  const std::int64_t count = hi - lo + 1;
  std::vector<std::vector<SweepViolation>> rows(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i)
    rows[i] = sweep_row(inst, lo + i, lo, hi, identity);
  SweepReport report{identity_name(identity), lo, hi, {}};
  for (auto& row : rows)
    report.violations.insert(report.violations.end(),
                             std::make_move_iterator(row.begin()),
                             std::make_move_iterator(row.end()));
  return report;
}

std::string to_json(const SweepReport& report) {
  nlohmann::json j;
  j["identity"] = report.identity;
  j["window"] = {report.lo, report.hi};
  j["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) {
    nlohmann::json e;
    e["n"] = v.n;
    e["k"] = v.k;
    if (v.j) e["j"] = *v.j;
    e["lhs"] = to_string(v.lhs);
    e["rhs"] = to_string(v.rhs);
    j["violations"].push_back(std::move(e));
  }
  return j.dump(2);
}

SweepReport sweep_report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SweepReport report;
  report.identity = j.at("identity").get<std::string>();
  report.lo = j.at("window").at(0).get<std::int64_t>();
  report.hi = j.at("window").at(1).get<std::int64_t>();
  for (const auto& e : j.at("violations")) {
    SweepViolation v;
    v.n = e.at("n").get<std::int64_t>();
    v.k = e.at("k").get<std::int64_t>();
    if (e.contains("j")) v.j = e.at("j").get<std::int64_t>();
    v.lhs = parse_rational(e.at("lhs").get<std::string>());
    v.rhs = parse_rational(e.at("rhs").get<std::string>());
    report.violations.push_back(std::move(v));
  }
  return report;
}

}  // namespace fibcalc
