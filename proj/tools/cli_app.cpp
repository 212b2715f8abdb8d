#include "cli_app.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibcalc/cobweb.hpp"
#include "fibcalc/harmonic.hpp"
#include "fibcalc/jackson.hpp"
#include "fibcalc/roman.hpp"
#include "fibcalc/series.hpp"
#include "fibcalc/sweep.hpp"

namespace fibcalc::cli {

namespace {

const std::vector<std::string> kInstances = {"fibonacci", "classic",
                                             "q-gauss"};

std::string check_rational(const std::string& text) {
  try {
    parse_rational(text);
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

std::string check_window(const std::string& text) {
  const auto colon = text.find(':', 1);  // skip a possible leading minus
  if (colon == std::string::npos) return "window must look like LO:HI";
  try {
    std::stoll(text.substr(0, colon));
    std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    return "window must look like LO:HI";
  }
  return {};
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  const auto colon = text.find(':', 1);
  return {std::stoll(text.substr(0, colon)),
          std::stoll(text.substr(colon + 1))};
}

PsiInstance make_instance(const std::string& name, const std::string& q_text) {
  if (name == "fibonacci") return PsiInstance::fibonacci();
  if (name == "classic") return PsiInstance::classic();
  if (q_text.empty())
    throw std::invalid_argument("the q-gauss instance requires --q");
  return PsiInstance::q_gauss(parse_rational(q_text));
}

// Accepts either the full series object or a bare {"degree": "p/q"} map
// (paired with --order).
FormalSeries parse_series(const std::string& text, int order) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad series JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("series must be a JSON map");
  if (j.contains("coefficients")) return FormalSeries::from_json(text);
  FormalSeries s(order);
  for (const auto& [key, value] : j.items())
    s.set_coefficient(std::stoi(key), parse_rational(value.get<std::string>()));
  return s;
}

void print_series(const FormalSeries& s, const std::string& format,
                  std::ostream& out) {
  if (format == "json")
    out << s.to_json() << "\n";
  else
    out << s.to_string() << "\n";
}

void print_sweep(const SweepReport& report, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << to_json(report) << "\n";
    return;
  }
  if (format == "csv") {
    out << "n,k,j,lhs,rhs\n";
    for (const auto& v : report.violations) {
      out << v.n << "," << v.k << ",";
      if (v.j) out << *v.j;
      out << "," << to_string(v.lhs) << "," << to_string(v.rhs) << "\n";
    }
    return;
  }
  out << "identity: " << report.identity << "\n";
  out << "window: [" << report.lo << ", " << report.hi << "]\n";
  out << "violations: " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    out << "n=" << v.n << " k=" << v.k;
    if (v.j) out << " j=" << *v.j;
    out << " lhs=" << to_string(v.lhs) << " rhs=" << to_string(v.rhs) << "\n";
  }
}

struct Options {
  std::string instance = "fibonacci";
  std::string q;
  std::string format = "text";
  bool approx = false;
};

void add_instance_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--instance", opt.instance, "bracket sequence to use")
      ->check(CLI::IsMember(kInstances));
  cmd->add_option("--q", opt.q, "q parameter for the q-gauss instance")
      ->check(check_rational);
}

void add_format_flag(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_format_flag_with_csv(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string node_id(int level, std::int64_t index) {
  return "L" + std::to_string(level) + "_" + std::to_string(index);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact calculus of fibonomial and Roman coefficients"};
  app.name("fibcalc");
  app.require_subcommand(1);

  auto opt = std::make_shared<Options>();

  // fib
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number");
  std::int64_t fib_n = 1;
  fib_cmd->add_option("--n", fib_n, "index, n >= 1")->required();
  fib_cmd->callback([&] { out << fibonacci(fib_n).str() << "\n"; });

  // fibonomial
  auto* fibo_cmd = app.add_subcommand("fibonomial", "fibonomial coefficient");
  std::int64_t fibo_n = 0, fibo_k = 0;
  fibo_cmd->add_option("--n", fibo_n)->required();
  fibo_cmd->add_option("--k", fibo_k)->required();
  fibo_cmd->callback([&] { out << fibonomial(fibo_n, fibo_k).str() << "\n"; });

  // roman
  auto* roman_cmd =
      app.add_subcommand("roman", "Roman coefficient over all integers");
  std::int64_t roman_n = 0, roman_k = 0;
  add_instance_flags(roman_cmd, *opt);
  roman_cmd->add_option("--n", roman_n)->required();
  roman_cmd->add_option("--k", roman_k)->required();
  roman_cmd->add_flag("--approx", opt->approx, "print as floating point");
  roman_cmd->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    const Rational value = roman_coefficient(inst, roman_n, roman_k);
    if (opt->approx)
      out << std::setprecision(17) << to_double(value) << "\n";
    else
      out << to_string(value) << "\n";
  });

  // table
  auto* table_cmd =
      app.add_subcommand("table", "triangle of coefficients, rows 0..R-1");
  int table_rows = 9;
  add_instance_flags(table_cmd, *opt);
  add_format_flag_with_csv(table_cmd, *opt);
  table_cmd->add_option("--rows", table_rows, "number of rows")->required();
  table_cmd->callback([&] {
    if (table_rows < 1) throw std::domain_error("table: need at least one row");
    const auto inst = make_instance(opt->instance, opt->q);
    const std::string sep = opt->format == "csv" ? "," : " ";
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n < table_rows; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k <= n; ++k) {
        const auto value = to_string(roman_coefficient(inst, n, k));
        if (opt->format == "json") {
          row.push_back(value);
        } else {
          out << value << (k == n ? "" : sep);
        }
      }
      if (opt->format == "json")
        rows.push_back(std::move(row));
      else
        out << "\n";
    }
    if (opt->format == "json") {
      nlohmann::json j;
      j["instance"] = inst.name();
      j["rows"] = std::move(rows);
      out << j.dump() << "\n";
    }
  });

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "exhaustive identity check over a window");
  std::string sweep_window, sweep_identity;
  bool sweep_serial = false;
  add_instance_flags(sweep_cmd, *opt);
  add_format_flag_with_csv(sweep_cmd, *opt);
  sweep_cmd->add_option("--window", sweep_window, "inclusive window LO:HI")
      ->required()
      ->check(check_window);
  sweep_cmd
      ->add_option("--identity", sweep_identity,
                   "symmetry | pascal | product | case-formula")
      ->required()
      ->check(CLI::IsMember({"symmetry", "pascal", "product", "case-formula"}));
  sweep_cmd->add_flag("--serial", sweep_serial,
                      "use the serial reference implementation");
  sweep_cmd->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    const auto [lo, hi] = parse_window(sweep_window);
    const auto identity = parse_identity(sweep_identity);
    const auto report = sweep_serial ? run_sweep_serial(inst, lo, hi, identity)
                                     : run_sweep(inst, lo, hi, identity);
    print_sweep(report, opt->format, out);
  });

  // cobweb
  auto* cobweb_cmd = app.add_subcommand("cobweb", "leveled poset operations");
  cobweb_cmd->require_subcommand(1);
  int cw_levels = 1, cw_from = 0, cw_to = 0;
  std::int64_t cw_cap = 1'000'000;
  bool cw_force = false;

  auto* cw_count = cobweb_cmd->add_subcommand("count", "chain counts");
  cw_count->add_option("--levels", cw_levels)->required();
  auto* cw_from_opt = cw_count->add_option("--from", cw_from, "start level");
  auto* cw_to_opt = cw_count->add_option("--to", cw_to, "end level");
  cw_from_opt->needs(cw_to_opt);
  cw_to_opt->needs(cw_from_opt);
  add_format_flag(cw_count, *opt);
  cw_count->callback([&] {
    const CobwebPoset poset(cw_levels);
    const bool pointwise = cw_from_opt->count() > 0;
    const BigInt count =
        pointwise ? count_chains_from_point(poset, cw_from, cw_to)
                  : count_chains_root_to_level(poset, cw_levels);
    if (opt->format == "json") {
      nlohmann::json j;
      j["levels"] = cw_levels;
      j["from"] = pointwise ? cw_from : 1;
      j["to"] = pointwise ? cw_to : cw_levels;
      j["count"] = count.str();
      out << j.dump() << "\n";
    } else {
      out << count.str() << "\n";
    }
  });

  auto* cw_enum =
      cobweb_cmd->add_subcommand("enumerate", "explicit chain listing");
  cw_enum->add_option("--levels", cw_levels)->required();
  cw_enum->add_option("--from", cw_from)->required();
  cw_enum->add_option("--to", cw_to)->required();
  cw_enum->add_option("--cap", cw_cap, "enumeration cap");
  add_format_flag(cw_enum, *opt);
  cw_enum->callback([&] {
    const CobwebPoset poset(cw_levels);
    const auto chains = enumerate_chains(poset, cw_from, cw_to, cw_cap);
    if (opt->format == "json") {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& chain : chains) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& [level, index] : chain.points)
          c.push_back(node_id(level, index));
        j.push_back(std::move(c));
      }
      out << j.dump() << "\n";
    } else {
      for (const auto& chain : chains) {
        for (std::size_t i = 0; i < chain.points.size(); ++i)
          out << (i ? " " : "")
              << node_id(chain.points[i].first, chain.points[i].second);
        out << "\n";
      }
    }
  });

  auto* cw_dot = cobweb_cmd->add_subcommand("dot", "DOT graph text");
  cw_dot->add_option("--levels", cw_levels)->required();
  cw_dot->add_flag("--force", cw_force, "allow more than 12 levels");
  cw_dot->callback(
      [&] { out << export_dot(CobwebPoset(cw_levels), cw_force); });

  // series
  auto* series_cmd =
      app.add_subcommand("series", "formal power series operators");
  series_cmd->require_subcommand(1);
  std::string series_text, series_lhs, series_rhs, series_alpha = "1";
  int series_order = 16;

  const auto add_series_common = [&](CLI::App* cmd, bool needs_series) {
    add_instance_flags(cmd, *opt);
    add_format_flag(cmd, *opt);
    cmd->add_option("--order", series_order, "truncation order");
    if (needs_series)
      cmd->add_option("--series", series_text,
                      "series as a JSON map {\"degree\": \"p/q\"}")
          ->required();
  };

  auto* sd = series_cmd->add_subcommand("d", "psi-derivative");
  add_series_common(sd, true);
  sd->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    print_series(psi_derivative(inst, parse_series(series_text, series_order)),
                 opt->format, out);
  });

  auto* si = series_cmd->add_subcommand("int", "psi-antiderivative");
  add_series_common(si, true);
  si->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    print_series(psi_integral(inst, parse_series(series_text, series_order)),
                 opt->format, out);
  });

  auto* sdelta = series_cmd->add_subcommand("delta", "difference operator");
  add_series_common(sdelta, true);
  sdelta->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    print_series(delta_psi(inst, parse_series(series_text, series_order)),
                 opt->format, out);
  });

  auto* sstar = series_cmd->add_subcommand("star", "noncommutative product");
  add_instance_flags(sstar, *opt);
  add_format_flag(sstar, *opt);
  sstar->add_option("--order", series_order, "truncation order");
  sstar->add_option("--lhs", series_lhs, "left factor (JSON map)")->required();
  sstar->add_option("--rhs", series_rhs, "right factor (JSON map)")->required();
  sstar->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    print_series(star(inst, parse_series(series_lhs, series_order),
                      parse_series(series_rhs, series_order)),
                 opt->format, out);
  });

  auto* sexp = series_cmd->add_subcommand("exp", "psi-exponential");
  add_series_common(sexp, false);
  sexp->add_option("--alpha", series_alpha, "scale factor, rational")
      ->check(check_rational);
  sexp->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    print_series(exp_psi(inst, parse_rational(series_alpha), series_order),
                 opt->format, out);
  });

  // qcalc
  auto* qcalc_cmd = app.add_subcommand("qcalc", "Jackson q-calculus");
  qcalc_cmd->require_subcommand(1);
  std::string q_text, q_z = "1";
  int q_terms = 200, q_degree = 32;

  const auto add_q_flag = [&](CLI::App* cmd) {
    cmd->add_option("--q", opt->q, "deformation parameter, rational")
        ->required()
        ->check(check_rational);
  };

  auto* qd = qcalc_cmd->add_subcommand("d", "q-derivative");
  add_q_flag(qd);
  add_format_flag(qd, *opt);
  qd->add_option("--order", series_order, "truncation order");
  qd->add_option("--series", q_text, "series as a JSON map")->required();
  qd->callback([&] {
    const QParam qp(parse_rational(opt->q));
    print_series(q_derivative(qp, parse_series(q_text, series_order)),
                 opt->format, out);
  });

  auto* qi = qcalc_cmd->add_subcommand("int", "q-antiderivative");
  add_q_flag(qi);
  add_format_flag(qi, *opt);
  qi->add_option("--order", series_order, "truncation order");
  qi->add_option("--series", q_text, "series as a JSON map")->required();
  qi->callback([&] {
    const QParam qp(parse_rational(opt->q));
    print_series(q_integral(qp, parse_series(q_text, series_order)),
                 opt->format, out);
  });

  auto* qs = qcalc_cmd->add_subcommand(
      "sum", "partial sum of the lattice representation");
  add_q_flag(qs);
  qs->add_option("--order", series_order, "truncation order");
  qs->add_option("--series", q_text, "polynomial as a JSON map")->required();
  qs->add_option("--z", q_z, "upper endpoint, rational")->check(check_rational);
  qs->add_option("--terms", q_terms, "number of lattice terms");
  qs->callback([&] {
    const QParam qp(parse_rational(opt->q));
    out << to_string(q_integral_sum(qp, parse_series(q_text, series_order),
                                    parse_rational(q_z), q_terms))
        << "\n";
  });

  auto* qv = qcalc_cmd->add_subcommand(
      "verify", "check the right-inverse identity up to a degree");
  add_q_flag(qv);
  qv->add_option("--degree", q_degree, "largest degree checked");
  qv->callback([&] {
    const QParam qp(parse_rational(opt->q));
    out << (q_right_inverse_holds(qp, q_degree) ? "true" : "false") << "\n";
  });

  // logbinomial
  auto* lb_cmd = app.add_subcommand(
      "logbinomial", "binomial-style expansion over harmonic logarithms");
  int lb_t = 0;
  std::int64_t lb_n = 0;
  std::string lb_a = "4", lb_x = "1/4";
  int lb_terms = 40;
  bool lb_study = false;
  add_instance_flags(lb_cmd, *opt);
  lb_cmd->add_option("--t", lb_t, "level, 0 or 1")
      ->required()
      ->check(CLI::Range(0, 1));
  lb_cmd->add_option("--n", lb_n, "basis index")->required();
  lb_cmd->add_option("--a", lb_a, "base point, rational")->check(check_rational);
  lb_cmd->add_option("--x", lb_x, "expansion point, rational")
      ->check(check_rational);
  lb_cmd->add_option("--K", lb_terms, "truncation");
  lb_cmd->add_flag("--study", lb_study, "CSV of residuals for K = 0..K");
  lb_cmd->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    const Rational a = parse_rational(lb_a);
    const Rational x = parse_rational(lb_x);
    out << std::setprecision(17);
    if (lb_study) {
      out << "K,residual\n";
      for (int k = 0; k <= lb_terms; ++k)
        out << k << "," << log_binomial_residual(inst, lb_t, lb_n, a, x, k)
            << "\n";
    } else {
      out << log_binomial_residual(inst, lb_t, lb_n, a, x, lb_terms) << "\n";
    }
  });

  // harmonicnum
  auto* hn_cmd = app.add_subcommand("harmonicnum", "harmonic number");
  std::int64_t hn_n = 0;
  add_instance_flags(hn_cmd, *opt);
  hn_cmd->add_option("--n", hn_n, "index, n >= 0")->required();
  hn_cmd->callback([&] {
    const auto inst = make_instance(opt->instance, opt->q);
    out << to_string(harmonic_number(inst, hn_n)) << "\n";
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace fibcalc::cli
