// Copyright 2026 The hbound Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. CSV rows go to stdout, human-readable reports and
// timings to stderr, so stdout is byte-identical across runs and worker
// counts.
//
// Exit codes: 0 success, 2 configuration or input error, 3 budget or
// conditioning error.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hbound/hbound.hpp"
#include "hbound/reference_tables.hpp"

namespace {

using namespace hbound;

struct RunConfig {
  std::string builtin;
  int n = 2;
  std::string poly_file;
  std::string k_spec = "1";
  int r = 1;
  std::uint64_t seed = 1;
  std::uint64_t sample_size = 1000;
  std::string format = "csv";
  bool exact = false;
  int workers = 1;
};

int default_workers() {
  if (const char* e = std::getenv("HBOUND_WORKERS")) {
    const int w = std::atoi(e);
    if (w >= 1) return w;
  }
  return 1;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    if constexpr (std::is_floating_point_v<T>)
      s += num(v[i]);
    else
      s += std::to_string(v[i]);
  }
  return s;
}

// "5", "1..50" or "2,4,8".
std::vector<int> parse_k_list(const std::string& spec, int min_k) {
  std::vector<int> ks;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw InvalidArgument("bad k value '" + s + "'");
    if (v < min_k)
      throw InvalidArgument("k must be >= " + std::to_string(min_k));
    return v;
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const int a = to_int(spec.substr(0, dots)), b = to_int(spec.substr(dots + 2));
    if (b < a) throw InvalidArgument("empty k range '" + spec + "'");
    for (int k = a; k <= b; ++k) ks.push_back(k);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) ks.push_back(to_int(item));
  }
  if (ks.empty()) throw InvalidArgument("no k values given");
  return ks;
}

class Output {
 public:
  explicit Output(const std::string& format) : sep_(format == "tsv" ? '\t' : ',') {
    if (format != "csv" && format != "tsv")
      throw InvalidArgument("unknown format '" + format + "'");
  }
  void row(const std::vector<std::string>& cells) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) std::cout << sep_;
      std::cout << cells[i];
    }
    std::cout << '\n';
  }

 private:
  char sep_;
};

struct Problem {
  Polynomial poly;
  std::optional<TestFunction> tf;

  std::string gap(double v) const {
    return tf ? num(relative_gap(v, *tf)) : "";
  }
};

Problem load(const RunConfig& c) {
  if (c.builtin.empty() == c.poly_file.empty())
    throw InvalidArgument("give exactly one of --builtin and --poly");
  Problem p;
  if (!c.builtin.empty()) {
    p.tf = builtin(c.builtin, c.n);
    p.poly = p.tf->poly;
  } else {
    std::ifstream in(c.poly_file);
    if (!in) throw InvalidArgument("cannot read '" + c.poly_file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    p.poly = parse_polynomial(ss.str());
  }
  if (c.r < 1) throw InvalidArgument("--r must be >= 1");
  return p;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// E f(X) at p, in exact rational arithmetic on the binary coefficients.
Rational exact_candidate_value(const Polynomial& f, const ExponentPair& p, int r) {
  Rational s = 0;
  for (const auto& t : f.terms()) {
    Rational m(t.coef);
    for (int i = 0; i < f.n_vars(); ++i) {
      const long e = static_cast<long>(r) * p.eta[i];
      const long b = static_cast<long>(r) * p.beta[i];
      for (int a = 1; a <= t.alpha[i]; ++a) m *= Rational(e + a, e + b + 1 + a);
    }
    s += m;
  }
  return s;
}

int cmd_bound(const RunConfig& c) {
  const Problem pr = load(c);
  const Output out(c.format);
  std::vector<std::string> head = {"k", "r", "value", "relative_gap", "eta",
                                   "beta", "candidates"};
  if (c.exact) head.push_back("exact_value");
  out.row(head);
  for (int k : parse_k_list(c.k_spec, 0)) {
    Stopwatch sw;
    const auto b = f_handelman_powered(pr.poly, k, c.r, {c.workers});
    std::vector<std::string> row = {std::to_string(k), std::to_string(c.r),
                                    num(b.value), pr.gap(b.value),
                                    join(b.argmin.eta), join(b.argmin.beta),
                                    std::to_string(b.candidates_evaluated)};
    if (c.exact) {
      const double ex =
          static_cast<double>(exact_candidate_value(pr.poly, b.argmin, c.r));
      row.push_back(num(ex));
      std::cerr << "k=" << k << ": |float - exact| = " << std::abs(ex - b.value)
                << "\n";
    }
    out.row(row);
    std::cerr << "k=" << k << " r=" << c.r << " value=" << num(b.value) << " "
              << to_string(b.argmin) << " " << b.candidates_evaluated
              << " candidates in " << sw.seconds() << " s\n";
  }
  return 0;
}

int cmd_sos(const RunConfig& c, const std::string& basis_s,
            const std::string& eigen_s) {
  const Problem pr = load(c);
  const Output out(c.format);
  Basis basis;
  if (basis_s == "orthonormal")
    basis = Basis::kOrthonormal;
  else if (basis_s == "monomial")
    basis = Basis::kMonomial;
  else
    throw InvalidArgument("unknown basis '" + basis_s + "'");
  EigenMethod method;
  if (eigen_s == "auto")
    method = EigenMethod::kAuto;
  else if (eigen_s == "jacobi")
    method = EigenMethod::kJacobi;
  else if (eigen_s == "tridiagonal")
    method = EigenMethod::kTridiagonal;
  else
    throw InvalidArgument("unknown eigen method '" + eigen_s + "'");
  out.row({"k", "value", "relative_gap", "basis_size"});
  for (int k : parse_k_list(c.k_spec, 0)) {
    Stopwatch sw;
    const double v = f_sos(pr.poly, k, basis, method);
    const auto size = binomial(pr.poly.n_vars() + k, k);
    out.row({std::to_string(k), num(v), pr.gap(v), std::to_string(size)});
    std::cerr << "sos k=" << k << " (density degree " << 2 * k
              << ") value=" << num(v) << " in " << sw.seconds() << " s\n";
  }
  return 0;
}

int cmd_grid(const RunConfig& c, std::uint64_t budget) {
  const Problem pr = load(c);
  const Output out(c.format);
  out.row({"k", "value", "relative_gap", "argmin", "points", "gap_bound"});
  for (int k : parse_k_list(c.k_spec, 1)) {
    Stopwatch sw;
    const auto g = grid_min(pr.poly, k, {budget, c.workers});
    out.row({std::to_string(k), num(g.value), pr.gap(g.value), join(g.argmin),
             std::to_string(g.points_evaluated),
             num(grid_gap_bound(pr.poly, k))});
    std::cerr << "grid k=" << k << " value=" << num(g.value) << " in "
              << sw.seconds() << " s\n";
  }
  return 0;
}

int cmd_feasible(const RunConfig& c, const std::string& strategy) {
  const Problem pr = load(c);
  const Output out(c.format);
  if (strategy != "mode" && strategy != "jensen" && strategy != "refine")
    throw InvalidArgument("unknown strategy '" + strategy + "'");
  const bool convex = pr.tf && pr.tf->convex;
  out.row({"k", "strategy", "bound", "value", "point", "jensen_case"});
  for (int k : parse_k_list(c.k_spec, 0)) {
    const auto b = f_handelman_powered(pr.poly, k, c.r, {c.workers});
    std::string value, point, jcase;
    if (strategy == "mode") {
      if (auto m = density_mode(b.argmin, c.r)) {
        value = num(evaluate(pr.poly, *m));
        point = join(*m);
      } else {
        std::cerr << "k=" << k << ": mode not unique for " << to_string(b.argmin)
                  << "\n";
      }
    } else if (strategy == "jensen") {
      const Point x = expectation_point(b.argmin, c.r);
      value = num(evaluate(pr.poly, x));
      point = join(x);
      jcase = to_string(jensen_classify(pr.poly, convex));
    } else {
      if (c.r != 1) throw InvalidArgument("--strategy refine needs r = 1");
      const auto ref = f_beta_refine(pr.poly, k, b.argmin);
      Point x(ref.eta.size());
      for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = (ref.eta[i] + 1) / (ref.eta[i] + ref.beta[i] + 2);
      value = num(ref.value);
      point = join(x);
      std::cerr << "k=" << k << ": refined shapes eta=(" << join(ref.eta)
                << ") beta=(" << join(ref.beta) << ") after " << ref.iterations
                << " sweeps\n";
    }
    out.row({std::to_string(k), strategy, num(b.value), value, point, jcase});
  }
  if (strategy == "jensen" && !convex) {
    const auto rep = convexity_diagnostic(pr.poly);
    if (rep.negative_curvature)
      std::cerr << "note: negative curvature found (min Hessian eigenvalue "
                << rep.min_eigenvalue << " at " << join(rep.worst_point)
                << ")\n";
  }
  return 0;
}

int cmd_sample(const RunConfig& c) {
  const Problem pr = load(c);
  const Output out(c.format);
  out.row({"k", "r", "bound", "mean", "variance", "minimum", "minimizer", "N",
           "seed", "generator"});
  for (int k : parse_k_list(c.k_spec, 0)) {
    const auto b = f_handelman_powered(pr.poly, k, c.r, {c.workers});
    const auto s = sample_statistics(pr.poly, b.argmin, c.r, c.sample_size,
                                     c.seed, c.workers);
    out.row({std::to_string(k), std::to_string(c.r), num(b.value), num(s.mean),
             num(s.variance), num(s.minimum), join(s.minimizer),
             std::to_string(s.sample_size), std::to_string(s.seed), s.generator});
  }
  return 0;
}

// "0.3,11/20" -> point plus exact coordinates for the p/q entries.
void parse_x_star(const std::string& spec, Point& x,
                  std::vector<std::optional<ExactCoordinate>>& exact) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      if (const auto slash = item.find('/'); slash != std::string::npos) {
        const long p = std::stol(item.substr(0, slash));
        const long q = std::stol(item.substr(slash + 1));
        if (q < 1) throw InvalidArgument("bad fraction '" + item + "'");
        x.push_back(static_cast<double>(p) / q);
        exact.push_back(ExactCoordinate{p, q});
      } else {
        x.push_back(std::stod(item));
        exact.push_back(std::nullopt);
      }
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad --x-star entry '" + item + "'");
    }
  }
}

int cmd_rates(const RunConfig& c, const std::string& r_spec,
              const std::string& x_spec, bool with_bound) {
  const Problem pr = load(c);
  const Output out(c.format);
  Point x;
  std::vector<std::optional<ExactCoordinate>> exact;
  if (!x_spec.empty()) {
    parse_x_star(x_spec, x, exact);
  } else if (pr.tf) {
    x = pr.tf->minimizers.front();
    exact = pr.tf->exact_minimizer;
  } else {
    throw InvalidArgument("--x-star is required with --poly");
  }
  if (static_cast<int>(x.size()) != pr.poly.n_vars())
    throw InvalidArgument("--x-star has the wrong dimension");
  const double fx = evaluate(pr.poly, x);
  std::vector<std::string> head = {"r",     "k_r",   "eta_star",
                                   "beta_star", "cases", "expected_value",
                                   "gap"};
  if (with_bound) {
    head.push_back("bound");
    head.push_back("bound_gap");
  }
  out.row(head);
  std::vector<double> rs, gaps, ks, bgaps;
  for (int r : parse_k_list(r_spec, 1)) {
    const auto s = shape_parameters(x, r, exact);
    const double e = expected_value_at_shapes(pr.poly, s);
    std::string cases;
    for (std::size_t i = 0; i < s.cases.size(); ++i)
      cases += (i ? ";" : "") + std::string(to_string(s.cases[i]));
    std::vector<std::string> row = {std::to_string(r), std::to_string(s.k_r),
                                    join(s.eta_star), join(s.beta_star), cases,
                                    num(e), num(e - fx)};
    if (e - fx > 0) {
      rs.push_back(r);
      gaps.push_back(e - fx);
    }
    if (with_bound) {
      const auto b = f_handelman(pr.poly, static_cast<int>(s.k_r), {c.workers});
      row.push_back(num(b.value));
      row.push_back(num(b.value - fx));
      if (b.value - fx > 0) {
        ks.push_back(static_cast<double>(s.k_r));
        bgaps.push_back(b.value - fx);
      }
    }
    out.row(row);
  }
  std::cerr << "f(x*) = " << num(fx) << "\n";
  if (rs.size() >= 3 && rs.front() != rs.back())
    std::cerr << "slope of log(E f(X) - f(x*)) vs log r: "
              << num(empirical_rate(rs, gaps)) << "\n";
  if (ks.size() >= 3 && ks.front() != ks.back())
    std::cerr << "slope of log(f_k^H - f(x*)) vs log k_r: "
              << num(empirical_rate(ks, bgaps)) << "\n";
  return 0;
}

int cmd_table(const RunConfig& c, int id) {
  const auto text = reference::table_csv(id);
  if (text.empty())
    throw InvalidArgument("no embedded table " + std::to_string(id) +
                          " (available: 2 3 4 5 6 9 10 11)");
  const Output out(c.format);
  Stopwatch sw;
  const auto cells = reproduce_table(id, parse_table_csv(text), {c.workers});
  out.row({"k", "column", "reference", "computed", "abs_diff", "tolerance", "ok"});
  int bad = 0;
  for (const auto& cell : cells) {
    out.row({std::to_string(cell.k), cell.column,
             cell.reference ? num(*cell.reference) : "",
             cell.computed ? num(*cell.computed) : "", num(cell.abs_diff()),
             num(cell.tolerance), cell.ok ? "1" : "0"});
    if (!cell.ok) {
      ++bad;
      std::cerr << "table " << id << " k=" << cell.k << " " << cell.column
                << ": reference "
                << (cell.reference ? num(*cell.reference) : std::string("-"))
                << " computed "
                << (cell.computed ? num(*cell.computed) : std::string("-"))
                << "\n";
    }
  }
  std::cerr << "table " << id << ": " << cells.size() - bad << "/"
            << cells.size() << " cells within tolerance (" << sw.seconds()
            << " s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds for polynomial minimization over the unit box"};
  app.require_subcommand(1);
  RunConfig c;
  c.workers = default_workers();

  auto add_common = [&](CLI::App* s, bool need_k) {
    auto* b = s->add_option("--builtin", c.builtin, "built-in test function");
    auto* p = s->add_option("--poly", c.poly_file, "sparse-monomial file")
                  ->check(CLI::ExistingFile);
    b->excludes(p);
    s->add_option("--n", c.n, "dimension of scalable built-ins");
    if (need_k) s->add_option("--k", c.k_spec, "k, a..b or comma list");
    s->add_option("--format", c.format, "csv or tsv");
    s->add_option("--workers", c.workers,
                  "worker threads (default: $HBOUND_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
  };

  auto* bound = app.add_subcommand("bound", "Handelman-type bound f_{r,k}^H");
  add_common(bound, true);
  bound->add_option("--r", c.r, "power of the density");
  bound->add_flag("--exact", c.exact, "re-evaluate the minimizer exactly");

  std::string basis = "orthonormal", eigen = "auto";
  auto* sos = app.add_subcommand("sos", "SOS-density bound of order k");
  add_common(sos, true);
  sos->add_option("--basis", basis, "orthonormal or monomial");
  sos->add_option("--eigen", eigen, "auto, jacobi or tridiagonal");

  std::uint64_t budget = GridOptions{}.budget;
  auto* grid = app.add_subcommand("grid", "minimum over the grid {0,1/k,..,1}^n");
  add_common(grid, true);
  grid->add_option("--budget", budget, "maximum number of grid points");

  std::string strategy = "jensen";
  auto* feasible = app.add_subcommand("feasible", "feasible point from the density");
  add_common(feasible, true);
  feasible->add_option("--r", c.r, "power of the density");
  feasible->add_option("--strategy", strategy, "mode, jensen or refine");

  auto* sample = app.add_subcommand("sample", "sample the optimal density");
  add_common(sample, true);
  sample->add_option("--r", c.r, "power of the density");
  sample->add_option("--N", c.sample_size, "sample size");
  sample->add_option("--seed", c.seed, "random seed");

  std::string r_spec = "1..10", x_spec;
  bool with_bound = false;
  auto* rates = app.add_subcommand("rates", "concentrated densities near x*");
  add_common(rates, false);
  rates->add_option("--r", r_spec, "precision r, a..b or comma list");
  rates->add_option("--x-star", x_spec, "minimizer, e.g. 0.3,11/20");
  rates->add_flag("--with-bound", with_bound, "also compute f_{k_r}^H");

  int table_id = 0;
  auto* table = app.add_subcommand("table", "recompute a reference table");
  table->add_option("id", table_id, "2, 3, 4, 5, 6, 9, 10 or 11")->required();
  table->add_option("--format", c.format, "csv or tsv");
  table->add_option("--workers", c.workers, "worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bound) return cmd_bound(c);
    if (*sos) return cmd_sos(c, basis, eigen);
    if (*grid) return cmd_grid(c, budget);
    if (*feasible) return cmd_feasible(c, strategy);
    if (*sample) return cmd_sample(c);
    if (*rates) return cmd_rates(c, r_spec, x_spec, with_bound);
    if (*table) return cmd_table(c, table_id);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ConditioningError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
