#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "wtrv/data.hpp"
#include "wtrv/fit.hpp"
#include "wtrv/gof.hpp"
#include "wtrv/orders.hpp"
#include "wtrv/reliability.hpp"
#include "wtrv/spec_parse.hpp"
#include "wtrv/wtrv.hpp"

using json = nlohmann::ordered_json;
using namespace wtrv;

namespace {

struct Output {
  std::string path;
  std::string format = "json";

  std::ostream& stream() {
    if (path.empty() || path == "-") return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw SchemaError("cannot write '" + path + "'");
    }
    return file;
  }
  std::ofstream file;
};

json number(double v) {
  if (std::isfinite(v)) return v;
  return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"x1", number(w->x1)}, {"x2", number(w->x2)}, {"v1", number(w->v1)}, {"v2", number(w->v2)},
          {"what", w->what}};
}

json verdict_json(const OrderVerdict& v) {
  return {{"order", to_string(v.order)},
          {"holds_on_grid", v.holds_on_grid},
          {"bounds_ok", v.bounds_ok},
          {"holds_on_common_support", v.holds_on_common_support},
          {"first_violation", witness_json(v.first_violation)},
          {"grid_points", v.grid_points},
          {"grid", v.grid}};
}

json hypotheses_json(const std::vector<std::pair<std::string, bool>>& hs) {
  json out = json::array();
  for (const auto& [k, v] : hs) out.push_back({{"hypothesis", k}, {"holds", v}});
  return out;
}

json aging_json(const AgingReport& r) {
  json w = json::object();
  for (const auto& [label, wit] : r.witnesses) w[label] = witness_json(wit);
  return {{"ILR", r.ilr},   {"DLR", r.dlr},   {"IFR", r.ifr},           {"DFR", r.dfr},
          {"DMRL", r.dmrl}, {"IMRL", r.imrl}, {"grid_points", r.grid.size()}, {"witnesses", w},
          {"notes", r.notes}};
}

json fit_json(const FitResult& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"model", to_string(r.model)},
          {"params", params},
          {"loglik", r.loglik},
          {"aic", r.aic},
          {"bic", r.bic},
          {"rmse", r.rmse},
          {"n", r.n},
          {"policy", to_string(r.policy)},
          {"optimizer",
           {{"converged", r.optimizer.converged},
            {"gradient_norm", r.optimizer.gradient_norm},
            {"iterations", r.optimizer.iterations},
            {"evaluations", r.optimizer.evaluations}}},
          {"starts_tried", r.starts_tried},
          {"starts_failed", r.starts_failed}};
}

json gof_json(const GofReport& r) {
  json tests = json::array();
  for (const auto& t : r.tests) {
    json j = {{"test", to_string(t.test)},
              {"statistic", t.statistic},
              {"p_value", t.p_value},
              {"method", to_string(t.method)}};
    if (t.test == GofTest::chisq) j["df"] = t.df;
    tests.push_back(j);
  }
  return {{"model", r.model}, {"n", r.n}, {"tests", tests}};
}

json describe_json(const DescriptiveStats& d) {
  return {{"n", d.n},
          {"mean", d.mean},
          {"median", d.median},
          {"mode", d.mode},
          {"sd", d.sd},
          {"variance", d.variance},
          {"skewness", d.skewness},
          {"kurtosis", d.kurtosis},
          {"min", d.min},
          {"max", d.max},
          {"convention", d.convention == MomentConvention::population ? "population" : "sample"}};
}

std::vector<GofTest> parse_tests(const std::string& list) {
  std::vector<GofTest> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_gof_test(item));
  if (out.empty()) throw ParseError("no tests requested");
  return out;
}

void print_table(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size() && j < width.size(); ++j) width[j] = std::max(width[j], r[j].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) os << std::left << std::setw(static_cast<int>(width[j]) + 2) << cells[j];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted tail random variables: construction, aging and order checks, fitting"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 42;
  app.add_option("--out", out.path, "Output file (default stdout)");
  app.add_option("--format", out.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", seed, "Random seed");

  std::string dist, weight, model_name = "wk", policy_name = "exclude-boundary", tests = "ks,ad,cvm,chisq";
  std::string pvalue = "asymptotic", column = "value", year_column, convention = "population";
  std::size_t grid = 256, bins = 10, starts = 16, replicates = 199, n = 1000;
  std::string csv_path;

  auto* construct_cmd = app.add_subcommand("construct", "Build X_w and print its pdf/cdf on a grid");
  construct_cmd->add_option("--dist", dist, "Base distribution, e.g. exponential(lambda=1)")->required();
  construct_cmd->add_option("--weight", weight, "Weight, e.g. power(c=2)")->required();
  construct_cmd->add_option("--grid", grid, "Grid points");

  std::string theorem;
  auto* aging_cmd = app.add_subcommand("check-aging", "Classify aging properties of X (or of X_w)");
  aging_cmd->add_option("--dist", dist)->required();
  aging_cmd->add_option("--weight", weight, "Classify X_w instead of X");
  aging_cmd->add_option("--theorem", theorem, "prop1, thm1..thm4 or prop2: check its hypotheses and conclusion");
  aging_cmd->add_option("--grid", grid);

  std::string xs, ys, wx, wy, order_name;
  auto* order_cmd = app.add_subcommand("check-order", "Check X <= Y in an order");
  order_cmd->add_option("--x", xs)->required();
  order_cmd->add_option("--y", ys)->required();
  order_cmd->add_option("--wx", wx, "Compare X_wx instead of X");
  order_cmd->add_option("--wy", wy, "Compare Y_wy instead of Y");
  order_cmd->add_option("--order", order_name)->required()->check(CLI::IsMember({"lr", "fr", "rfr", "st"}));
  order_cmd->add_option("--grid", grid);

  std::string fixture;
  bool emit_ratio = false;
  std::size_t audit_trials = 0;
  auto* theorem_cmd = app.add_subcommand("verify-theorem", "Check a theorem on a named fixture or on given inputs");
  theorem_cmd->add_option("which", fixture, "Fixture (e.g. thm9-example7) or theorem id with --x/--y/--w1/--w2")
      ->required();
  theorem_cmd->add_option("--x", xs);
  theorem_cmd->add_option("--y", ys);
  theorem_cmd->add_option("--w1", wx);
  theorem_cmd->add_option("--w2", wy);
  theorem_cmd->add_option("--grid", grid);
  theorem_cmd->add_flag("--emit-ratio", emit_ratio, "CSV of x and f_{Y_w2}/f_{X_w1}");
  theorem_cmd->add_option("--audit", audit_trials, "Run a randomized audit with this many passing tuples");

  app.add_subcommand("table1-audit", "Compare constructed densities with closed forms");

  auto add_csv = [&](CLI::App* cmd) {
    cmd->add_option("csv", csv_path, "Input CSV with a header row")->required();
    cmd->add_option("--column", column, "Value column name");
  };
  auto* describe_cmd = app.add_subcommand("describe", "Descriptive statistics of a CSV column");
  add_csv(describe_cmd);
  describe_cmd->add_option("--year-column", year_column);
  describe_cmd->add_option("--convention", convention)->check(CLI::IsMember({"population", "sample"}));

  std::string density_path;
  auto* fit_cmd = app.add_subcommand("fit", "Maximum-likelihood fit on min-max normalized data");
  add_csv(fit_cmd);
  fit_cmd->add_option("--model", model_name)->check(CLI::IsMember({"beta", "kw", "wk"}));
  fit_cmd->add_option("--policy", policy_name)->check(CLI::IsMember({"exclude-boundary", "exclude_boundary", "shrink"}));
  fit_cmd->add_option("--starts", starts);
  fit_cmd->add_option("--emit-density", density_path, "CSV of (x, pdf) for the fitted model");

  auto* gof_cmd = app.add_subcommand("gof", "Goodness-of-fit tests of a fitted model");
  add_csv(gof_cmd);
  gof_cmd->add_option("--model", model_name)->check(CLI::IsMember({"beta", "kw", "wk"}));
  gof_cmd->add_option("--policy", policy_name)->check(CLI::IsMember({"exclude-boundary", "exclude_boundary", "shrink"}));
  gof_cmd->add_option("--tests", tests);
  gof_cmd->add_option("--pvalue", pvalue)->check(CLI::IsMember({"asymptotic", "bootstrap"}));
  gof_cmd->add_option("--bins", bins);
  gof_cmd->add_option("--replicates", replicates);

  auto* report_cmd = app.add_subcommand("report", "describe, normalize, fit beta/kw/wk and test each");
  add_csv(report_cmd);
  report_cmd->add_option("--policy", policy_name)->check(CLI::IsMember({"exclude-boundary", "exclude_boundary", "shrink"}));
  report_cmd->add_option("--bins", bins);

  auto* simulate_cmd = app.add_subcommand("simulate", "Draw a sample by inverse transform");
  simulate_cmd->add_option("--dist", dist)->required();
  simulate_cmd->add_option("--weight", weight, "Sample X_w instead of X");
  simulate_cmd->add_option("--n", n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ostream& os = out.stream();
    os << std::setprecision(17);
    const std::string& fmt = out.format;

    if (construct_cmd->parsed()) {
      const auto base = parse_distribution(dist);
      const auto w = parse_weight(weight);
      const auto xw = construct(base, w);
      if (fmt == "json") {
        json pts = json::array();
        for (std::size_t i = 0; i < grid; ++i) {
          const double x = xw->quantile((i + 0.5) / static_cast<double>(grid));
          pts.push_back({x, xw->pdf(x), xw->cdf(x)});
        }
        os << json{{"base", base->spec()},
                   {"weight", w.spec()},
                   {"expected_weight", xw->normalizer()},
                   {"support", {number(xw->support().lo), number(xw->support().hi)}},
                   {"table_cells", xw->table_size() - 1},
                   {"columns", {"x", "pdf", "cdf"}},
                   {"points", pts}}
                  .dump(2)
           << '\n';
      } else {
        os << "x,pdf,cdf\n";
        for (std::size_t i = 0; i < grid; ++i) {
          const double x = xw->quantile((i + 0.5) / static_cast<double>(grid));
          os << x << ',' << xw->pdf(x) << ',' << xw->cdf(x) << '\n';
        }
      }
    } else if (aging_cmd->parsed()) {
      const auto base = parse_distribution(dist);
      if (!theorem.empty()) {
        const auto r = check_theorem_conditions(base, parse_weight(weight.empty() ? "linear" : weight),
                                                parse_aging_theorem(theorem), grid);
        os << json{{"theorem", to_string(r.which)},
                   {"variant", r.variant},
                   {"hypotheses", hypotheses_json(r.hypotheses)},
                   {"hypotheses_hold", r.hypotheses_hold},
                   {"weight_admissible", r.weight_admissible},
                   {"conclusion", r.conclusion},
                   {"conclusion_evaluated", r.conclusion_evaluated},
                   {"conclusion_holds", r.conclusion_holds},
                   {"consistent", r.consistent()},
                   {"note", r.note}}
                  .dump(2)
           << '\n';
      } else if (!weight.empty()) {
        const auto xw = construct(base, parse_weight(weight));
        os << aging_json(classify_aging(*xw, grid)).dump(2) << '\n';
      } else {
        os << aging_json(classify_aging(*base, grid)).dump(2) << '\n';
      }
    } else if (order_cmd->parsed()) {
      DistributionHandle x = parse_distribution(xs), y = parse_distribution(ys);
      if (!wx.empty()) x = construct(x, parse_weight(wx));
      if (!wy.empty()) y = construct(y, parse_weight(wy));
      json j = verdict_json(check_order(*x, *y, parse_order(order_name), grid));
      j["x"] = x->spec();
      j["y"] = y->spec();
      os << j.dump(2) << '\n';
    } else if (theorem_cmd->parsed()) {
      TheoremFixture f;
      if (fixture.find('-') != std::string::npos) {
        f = theorem_fixture(fixture);
      } else {
        f.name = fixture;
        f.which = parse_order_theorem(fixture);
        if (audit_trials == 0) {
          if (xs.empty() || ys.empty() || wx.empty()) throw ParseError("--x, --y and --w1 are required");
          f.x = parse_distribution(xs);
          f.y = parse_distribution(ys);
          f.w1 = parse_weight(wx);
          f.w2 = wy.empty() ? f.w1 : parse_weight(wy);
        }
      }
      if (audit_trials > 0) {
        const auto a = randomized_theorem_audit(f.which, audit_trials, seed);
        os << json{{"theorem", to_string(a.which)},
                   {"requested", a.requested},
                   {"attempts", a.attempts},
                   {"hypothesis_passing", a.hypothesis_passing},
                   {"skipped", a.skipped},
                   {"conclusion_passes", a.conclusion_passes},
                   {"counterexamples", a.counterexamples}}
                  .dump(2)
           << '\n';
      } else if (emit_ratio) {
        const auto xw = construct(f.x, f.w1);
        const auto yw = construct(f.y, f.w2);
        const auto s = xw->support(), t = yw->support();
        const double lo = std::max(s.lo, t.lo), hi = std::min(s.hi, t.hi);
        const double top = std::isfinite(hi) ? hi : std::min(xw->quantile(0.995), yw->quantile(0.995));
        os << "x,ratio\n";
        for (std::size_t i = 1; i < grid; ++i) {
          const double x = lo + (top - lo) * static_cast<double>(i) / static_cast<double>(grid);
          os << x << ',' << yw->pdf(x) / xw->pdf(x) << '\n';
        }
      } else {
        const auto r = verify_theorem(f.x, f.y, f.w1, f.w2, f.which, grid);
        json j = {{"theorem", to_string(r.which)},
                  {"x", f.x->spec()},
                  {"y", f.y->spec()},
                  {"w1", f.w1.spec()},
                  {"w2", f.w2.spec()},
                  {"hypotheses", hypotheses_json(r.hypotheses)},
                  {"hypotheses_hold", r.hypotheses_hold},
                  {"conclusion", r.conclusion},
                  {"conclusion_evaluated", r.conclusion_evaluated},
                  {"conclusion_holds", r.conclusion_holds},
                  {"consistent", r.consistent()},
                  {"verdict", r.verdict ? verdict_json(*r.verdict) : json(nullptr)},
                  {"note", r.note}};
        os << j.dump(2) << '\n';
      }
    } else if (app.got_subcommand("table1-audit")) {
      const auto rows = table1_oracle_suite();
      if (fmt == "json") {
        json arr = json::array();
        for (const auto& r : rows)
          arr.push_back({{"row", r.row},
                         {"base", r.base},
                         {"weight", r.weight},
                         {"target", r.target},
                         {"sup_norm", number(r.sup_norm)},
                         {"tolerance", r.tolerance},
                         {"passed", r.passed},
                         {"note", r.note}});
        os << arr.dump(2) << '\n';
      } else {
        std::vector<std::vector<std::string>> cells;
        for (const auto& r : rows) {
          std::ostringstream sup;
          sup << std::scientific << std::setprecision(2) << r.sup_norm;
          cells.push_back({std::to_string(r.row), r.base, r.weight, r.target, sup.str(), r.passed ? "ok" : "FAIL",
                           r.note});
        }
        print_table(os, {"row", "base", "weight", "target", "sup_norm", "status", "note"}, cells);
      }
      bool all = true;
      for (const auto& r : rows) all = all && r.passed;
      return all ? 0 : 1;
    } else if (describe_cmd->parsed()) {
      const auto s = read_csv(csv_path, column, year_column.empty() ? std::nullopt : std::optional(year_column));
      const auto d = describe(s, parse_moment_convention(convention));
      if (fmt == "json") {
        json j = describe_json(d);
        j["skipped_rows"] = s.skipped;
        os << j.dump(2) << '\n';
      } else {
        print_table(os, {"n", "mean", "median", "mode", "sd", "variance", "skewness", "kurtosis", "min", "max"},
                    {{std::to_string(d.n), fixed(d.mean, 3), fixed(d.median, 3), fixed(d.mode, 1), fixed(d.sd, 2),
                      fixed(d.variance, 2), fixed(d.skewness, 3), fixed(d.kurtosis, 2), fixed(d.min, 1),
                      fixed(d.max, 1)}});
      }
    } else if (fit_cmd->parsed() || gof_cmd->parsed()) {
      const auto s = read_csv(csv_path, column);
      const auto sample = normalize(s.values, parse_boundary_policy(policy_name));
      const Model model = parse_model(model_name);
      FitOptions fo;
      fo.starts = starts;
      fo.seed = seed;
      const auto fit = fit_mle(sample, model, fo);
      if (fit_cmd->parsed()) {
        if (!density_path.empty()) {
          std::ofstream d(density_path);
          if (!d) throw SchemaError("cannot write '" + density_path + "'");
          d << std::setprecision(17) << "x,pdf\n";
          const auto m = make_model(model, fit.values());
          for (int i = 1; i < 200; ++i) d << i / 200.0 << ',' << m->pdf(i / 200.0) << '\n';
        }
        os << fit_json(fit).dump(2) << '\n';
      } else {
        BootstrapOptions bo;
        bo.replicates = replicates;
        bo.seed = seed;
        bo.chisq.bins = bins;
        bo.chisq.fitted_params = parameter_names(model).size();
        const auto r = run_gof(sample.likelihood, model, fit.values(), parse_tests(tests),
                               pvalue == "bootstrap" ? PValueMethod::bootstrap : PValueMethod::asymptotic, bo);
        if (fmt == "json") {
          json j = gof_json(r);
          j["fit"] = fit_json(fit);
          os << j.dump(2) << '\n';
        } else {
          std::vector<std::vector<std::string>> cells;
          for (const auto& t : r.tests)
            cells.push_back({to_string(t.test), fixed(t.statistic), fixed(t.p_value), to_string(t.method)});
          print_table(os, {"test", "statistic", "p_value", "method"}, cells);
        }
      }
    } else if (report_cmd->parsed()) {
      const auto s = read_csv(csv_path, column);
      const auto d = describe(s);
      const auto sample = normalize(s.values, parse_boundary_policy(policy_name));
      json fits = json::array();
      std::vector<std::vector<std::string>> fit_rows, gof_rows;
      for (Model m : {Model::beta, Model::kw, Model::wk}) {
        FitOptions fo;
        fo.seed = seed;
        const auto fit = fit_mle(sample, m, fo);
        BootstrapOptions bo;
        bo.chisq.bins = bins;
        bo.chisq.fitted_params = parameter_names(m).size();
        const auto g = run_gof(sample.likelihood, m, fit.values(),
                               {GofTest::ks, GofTest::ad, GofTest::cvm, GofTest::chisq}, PValueMethod::asymptotic, bo);
        json j = fit_json(fit);
        j["gof"] = gof_json(g);
        fits.push_back(j);
        std::string ps;
        for (const auto& [k, v] : fit.params) ps += k + "=" + fixed(v) + " ";
        fit_rows.push_back({to_string(m), ps, fixed(fit.loglik), fixed(fit.aic), fixed(fit.bic), fixed(fit.rmse)});
        for (const auto& t : g.tests)
          gof_rows.push_back({to_string(m), to_string(t.test), fixed(t.statistic), fixed(t.p_value)});
      }
      if (fmt == "json") {
        os << json{{"describe", describe_json(d)},
                   {"normalization",
                    {{"z_min", sample.z_min},
                     {"z_max", sample.z_max},
                     {"n", sample.n},
                     {"likelihood_n", sample.likelihood.size()},
                     {"policy", to_string(sample.policy)}}},
                   {"models", fits}}
                  .dump(2)
           << '\n';
      } else {
        print_table(os, {"n", "mean", "median", "mode", "sd", "variance", "skewness", "kurtosis", "min", "max"},
                    {{std::to_string(d.n), fixed(d.mean, 3), fixed(d.median, 3), fixed(d.mode, 1), fixed(d.sd, 2),
                      fixed(d.variance, 2), fixed(d.skewness, 3), fixed(d.kurtosis, 2), fixed(d.min, 1),
                      fixed(d.max, 1)}});
        os << '\n';
        print_table(os, {"model", "params", "loglik", "AIC", "BIC", "RMSE"}, fit_rows);
        os << '\n';
        print_table(os, {"model", "test", "statistic", "p_value"}, gof_rows);
      }
    } else if (simulate_cmd->parsed()) {
      DistributionHandle d = parse_distribution(dist);
      if (!weight.empty()) d = construct(d, parse_weight(weight));
      const auto draws = sample(*d, n, seed);
      if (out.format == "json") {
        os << json{{"dist", d->spec()}, {"seed", seed}, {"values", draws}}.dump(2) << '\n';
      } else {
        os << "value\n";
        for (double v : draws) os << v << '\n';
      }
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}
