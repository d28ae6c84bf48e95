#include <cmath>
#include <functional>
#include <numbers>

#include "wtrv/wtrv.hpp"

namespace wtrv {

namespace {

struct RowDefinition {
  std::string base_label;
  std::string weight_label;
  std::string target_label;
  std::function<DistributionHandle()> base;
  std::function<WeightFunction()> weight;
  std::function<double(double)> target_pdf;
  std::string note;
};

std::vector<RowDefinition> rows() {
  using std::exp;
  using std::log;
  using std::pow;
  const double lambda = 1.5;
  const double k = 2.5;
  const double wa = 1.7, wb = 2.0;
  const double alpha = 2.0, beta = 3.0;
  const double chi_k = 3.0;
  const double sigma = 1.3;
  const double gp = 1.5, ga = 2.0, gd = 2.5;
  const double bc = 2.0, bk = 3.0, ba = 1.5;
  const double ka = 2.0, kb = 3.0, kc = 1.5;

  std::vector<RowDefinition> out;
  out.push_back({"exponential(lambda=1.5)", "linear", "exponential(lambda=1.5)",
                 [=] { return exponential(lambda); }, [] { return linear_weight(); },
                 [=](double x) { return lambda * exp(-lambda * x); }, ""});
  out.push_back({"exponential(lambda=1.5)", "power(c=2.5)", "gamma(k=2.5,lambda=1.5)",
                 [=] { return exponential(lambda); }, [=] { return power_weight(k); },
                 [=](double x) { return exp(k * log(lambda) + (k - 1) * log(x) - lambda * x - numerics::ln_gamma(k)); },
                 ""});
  out.push_back({"weibull(alpha=1.7,beta=2)", "scaled_power(alpha=1.7,beta=2)", "weibull(alpha=1.7,beta=2)",
                 [=] { return weibull(wa, wb); }, [=] { return scaled_power_weight(wa, wb); },
                 [=](double x) { return wa / wb * pow(x / wb, wa - 1) * exp(-pow(x / wb, wa)); }, ""});
  out.push_back({"truncated_power(beta=3)", "power(c=2)", "beta(alpha=2,beta=3)",
                 [=] { return truncated_power(beta); }, [=] { return power_weight(alpha); },
                 [=](double x) {
                   return exp((alpha - 1) * log(x) + (beta - 1) * std::log1p(-x) - numerics::ln_beta(alpha, beta));
                 },
                 ""});
  out.push_back({"exponential(lambda=0.5)", "power(c=1.5)", "chi_square(k=3)",
                 [] { return exponential(0.5); }, [=] { return power_weight(chi_k / 2); },
                 [=](double x) {
                   return exp(-(chi_k / 2) * log(2.0) + (chi_k / 2 - 1) * log(x) - x / 2 - numerics::ln_gamma(chi_k / 2));
                 },
                 ""});
  out.push_back({"rayleigh(sigma=1.3)", "scaled_power(alpha=2,beta=sqrt(2)*1.3)", "rayleigh(sigma=1.3)",
                 [=] { return make_catalog("rayleigh", {{"sigma", sigma}}); },
                 [=] { return scaled_power_weight(2.0, std::numbers::sqrt2 * sigma); },
                 [=](double x) { return x / (sigma * sigma) * exp(-x * x / (2 * sigma * sigma)); }, ""});
  out.push_back({"weibull(alpha=2,beta=sqrt(2)*1.3)", "scaled_power(alpha=1,beta=sqrt(2)*1.3)",
                 "half_normal(sigma=1.3)",
                 [=] { return weibull(2.0, std::numbers::sqrt2 * sigma); },
                 [=] { return scaled_power_weight(1.0, std::numbers::sqrt2 * sigma); },
                 [=](double x) {
                   return std::numbers::sqrt2 / (sigma * std::sqrt(std::numbers::pi)) * exp(-x * x / (2 * sigma * sigma));
                 },
                 ""});
  out.push_back({"weibull(alpha=1.5,beta=2)", "scaled_power(alpha=2.5,beta=2)",
                 "generalized_gamma(p=1.5,a=2,d=2.5)", [=] { return weibull(gp, ga); },
                 [=] { return scaled_power_weight(gd, ga); },
                 [=](double x) {
                   return exp(log(gp) + (gd - 1) * log(x) - pow(x / ga, gp) - gd * log(ga) - numerics::ln_gamma(gd / gp));
                 },
                 "weight exponent is d; the printed (x/a)^p only reaches d = p"});
  out.push_back({"burr12(c=2,k=3)", "log1p_power(c=2)", "burr12(c=2,k=3)", [=] { return burr12(bc, bk); },
                 [=] { return make_weight("log1p_power", {{"c", bc}}); },
                 [=](double x) { return bc * bk * pow(x, bc - 1) * pow(1 + pow(x, bc), -(bk + 1)); }, ""});
  out.push_back({"burr12(c=2,k=3)", "power(c=1.5)", "wtrv of burr12",
                 [=] { return burr12(bc, bk); }, [=] { return power_weight(ba); },
                 [=](double x) {
                   return ba * pow(x, ba - 1) * pow(1 + pow(x, bc), -bk) /
                          (bk * numerics::beta_fn((bc * bk - ba) / bc, (bc + ba) / bc));
                 },
                 ""});
  out.push_back({"kumaraswamy(a=2,b=3)", "power(c=2)", "kumaraswamy(a=2,b=4)",
                 [=] { return kumaraswamy(ka, kb); }, [=] { return power_weight(ka); },
                 [=](double x) { return ka * (kb + 1) * pow(x, ka - 1) * pow(1 - pow(x, ka), kb); },
                 "compared with Kumaraswamy(a, b+1); the printed constant ab does not normalize"});
  out.push_back({"kumaraswamy(a=2,b=3)", "power(c=1.5)", "weighted_kumaraswamy(a=2,b=3,c=1.5)",
                 [=] { return kumaraswamy(ka, kb); }, [=] { return power_weight(kc); },
                 [=](double x) {
                   return kc * pow(x, kc - 1) * pow(1 - pow(x, ka), kb) / (kb * numerics::beta_fn(1 + kc / ka, kb));
                 },
                 ""});
  return out;
}

}  // namespace

std::vector<Table1Row> table1_oracle_suite() {
  std::vector<Table1Row> report;
  int index = 0;
  for (const auto& def : rows()) {
    Table1Row row;
    row.row = ++index;
    row.base = def.base_label;
    row.weight = def.weight_label;
    row.target = def.target_label;
    row.note = def.note;
    try {
      const auto xw = construct(def.base(), def.weight());
      double sup = 0.0;
      constexpr int kGrid = 512;
      for (int i = 0; i < kGrid; ++i) {
        const double x = xw->quantile((i + 0.5) / kGrid);
        sup = std::max(sup, std::fabs(xw->pdf(x) - def.target_pdf(x)));
      }
      row.sup_norm = sup;
      row.passed = sup <= row.tolerance;
    } catch (const Error& e) {
      row.sup_norm = numerics::kInf;
      row.passed = false;
      row.note += (row.note.empty() ? "" : "; ") + std::string(e.what());
    }
    report.push_back(row);
  }
  return report;
}

}  // namespace wtrv
