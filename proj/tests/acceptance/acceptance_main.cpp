// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rncdr/acr.hpp"
#include "rncdr/decomposition.hpp"
#include "rncdr/doa.hpp"
#include "rncdr/dsl.hpp"
#include "rncdr/injectivity.hpp"
#include "rncdr/json_io.hpp"
#include "rncdr/kinetics.hpp"
#include "rncdr/models.hpp"
#include "rncdr/report.hpp"
#include "rncdr/sim.hpp"
#include "rncdr/transforms.hpp"

using namespace rncdr;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
};

int failed = 0;

void report(const std::string& id, const std::string& title, const std::function<void(Check&)>& body,
            bool informational = false) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string tag = c.ok ? "PASS" : (informational ? "INFO-FAIL" : "FAIL");
  std::printf("%s %s %s (%.2fs)\n", tag.c_str(), id.c_str(), title.c_str(), secs);
  for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
  std::fflush(stdout);
  if (!c.ok && !informational) ++failed;
}

ModelParams orders(Rational p1, Rational p2, Rational q1, Rational q2) {
  return {{"p1", p1}, {"p2", p2}, {"q1", q1}, {"q2", q2}};
}

ModelParams with_unit_constants(ModelParams p, const std::string& model) {
  for (auto s : {"k1", "k2", "k5", "a_m", "beta"}) p[s] = 1;
  if (model == "beccs") p["k6"] = p["k7"] = 1;
  if (model == "dac") p["k4"] = p["k6"] = 1;
  if (model == "ar") {
    p["k15_6"] = p["k15_7"] = 1;
    p["e15"] = 2;
    p["f15"] = -1;
  }
  return p;
}

std::set<std::string> species_names(const ReactionNetwork& net, const std::vector<size_t>& idx) {
  std::set<std::string> out;
  for (auto i : idx) out.insert(net.species()[i]);
  return out;
}

SparsePolynomial product_term(const std::string& text) {
  std::string body = text;
  Rational sign = 1;
  if (body[0] == '-') {
    sign = -1;
    body = body.substr(1);
  }
  SparsePolynomial out(sign);
  std::stringstream ss(body);
  std::string f;
  while (std::getline(ss, f, '*')) out = out * SparsePolynomial::symbol(f);
  return out;
}

std::string pair_str(const std::string& a, long x, long y) {
  return a + " = " + std::to_string(x) + " (expected " + std::to_string(y) + ")";
}

void check_numbers(Check& c, const std::string& model, const NetworkNumbers& got, const NetworkNumbers& want,
                   bool skip_sl) {
  auto one = [&](const char* f, long g, long w) { c.expect(g == w, model + " " + pair_str(f, g, w)); };
  one("m", got.m, want.m);
  one("n", got.n, want.n);
  one("n_r", got.n_r, want.n_r);
  one("r", got.r, want.r);
  one("r_irr", got.r_irr, want.r_irr);
  one("l", got.l, want.l);
  if (!skip_sl) one("sl", got.sl, want.sl);
  one("t", got.t, want.t);
  one("s", got.s, want.s);
  one("q", got.q, want.q);
  one("delta", got.delta, want.delta);
  one("delta_rho", got.delta_rho, want.delta_rho);
}

void criterion1(Check& c) {
  auto beccs = analyze({"beccs", build_model("beccs")});
  check_numbers(c, "beccs", beccs.numbers, {5, 7, 7, 7, 3, 2, 1, 2, 4, 5, 1, 2}, true);
  c.expect(beccs.numbers.sl == 5, "beccs sl = " + std::to_string(beccs.numbers.sl) + " (expected 5)");
  bool noted = false;
  for (auto& n : beccs.notes) noted = noted || n.rfind("sl:", 0) == 0;
  c.expect(noted, "beccs sl discrepancy note missing");

  auto ar = analyze({"ar", build_model("ar")});
  check_numbers(c, "ar", ar.numbers, {5, 9, 7, 7, 3, 4, 7, 4, 4, 5, 1, 2}, false);

  auto anderies = analyze({"anderies", build_model("anderies")});
  c.expect(anderies.numbers.delta == 0, "anderies delta != 0");
  c.expect(anderies.flags.weakly_reversible, "anderies not weakly reversible");
}

void criterion2(Check& c) {
  for (auto name : {"beccs", "ar"}) {
    auto rep = analyze({name, build_model(name)});
    std::string m = name;
    c.expect(rep.concordance && !rep.concordance->concordant, m + " not discordant");
    c.expect(rep.conservative.holds, m + " not conservative");
    c.expect(!rep.independent_linkage_classes, m + " has independent linkage classes");
    c.expect(rep.positively_dependent.holds, m + " not positively dependent");
    c.expect(rep.regular.regular, m + " not regular: " + rep.regular.violation);
  }
}

void criterion3(Check& c) {
  const std::vector<std::string> display = {
      "-p1*k1*k2*k4*k5*z1*z3*z5*z7", "-p1*k1*k3*k4*k5*z1*z4*z5*z7", "p2*k1*k2*k4*k5*z2*z3*z5*z7",
      "p2*k1*k3*k4*k5*z2*z4*z5*z7",  "q1*k1*k2*k3*k4*z1*z4*z5*z6",  "q1*k1*k2*k3*k5*z1*z4*z6*z7",
      "q1*k2*k3*k4*k5*z1*z4*z5*z7",  "-q2*k1*k2*k3*k4*z2*z4*z5*z6", "-q2*k1*k2*k3*k5*z2*z4*z6*z7",
      "-q2*k2*k3*k4*k5*z2*z4*z5*z7", "k1*k2*k4*k5*z3*z5*z6*z7",     "k1*k3*k4*k5*z4*z5*z6*z7"};
  SparsePolynomial ref;
  for (auto& t : display) ref += product_term(t);
  auto det = analyze_injectivity(build_model("beccs")).det;
  c.expect(det.size() == 12, "beccs det has " + std::to_string(det.size()) + " terms");
  c.expect(normalize_leading(det) == normalize_leading(ref), "beccs det differs from the reference display");

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> d(1, 40);
  auto r = [&]() -> Rational { return Rational(d(rng)) / 10; };
  for (auto name : {"beccs", "ar"}) {
    std::string m = name;
    auto verdict = [&](const ModelParams& p) { return analyze_injectivity(rncdr::bind(build_model(name), p)).verdict.status; };
    for (int i = 0; i < 10; ++i) {
      c.expect(verdict(orders(-r(), r(), r(), -r())) == InjectivityStatus::Injective, m + " negative class (i)");
      c.expect(verdict(orders(0, 0, r(), -r())) == InjectivityStatus::Injective, m + " P-null class (ii)");
      c.expect(verdict(orders(-r(), r(), 0, 0)) == InjectivityStatus::Injective, m + " Q-null class (iii)");
      Rational p2 = 1 + r(), q2 = r();
      c.expect(verdict(orders(p2 + r(), p2, q2 + r(), q2)) == InjectivityStatus::NotInjective,
               m + " positive class should be non-injective");
    }
  }
}

void check_realization(Check& c, const std::string& m, const KineticSystem& sys, const RVec& mu) {
  auto real = realize_witness(sys, mu);
  c.expect(real.residual1 < 1e-9, m + " residual x* " + std::to_string(real.residual1));
  c.expect(real.residual2 < 1e-9, m + " residual x** " + std::to_string(real.residual2));
  auto n = sys.net.stoichiometric_matrix();
  auto laws = left_kernel(n);
  for (auto& w : laws) {
    double t1 = 0, t2 = 0, scale = 0;
    for (size_t s = 0; s < w.size(); ++s) {
      t1 += w[s].get_d() * real.x1[s];
      t2 += w[s].get_d() * real.x2[s];
      scale += std::abs(w[s].get_d() * real.x1[s]);
    }
    c.expect(std::abs(t1 - t2) <= 1e-9 * std::max(1.0, scale), m + " conservation totals differ");
  }
  double sep = 0;
  for (size_t s = 0; s < real.x1.size(); ++s)
    sep = std::max(sep, std::abs(real.x1[s] - real.x2[s]) / std::max(real.x1[s], real.x2[s]));
  c.expect(sep > 1e-3, m + " equilibria not separated");
}

void criterion4(Check& c) {
  auto sys = rncdr::bind(build_model("beccs"), orders(4, 2, 3, 2));
  auto res = doa_search(sys);
  c.expect(res.witness.has_value(), "beccs: no witness");
  if (res.witness) {
    const std::map<std::string, Rational> want{{"A1+2A2", -1}, {"2A1+A2", 1}, {"A1", -1}, {"A2", 1},
                                               {"A3", 0},      {"A4", 0},     {"A8", 0}};
    const auto& h = res.witness->h;
    bool plus = true, minus = true;
    for (size_t k = 0; k < sys.net.n(); ++k) {
      Rational w = want.at(sys.net.complex_label(k));
      plus = plus && h[k] == w;
      minus = minus && h[k] == -w;
    }
    c.expect(plus || minus, "beccs confluence vector is not +-[-1,1,-1,1,0,0,0]");
    check_realization(c, "beccs", sys, res.witness->mu);
  }
  auto ar_params = orders(4, 2, 3, 2);
  ar_params["e15"] = 2;
  ar_params["f15"] = -1;
  auto ar = rncdr::bind(build_model("ar"), ar_params);
  auto res_ar = doa_search(ar);
  c.expect(res_ar.witness.has_value(), "ar: no witness");
  if (res_ar.witness) check_realization(c, "ar", ar, res_ar.witness->mu);
}

void criterion5(Check& c) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(1, 50);
  auto r = [&]() -> Rational { return Rational(d(rng)) / 10; };
  size_t searches = 0;
  for (auto name : {"beccs", "ar"}) {
    for (int i = 0; i < 50; ++i) {
      std::vector<std::pair<std::string, ModelParams>> cases = {
          {"negative", orders(-r(), r(), r(), -r())},
          {"P-null", orders(0, 0, r(), -r())},
          {"Q-null", orders(-r(), r(), 0, 0)}};
      for (auto& [cls, p] : cases) {
        if (std::string(name) == "ar") {
          p["e15"] = 1 + r();
          p["f15"] = -r();
        }
        auto res = doa_search(rncdr::bind(build_model(name), p));
        ++searches;
        if (res.witness) {
          std::string desc = std::string(name) + " " + cls + " witness at p=(" + to_string(p["p1"]) + "," +
                             to_string(p["p2"]) + ") q=(" + to_string(p["q1"]) + "," + to_string(p["q2"]) + ")";
          c.expect(false, desc);
        }
      }
    }
  }
  c.expect(searches == 300, "expected 300 searches");
}

void criterion6(Check& c) {
  for (auto name : {"beccs", "ar"}) {
    auto sys = rncdr::bind(build_model(name), with_unit_constants(orders(1, 1, 2, 1), name));
    SamplingOptions opt;
    opt.trials = 32;
    opt.tolerance = 1e-6;
    auto res = acr_sampling(sys, opt);
    auto got = species_names(sys.net, res.species);
    c.expect(got == std::set<std::string>{"A2", "A3"}, std::string(name) + " sampled ACR set differs");
    c.expect(res.equilibria.size() >= 2, std::string(name) + " too few equilibria");
  }
  for (auto name : {"anderies", "dac"}) {
    auto sys = rncdr::bind(build_model(name), orders(-1, 2, 0, 0));
    auto res = acr_hyperplane(sys);
    c.expect(species_names(sys.net, res.species) == std::set<std::string>{"A1"},
             std::string(name) + " hyperplane ACR set differs");
  }
}

void criterion7(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> frac(0, 100), pos(1, 1000);
  size_t tested = 0;
  while (tested < 1000) {
    EmissionParams p{(Rational(frac(rng)) / 100), (Rational(frac(rng)) / 100), (Rational(pos(rng)) / 10), (Rational(pos(rng)) / 10)};
    if (p.a4_0 - emission_coefficient(p) * p.ai_0 <= 0) continue;
    auto o = emission_power_law(p);
    ++tested;
    c.expect(o.e + o.f == 1, "e + f != 1");
    c.expect(o.e >= 1, "e < 1");
    c.expect(o.f <= 0, "f > 0");
    if (!c.ok) return;
  }
  auto o = emission_power_law({1, 0, 7, 3});
  c.expect(o.e == 1 && o.f == 0, "(lambda, mu) = (1, 0) does not give (1, 0)");
}

void balanced_suite(Check& c, const ModelParams& p) {
  auto sys = rncdr::bind(build_model("beccs"), p);
  auto bn = balanced_negative_check(sys);
  c.expect(bn.balanced_negative, "not balanced negative");
  c.expect(bn.s_equals_flux, "S differs from the kinetic flux subspace");
  auto wr = beccs_wr_transform(sys);
  auto nn = network_numbers(wr.net);
  c.expect(nn.n == 8 && nn.l == 3 && nn.s == 4, "WR transform (n,l,s) = (" + std::to_string(nn.n) + "," +
                                                   std::to_string(nn.l) + "," + std::to_string(nn.s) + ")");
  long kd = kinetic_deficiency(wr);
  c.expect(kd == 1, "kinetic deficiency of the WR transform = " + std::to_string(kd));
  try {
    auto vcb = vcb_analysis(sys, {-1.0, 0.5, 1.0});
    std::string res;
    for (double r : vcb.residuals) res += " " + std::to_string(r);
    c.expect(vcb.family_verified, "e^alpha*1 residuals:" + res);
    c.expect(vcb.distinct_classes, "alpha values share a stoichiometric class");
  } catch (const Error& e) {
    c.expect(false, std::string("vcb_analysis: ") + e.what());
  }
  c.expect(!reduction_target_feasible(Rational(1, 5)), "xi = 0.2 accepted");
  c.expect(!reduction_target_feasible(Rational(1, 10)), "xi = 0.1 accepted");
  c.expect(!reduction_target_feasible(0), "xi = 0 accepted");
  c.expect(reduction_target_feasible(Rational(1, 2)), "xi = 0.5 rejected");
  for (const RVec& x0 : {RVec{1, 1, 1, 1, 1}, RVec{Rational(1, 100), 50, Rational(1, 100), Rational(1, 100), 1}}) {
    auto chk = reduction_feasibility(x0);
    c.expect(chk.feasible == (chk.implied_xi > Rational(1, 5)), "reduction_feasibility disagrees with xi > 1/5");
  }
}

void criterion9(Check& c) {
  for (auto name : {"beccs", "ar"}) {
    std::string m = name;
    auto sys = rncdr::bind(build_model(name), with_unit_constants(orders(Rational(1, 2), 1, 1, Rational(1, 2)), name));
    auto d = finest_independent_decomposition(sys.net);
    c.expect(d.blocks.size() == 2, m + " has " + std::to_string(d.blocks.size()) + " blocks");
    bool isolated = false;
    for (auto& b : d.blocks) {
      std::set<std::string> labels;
      for (auto j : b) labels.insert(sys.net.reactions()[j].label);
      if (labels == std::set<std::string>{"R3", "R4"}) isolated = true;
    }
    c.expect(isolated, m + " ocean exchange not isolated");
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int i = 0; i < 3; ++i) {
      std::vector<double> x0(sys.net.m());
      for (auto& v : x0) v = u(rng);
      auto x = find_steady_state(sys, x0);
      for (double r : verify_equilibria_intersection(sys, d.blocks, x))
        c.expect(r < 1e-9, m + " block residual " + std::to_string(r));
    }
  }
}

void criterion10(Check& c) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(std::log(0.1), std::log(10.0));
  for (auto name : {"beccs", "ar"}) {
    std::string m = name;
    auto sys = rncdr::bind(build_model(name), with_unit_constants(orders(Rational(1, 2), 1, 1, Rational(1, 2)), name));
    auto laws = left_kernel(sys.net.stoichiometric_matrix());
    RVec carbon(sys.net.m(), 1);
    bool found = false;
    for (auto& w : laws) found = found || primitive(w) == carbon;
    c.expect(found, m + " total carbon is not a conservation law");
    for (int i = 0; i < 10; ++i) {
      std::vector<double> x0(sys.net.m());
      for (auto& v : x0) v = std::exp(u(rng));
      IntegrateOptions opt;
      opt.rtol = 1e-9;
      auto tr = integrate(sys, x0, 100.0, opt);
      double t0 = 0;
      for (double v : x0) t0 += v;
      double drift = 0;
      for (auto& x : tr.x) {
        double t = 0;
        for (double v : x) t += v;
        drift = std::max(drift, std::abs(t - t0) / t0);
      }
      c.expect(drift < 1e-8, m + " relative drift " + std::to_string(drift));
    }
  }
}

void criterion11(Check& c) {
  for (auto& name : model_names()) {
    NetworkDocument doc{name, build_model(name)};
    auto text = serialize_document(doc);
    auto back = parse_document(text);
    c.expect(serialize_document(back) == text, name + " text round-trip differs");
    c.expect(back.system.net.complexes() == doc.system.net.complexes() &&
                 back.system.kin.orders == doc.system.kin.orders && back.system.kin.rates == doc.system.kin.rates,
             name + " parsed system differs");
    auto j1 = document_to_json(doc);
    auto j2 = document_to_json(NetworkDocument{name, build_model(name)});
    c.expect(j1 == j2, name + " JSON not byte-stable");
    c.expect(document_to_json(document_from_json(j1)) == j1, name + " JSON round-trip differs");
  }
}

}  // namespace

int main() {
  report("1", "network-number fixtures", criterion1);
  report("2", "property fixtures", criterion2);
  report("3", "injectivity determinant and verdicts", criterion3);
  report("4", "deficiency-one witnesses and realization", criterion4);
  report("5", "monostationarity of injective classes", criterion5);
  report("6", "absolute concentration robustness", criterion6);
  report("7", "emission power-law approximation", criterion7);
  report("8", "balanced-negative suite p=(2,1) q=(1,2)", [](Check& c) { balanced_suite(c, orders(2, 1, 1, 2)); });
  report("8b", "balanced-negative suite p=(0,1) q=(1,0)", [](Check& c) { balanced_suite(c, orders(0, 1, 1, 0)); },
         true);
  report("9", "finest independent decomposition", criterion9);
  report("10", "carbon conservation", criterion10);
  report("11", "text and JSON round-trip", criterion11);
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
