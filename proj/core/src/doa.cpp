#include "rncdr/doa.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "rncdr/error.hpp"
#include "rncdr/parallel.hpp"
#include "rncdr/sim.hpp"

namespace rncdr {

std::vector<std::string> doa_applicability(const KineticSystem& sys) {
  std::vector<std::string> out;
  auto nn = network_numbers(sys.net);
  if (nn.delta != 1) out.push_back("deficiency != 1 (delta = " + std::to_string(nn.delta) + ")");
  auto reg = is_regular(sys.net);
  if (!reg.regular) out.push_back("not regular: " + reg.violation);
  if (!is_pl_rdk(sys)) out.push_back("kinetics is not PL-RDK");
  if (nn.t != nn.l) out.push_back("t != l");
  return out;
}

std::vector<RVec> confluence_vectors(const ReactionNetwork& net, const DoaOptions& opt) {
  auto gs = graph_structure(net);
  const size_t l = component_count(gs.linkage);
  std::vector<RVec> rows;
  RMatrix y = net.complex_matrix();
  for (size_t s = 0; s < net.m(); ++s) rows.push_back(y.row(s));
  for (size_t c = 0; c < l; ++c) {
    RVec ind(net.n());
    for (size_t k = 0; k < net.n(); ++k)
      if (gs.linkage[k] == c) ind[k] = 1;
    rows.push_back(ind);
  }
  auto basis = nullspace(RMatrix::from_rows(rows, net.n()));

  // Terminal strong classes that are not whole linkage classes.
  std::vector<std::vector<size_t>> classes;
  const size_t ns = component_count(gs.strong);
  for (size_t sc = 0; sc < ns; ++sc) {
    if (!gs.terminal[sc]) continue;
    std::vector<size_t> members;
    size_t lc = SIZE_MAX;
    for (size_t k = 0; k < net.n(); ++k)
      if (gs.strong[k] == sc) {
        members.push_back(k);
        lc = gs.linkage[k];
      }
    size_t lc_size = static_cast<size_t>(std::count(gs.linkage.begin(), gs.linkage.end(), lc));
    if (members.size() != lc_size) classes.push_back(members);
  }
  auto valid = [&](const RVec& h) {
    if (classes.empty()) return false;
    Rational total = 0;
    for (const auto& cl : classes) {
      Rational sum = 0;
      for (size_t k : cl) sum += h[k];
      if (!opt.union_terminal_condition && sgn(sum) <= 0) return false;
      total += sum;
    }
    return sgn(total) > 0;
  };
  std::vector<RVec> out;
  for (const auto& b : basis) {
    RVec neg(b.size());
    for (size_t k = 0; k < b.size(); ++k) neg[k] = -b[k];
    if (valid(b)) out.push_back(b);
    if (valid(neg)) out.push_back(neg);
  }
  return out;
}

char part_name(Part p) { return p == Part::U ? 'U' : p == Part::M ? 'M' : 'L'; }

UmlPartition partition_from_index(unsigned long index, size_t n_r) {
  UmlPartition p(n_r);
  for (size_t i = 0; i < n_r; ++i) {
    int d = static_cast<int>(index % 3);
    p[i] = d == 0 ? Part::M : d == 1 ? Part::U : Part::L;
    index /= 3;
  }
  return p;
}

Rational side_sum(const ReactionNetwork& net, const RVec& h, size_t side, size_t other) {
  auto comp = weak_components_without(net.graph(), side, other);
  Rational sum = 0;
  for (size_t k = 0; k < net.n(); ++k)
    if (comp[k] == comp[side]) sum += h[k];
  return sum;
}

bool orientation_admissible(const ReactionNetwork& net, const RVec& h) {
  auto gs = graph_structure(net);
  for (const auto& rx : net.reactions()) {
    if (gs.strong[rx.reactant] == gs.strong[rx.product]) continue;
    if (sgn(side_sum(net, h, rx.reactant, rx.product)) >= 0) return false;
  }
  return true;
}

bool partition_admissible(const ReactionNetwork& net, const UmlPartition& uml) {
  auto gs = graph_structure(net);
  auto reactants = net.reactant_complexes();
  std::map<size_t, Part> part;
  for (size_t i = 0; i < reactants.size(); ++i) part[reactants[i]] = uml[i];
  for (const auto& rx : net.reactions())
    if (gs.strong[rx.reactant] != gs.strong[rx.product] && part[rx.reactant] != Part::M) return false;
  for (size_t i = 0; i < reactants.size(); ++i)
    for (size_t j = i + 1; j < reactants.size(); ++j)
      if (gs.strong[reactants[i]] == gs.strong[reactants[j]] && uml[i] != uml[j]) return false;
  return true;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::MEquality: return "M-equality";
    case Provenance::CrossPart: return "cross-part";
    case Provenance::CutPair: return "cut-pair";
  }
  return "?";
}

namespace {

int rank_of(Part p) { return p == Part::U ? 2 : p == Part::M ? 1 : 0; }

RVec difference(const RVec& a, const RVec& b) {
  RVec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

LinearProgram relation_lp(const LinearRelationSystem& system) {
  LinearProgram lp(system.dim);
  for (const auto& rel : system.relations) {
    if (rel.strict) lp.add(rel.coeffs, Rel::Ge, 1);
    else lp.add(rel.coeffs, Rel::Eq, 0);
  }
  return lp;
}

}  // namespace

LinearRelationSystem build_linear_system(const KineticSystem& sys, const RVec& h, const UmlPartition& uml) {
  const auto& net = sys.net;
  auto tcols = numeric_t_columns(sys);
  auto reactants = net.reactant_complexes();
  if (uml.size() != reactants.size()) fail(ErrorKind::InvalidInput, "partition size does not match reactant complexes");
  LinearRelationSystem out;
  out.dim = net.m();
  auto name = [&](size_t c) { return net.complex_label(c); };

  std::vector<size_t> mids;
  for (size_t i = 0; i < reactants.size(); ++i)
    if (uml[i] == Part::M) mids.push_back(reactants[i]);
  for (size_t k = 1; k < mids.size(); ++k)
    out.relations.push_back({difference(tcols[mids[0]], tcols[mids[k]]), false, Provenance::MEquality,
                             "T(" + name(mids[0]) + ") = T(" + name(mids[k]) + ")"});

  for (size_t i = 0; i < reactants.size(); ++i)
    for (size_t j = 0; j < reactants.size(); ++j)
      if (rank_of(uml[i]) > rank_of(uml[j]))
        out.relations.push_back({difference(tcols[reactants[i]], tcols[reactants[j]]), true, Provenance::CrossPart,
                                 "T(" + name(reactants[i]) + ") > T(" + name(reactants[j]) + ")"});

  std::map<size_t, Part> part;
  for (size_t i = 0; i < reactants.size(); ++i) part[reactants[i]] = uml[i];
  for (const auto& cp : cut_pairs(net)) {
    if (!part.count(cp.a) || !part.count(cp.b)) continue;
    Part pa = part[cp.a];
    if (pa != part[cp.b] || pa == Part::M) continue;
    int sg = sgn(side_sum(net, h, cp.a, cp.b));
    if (pa == Part::L) sg = -sg;
    RVec d = difference(tcols[cp.a], tcols[cp.b]);
    std::string note = "cut pair " + name(cp.a) + " | " + name(cp.b);
    if (sg == 0) {
      out.relations.push_back({d, false, Provenance::CutPair, note + ": equal"});
    } else {
      if (sg < 0)
        for (auto& x : d) x = -x;
      out.relations.push_back({d, true, Provenance::CutPair, note});
    }
  }
  return out;
}

std::optional<SignCompatibleWitness> solve_sign_compatible(const LinearRelationSystem& system,
                                                           const std::vector<SignPattern>& patterns) {
  LinearProgram base = relation_lp(system);
  bool has_strict = std::any_of(system.relations.begin(), system.relations.end(), [](const Relation& r) { return r.strict; });
  if (has_strict && !find_feasible(base)) return std::nullopt;

  // Depth-first over coordinates from the most significant base-3 digit down,
  // so the first hit is the first allowed pattern in enumeration order.
  const size_t m = system.dim;
  std::vector<std::set<SignPattern>> viable(m + 1);
  for (const auto& p : patterns) {
    if (p.size() != m) fail(ErrorKind::InvalidInput, "sign pattern has the wrong dimension");
    for (size_t t = 0; t <= m; ++t) viable[t].insert(SignPattern(p.end() - static_cast<long>(t), p.end()));
  }
  SignPattern cur(m, 0);
  std::function<std::optional<RVec>(size_t, const LinearProgram&)> dfs =
      [&](size_t t, const LinearProgram& lp) -> std::optional<RVec> {
    const size_t i = m - 1 - t;
    for (int digit : {0, 1, -1}) {
      cur[i] = digit;
      if (!viable[t + 1].count(SignPattern(cur.begin() + static_cast<long>(i), cur.end()))) continue;
      LinearProgram next = lp;
      if (digit > 0) next.at_least(i, 1);
      else if (digit < 0) next.at_most(i, -1);
      else next.fix(i, 0);
      auto mu = find_feasible(next);
      if (!mu) continue;
      if (t + 1 == m) return mu;
      if (auto found = dfs(t + 1, next)) return found;
    }
    cur[i] = 0;
    return std::nullopt;
  };
  if (m == 0 || patterns.empty()) return std::nullopt;
  auto mu = dfs(0, base);
  if (!mu) return std::nullopt;
  return SignCompatibleWitness{*mu, cur};
}

std::optional<SignCompatibleWitness> solve_sign_compatible(const LinearRelationSystem& system, const SubspaceBasis& s) {
  auto perp = orthogonal_complement(s.vectors, s.ambient);
  return solve_sign_compatible(system, realizable_sign_patterns(perp, s.ambient));
}

DoaResult doa_search(const KineticSystem& sys, const DoaOptions& opt) {
  const auto& net = sys.net;
  auto violations = doa_applicability(sys);
  if (!violations.empty()) {
    std::string msg = "deficiency-one algorithm does not apply:";
    for (const auto& v : violations) msg += " " + v + ";";
    fail(ErrorKind::InvalidInput, msg);
  }
  const size_t nr = net.reactant_complexes().size();
  if (nr > opt.max_reactant_complexes)
    fail(ErrorKind::SizeLimit, "partition enumeration limited to " + std::to_string(opt.max_reactant_complexes) +
                                   " reactant complexes");
  numeric_t_columns(sys);

  auto s = stoichiometric_subspace(net);
  auto patterns = realizable_sign_patterns(orthogonal_complement(s.vectors, s.ambient), s.ambient);
  std::vector<RVec> hs;
  for (const auto& h : confluence_vectors(net, opt))
    if (orientation_admissible(net, h)) hs.push_back(h);

  unsigned long per = 1;
  for (size_t i = 0; i < nr; ++i) per *= 3;
  std::vector<char> admissible(per);
  DoaResult res;
  res.confluence_vectors = hs.size();
  for (unsigned long k = 0; k < per; ++k) {
    admissible[k] = partition_admissible(net, partition_from_index(k, nr));
    res.partitions_examined += admissible[k];
  }

  auto attempt = [&](size_t idx) -> std::optional<DoaWitness> {
    const RVec& h = hs[idx / per];
    unsigned long k = idx % per;
    if (!admissible[k]) return std::nullopt;
    auto uml = partition_from_index(k, nr);
    auto system = build_linear_system(sys, h, uml);
    auto w = solve_sign_compatible(system, patterns);
    if (!w) return std::nullopt;
    return DoaWitness{h, uml, std::move(system), w->mu, w->pattern};
  };
  auto hit = parallel_find_first(hs.size() * per, [&](size_t idx) { return attempt(idx).has_value(); });
  if (hit) res.witness = attempt(*hit);
  return res;
}

KineticSystem with_rate_constants(const KineticSystem& sys, const std::vector<double>& k) {
  KineticSystem out = sys;
  for (size_t j = 0; j < k.size(); ++j) out.kin.rates[j] = RateConstant{from_double(k[j]), {}};
  return out;
}

Realization realize_witness(const KineticSystem& sys, const RVec& mu) {
  const auto& net = sys.net;
  const size_t m = net.m(), r = net.r();
  if (mu.size() != m) fail(ErrorKind::InvalidInput, "mu has the wrong dimension");
  if (is_zero(mu)) fail(ErrorKind::InvalidInput, "mu must be nonzero");
  RMatrix f = numeric_orders(sys);
  auto s = stoichiometric_subspace(net);
  auto perp = orthogonal_complement(s.vectors, m);

  // c > 0 with c o (exp(mu) - 1) in S.
  RVec d(m);
  for (size_t i = 0; i < m; ++i) d[i] = from_double(std::expm1(mu[i].get_d()));
  LinearProgram lp(m);
  for (const auto& w : perp) {
    RVec row(m);
    for (size_t i = 0; i < m; ++i) row[i] = w[i] * d[i];
    lp.add(row, Rel::Eq, 0);
  }
  for (size_t i = 0; i < m; ++i) lp.at_least(i, 1);
  auto c = find_feasible(lp);
  if (!c) fail(ErrorKind::Unrealizable, "no positive c with c o (exp(mu)-1) in S");

  Realization out;
  out.c = *c;
  out.x1.resize(m);
  out.x2.resize(m);
  for (size_t i = 0; i < m; ++i) {
    out.x1[i] = (*c)[i].get_d();
    out.x2[i] = Rational((*c)[i] * (1 + d[i])).get_d();
  }

  // kappa_j = k_j x*^F_j must satisfy N kappa = 0 and N diag(w) kappa = 0,
  // w_j = (x**/x*)^F_j.
  RMatrix nmat = net.stoichiometric_matrix();
  Eigen::MatrixXd a(2 * m, r);
  for (size_t j = 0; j < r; ++j) {
    double lw = 0;
    for (size_t i = 0; i < m; ++i)
      if (sgn(f(j, i)) != 0) lw += f(j, i).get_d() * std::log1p(d[i].get_d());
    double w = std::exp(lw);
    for (size_t i = 0; i < m; ++i) {
      a(static_cast<long>(i), static_cast<long>(j)) = nmat(i, j).get_d();
      a(static_cast<long>(m + i), static_cast<long>(j)) = nmat(i, j).get_d() * w;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double tol = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  long rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  const long kdim = static_cast<long>(r) - rank;
  if (kdim <= 0) fail(ErrorKind::Unrealizable, "steady-state flux system has only the zero solution");
  Eigen::MatrixXd kernel = svd.matrixV().rightCols(kdim);

  // Entries at rounding level would otherwise steer the LP to extreme vertices.
  const double kmax_entry = kernel.cwiseAbs().maxCoeff();
  LinearProgram klp(static_cast<size_t>(kdim));
  RVec total(static_cast<size_t>(kdim));
  for (size_t j = 0; j < r; ++j) {
    RVec row(static_cast<size_t>(kdim));
    for (long t = 0; t < kdim; ++t) {
      double v = kernel(static_cast<long>(j), t);
      if (std::abs(v) < 1e-12 * kmax_entry) v = 0;
      row[static_cast<size_t>(t)] = from_double(v);
      total[static_cast<size_t>(t)] += row[static_cast<size_t>(t)];
    }
    klp.add(row, Rel::Ge, 1);
  }
  klp.minimize = total;
  auto sol = solve(klp);
  if (sol.status != LpStatus::Optimal) fail(ErrorKind::Unrealizable, "no positive steady-state flux for the witness");
  Eigen::VectorXd t(kdim);
  for (long i = 0; i < kdim; ++i) t(i) = sol.x[static_cast<size_t>(i)].get_d();
  Eigen::VectorXd kappa = kernel * t;
  double kmax = kappa.cwiseAbs().maxCoeff();
  out.rate_constants.resize(r);
  for (size_t j = 0; j < r; ++j) {
    double a1 = 0;
    for (size_t i = 0; i < m; ++i)
      if (sgn(f(j, i)) != 0) a1 += f(j, i).get_d() * std::log(out.x1[i]);
    out.rate_constants[j] = kappa(static_cast<long>(j)) / kmax / std::exp(a1);
  }
  KineticSystem numeric = with_rate_constants(sys, out.rate_constants);
  out.residual1 = steady_state_residual(numeric, out.x1);
  out.residual2 = steady_state_residual(numeric, out.x2);
  if (!(out.residual1 < 1e-9) || !(out.residual2 < 1e-9))
    fail(ErrorKind::Unrealizable, "realized steady states do not meet the residual bound");
  return out;
}

}  // namespace rncdr
