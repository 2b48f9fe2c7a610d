#include "rncdr/network.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rncdr/error.hpp"
#include "rncdr/parallel.hpp"

namespace rncdr {

ReactionNetwork ReactionNetwork::build(std::vector<std::string> species, const std::vector<ReactionSpec>& reactions) {
  ReactionNetwork net;
  std::set<std::string> seen(species.begin(), species.end());
  if (seen.size() != species.size()) fail(ErrorKind::InvalidInput, "duplicate species");
  net.species_ = std::move(species);
  std::set<std::string> labels;
  auto intern = [&](const RVec& c) {
    if (c.size() != net.m()) fail(ErrorKind::InvalidInput, "complex width mismatch");
    for (const auto& x : c)
      if (sgn(x) < 0) fail(ErrorKind::InvalidInput, "negative stoichiometric coefficient");
    if (auto idx = net.complex_index(c)) return *idx;
    net.complexes_.push_back(c);
    return net.complexes_.size() - 1;
  };
  for (const auto& spec : reactions) {
    if (!labels.insert(spec.label).second) fail(ErrorKind::InvalidInput, "duplicate reaction label '" + spec.label + "'");
    size_t a = intern(spec.reactant), b = intern(spec.product);
    if (a == b) fail(ErrorKind::InvalidInput, "reaction '" + spec.label + "' has identical reactant and product");
    net.reactions_.push_back({a, b, spec.label});
  }
  return net;
}

std::optional<size_t> ReactionNetwork::species_index(const std::string& name) const {
  auto it = std::find(species_.begin(), species_.end(), name);
  if (it == species_.end()) return std::nullopt;
  return static_cast<size_t>(it - species_.begin());
}

std::optional<size_t> ReactionNetwork::complex_index(const RVec& c) const {
  for (size_t i = 0; i < complexes_.size(); ++i)
    if (complexes_[i] == c) return i;
  return std::nullopt;
}

std::optional<size_t> ReactionNetwork::reaction_index(const std::string& label) const {
  for (size_t j = 0; j < reactions_.size(); ++j)
    if (reactions_[j].label == label) return j;
  return std::nullopt;
}

RVec ReactionNetwork::reaction_vector(size_t j) const {
  const auto& rx = reactions_[j];
  RVec v(m());
  for (size_t s = 0; s < m(); ++s) v[s] = complexes_[rx.product][s] - complexes_[rx.reactant][s];
  return v;
}

RMatrix ReactionNetwork::stoichiometric_matrix() const {
  RMatrix nmat(m(), r());
  for (size_t j = 0; j < r(); ++j) {
    RVec v = reaction_vector(j);
    for (size_t s = 0; s < m(); ++s) nmat(s, j) = v[s];
  }
  return nmat;
}

RMatrix ReactionNetwork::complex_matrix() const { return RMatrix::from_columns(complexes_, m()); }

std::vector<size_t> ReactionNetwork::reactant_complexes() const {
  std::vector<bool> is(n(), false);
  for (const auto& rx : reactions_) is[rx.reactant] = true;
  std::vector<size_t> out;
  for (size_t c = 0; c < n(); ++c)
    if (is[c]) out.push_back(c);
  return out;
}

Digraph ReactionNetwork::graph() const {
  Digraph g;
  g.nodes = n();
  for (const auto& rx : reactions_) g.edges.push_back({rx.reactant, rx.product});
  return g;
}

std::vector<ReactionSpec> ReactionNetwork::specs() const {
  std::vector<ReactionSpec> out;
  for (const auto& rx : reactions_) out.push_back({rx.label, complexes_[rx.reactant], complexes_[rx.product]});
  return out;
}

std::string ReactionNetwork::complex_label(const RVec& c) const {
  std::string out;
  for (size_t s = 0; s < c.size(); ++s) {
    if (sgn(c[s]) == 0) continue;
    if (!out.empty()) out += "+";
    if (c[s] != 1) out += c[s].get_den() == 1 ? to_string(c[s]) : "(" + to_string(c[s]) + ")";
    out += species_[s];
  }
  return out.empty() ? "0" : out;
}

std::string ReactionNetwork::complex_label(size_t c) const { return complex_label(complexes_[c]); }

std::string ReactionNetwork::reaction_label(size_t j) const {
  const auto& rx = reactions_[j];
  return rx.label + ": " + complex_label(rx.reactant) + " -> " + complex_label(rx.product);
}

GraphStructure graph_structure(const ReactionNetwork& net) {
  Digraph g = net.graph();
  GraphStructure gs;
  gs.linkage = weak_components(g);
  gs.strong = strong_components(g);
  gs.terminal = terminal_components(g, gs.strong);
  return gs;
}

NetworkNumbers network_numbers(const ReactionNetwork& net) {
  NetworkNumbers nn;
  nn.m = net.m();
  nn.n = net.n();
  nn.r = net.r();
  auto reactants = net.reactant_complexes();
  nn.n_r = reactants.size();
  for (const auto& rx : net.reactions()) {
    bool reversed = std::any_of(net.reactions().begin(), net.reactions().end(), [&](const Reaction& o) {
      return o.reactant == rx.product && o.product == rx.reactant;
    });
    if (!reversed) ++nn.r_irr;
  }
  auto gs = graph_structure(net);
  nn.l = component_count(gs.linkage);
  nn.sl = component_count(gs.strong);
  nn.t = static_cast<size_t>(std::count(gs.terminal.begin(), gs.terminal.end(), true));
  nn.s = rank(net.stoichiometric_matrix());
  std::vector<RVec> rc;
  for (size_t c : reactants) rc.push_back(net.complexes()[c]);
  nn.q = rank(rc, net.m());
  nn.delta = static_cast<long>(nn.n) - static_cast<long>(nn.l) - static_cast<long>(nn.s);
  nn.delta_rho = static_cast<long>(nn.n_r) - static_cast<long>(nn.q);
  return nn;
}

StructuralFlags structural_flags(const ReactionNetwork& net) {
  auto nn = network_numbers(net);
  StructuralFlags f;
  f.weakly_reversible = nn.sl == nn.l;
  f.t_minimal = nn.t == nn.l;
  f.cycle_terminal = nn.n == nn.n_r;
  f.point_terminal = nn.t == nn.n - nn.n_r;
  return f;
}

SubspaceBasis stoichiometric_subspace(const ReactionNetwork& net) {
  std::vector<RVec> vecs;
  for (size_t j = 0; j < net.r(); ++j) vecs.push_back(net.reaction_vector(j));
  return {net.m(), independent_subset(vecs, net.m())};
}

Verdict is_conservative(const ReactionNetwork& net) {
  LinearProgram lp(net.m());
  for (size_t j = 0; j < net.r(); ++j) lp.add(net.reaction_vector(j), Rel::Eq, 0);
  for (size_t s = 0; s < net.m(); ++s) lp.at_least(s, 1);
  Verdict v;
  if (auto x = find_feasible(lp)) {
    v.holds = true;
    v.witness = primitive(*x);
  }
  return v;
}

Verdict is_positively_dependent(const ReactionNetwork& net) {
  RMatrix nmat = net.stoichiometric_matrix();
  LinearProgram lp(net.r());
  for (size_t s = 0; s < net.m(); ++s) lp.add(nmat.row(s), Rel::Eq, 0);
  for (size_t j = 0; j < net.r(); ++j) lp.at_least(j, 1);
  Verdict v;
  if (auto k = find_feasible(lp)) {
    v.holds = true;
    v.witness = *k;
  }
  return v;
}

ConcordanceResult concordance(const ReactionNetwork& net, size_t max_species) {
  if (net.m() > max_species)
    fail(ErrorKind::SizeLimit, "concordance enumeration limited to " + std::to_string(max_species) + " species");
  auto perp = orthogonal_complement(stoichiometric_subspace(net).vectors, net.m());
  auto patterns = realizable_sign_patterns(perp, net.m());
  RMatrix nmat = net.stoichiometric_matrix();

  auto alpha_for = [&](const SignPattern& sigma) -> std::optional<RVec> {
    LinearProgram lp(net.r());
    for (size_t s = 0; s < net.m(); ++s) lp.add(nmat.row(s), Rel::Eq, 0);
    for (size_t j = 0; j < net.r(); ++j) {
      const RVec& y = net.complexes()[net.reactions()[j].reactant];
      bool pos = false, neg = false;
      for (size_t s = 0; s < net.m(); ++s) {
        if (sgn(y[s]) == 0) continue;
        pos = pos || sigma[s] > 0;
        neg = neg || sigma[s] < 0;
      }
      if (pos && neg) continue;
      if (pos) lp.at_least(j, 1);
      else if (neg) lp.at_most(j, -1);
      else lp.fix(j, 0);
    }
    return find_feasible(lp);
  };

  auto hit = parallel_find_first(patterns.size(), [&](size_t i) { return alpha_for(patterns[i]).has_value(); });
  ConcordanceResult res;
  if (!hit) return res;
  res.concordant = false;
  res.alpha = *alpha_for(patterns[*hit]);
  res.sigma = *realize_sign_pattern(perp, patterns[*hit]);
  return res;
}

std::vector<CutPair> cut_pairs(const ReactionNetwork& net) {
  Digraph g = net.graph();
  std::vector<CutPair> out;
  for (auto [a, b] : bridges(g)) {
    auto comp = weak_components_without(g, a, b);
    CutPair cp{a, b, {}, {}};
    for (size_t c = 0; c < net.n(); ++c) {
      if (comp[c] == comp[a]) cp.side_a.push_back(c);
      if (comp[c] == comp[b]) cp.side_b.push_back(c);
    }
    out.push_back(std::move(cp));
  }
  return out;
}

Regularity is_regular(const ReactionNetwork& net) {
  if (!is_positively_dependent(net).holds) return {false, "reaction vectors are not positively dependent"};
  auto nn = network_numbers(net);
  if (nn.t != nn.l) return {false, "t != l"};
  auto gs = graph_structure(net);
  auto cps = cut_pairs(net);
  std::set<std::pair<size_t, size_t>> cut;
  for (const auto& cp : cps) cut.insert({cp.a, cp.b});
  for (const auto& rx : net.reactions()) {
    if (gs.strong[rx.reactant] == gs.strong[rx.product]) continue;
    std::pair<size_t, size_t> key{std::min(rx.reactant, rx.product), std::max(rx.reactant, rx.product)};
    if (!cut.count(key))
      return {false, "edge " + net.complex_label(key.first) + " - " + net.complex_label(key.second) +
                         " joins strong classes but is not a cut pair"};
  }
  return {true, ""};
}

bool linkage_class_independence(const ReactionNetwork& net) {
  auto gs = graph_structure(net);
  size_t l = component_count(gs.linkage);
  std::vector<std::vector<RVec>> per(l);
  for (size_t j = 0; j < net.r(); ++j) per[gs.linkage[net.reactions()[j].reactant]].push_back(net.reaction_vector(j));
  size_t sum = 0;
  for (const auto& v : per) sum += rank(v, net.m());
  return sum == rank(net.stoichiometric_matrix());
}

}  // namespace rncdr
