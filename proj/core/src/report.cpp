#include "rncdr/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "rncdr/error.hpp"

namespace rncdr {

using nlohmann::json;

namespace {

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

json vec_json(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

std::vector<std::string> fixture_notes(const std::string& name, const NetworkNumbers& numbers) {
  std::vector<std::string> notes;
  if (name == "beccs" && numbers.sl != 1)
    notes.push_back("sl: the reference BECCS network-number table lists 1 strong linkage class; the complex graph has " +
                    std::to_string(numbers.sl) + " (two reversible pairs and three singletons).");
  return notes;
}

AnalysisReport analyze(const NetworkDocument& doc) {
  const auto& net = doc.system.net;
  AnalysisReport r;
  r.name = doc.name;
  r.species = net.species();
  r.numbers = network_numbers(net);
  r.flags = structural_flags(net);
  try {
    r.concordance = concordance(net);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimit) throw;
  }
  r.conservative = is_conservative(net);
  r.positively_dependent = is_positively_dependent(net);
  r.independent_linkage_classes = linkage_class_independence(net);
  r.regular = is_regular(net);
  r.fid = finest_independent_decomposition(net);
  r.notes = fixture_notes(doc.name, r.numbers);
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    out << std::left << std::setw(34) << a << std::setw(10) << b << c << "\n";
  };
  out << "Network: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n\n";
  row("Network number", "Symbol", "Value");
  const auto& n = r.numbers;
  std::string sl = std::to_string(n.sl);
  if (!r.notes.empty() && r.name == "beccs") sl += " [1]";
  row("Species", "m", std::to_string(n.m));
  row("Complex", "n", std::to_string(n.n));
  row("Reactant complexes", "n_r", std::to_string(n.n_r));
  row("Reactions", "r", std::to_string(n.r));
  row("Irreversible reactions", "r_irr", std::to_string(n.r_irr));
  row("Linkage classes", "l", std::to_string(n.l));
  row("Strong linkage classes", "sl", sl);
  row("Terminal strong linkage classes", "t", std::to_string(n.t));
  row("Rank", "s", std::to_string(n.s));
  row("Reactant rank", "q", std::to_string(n.q));
  row("Deficiency", "delta", std::to_string(n.delta));
  row("Reactant deficiency", "delta_rho", std::to_string(n.delta_rho));
  out << "\n";
  auto prop = [&](const std::string& a, const std::string& b) { out << std::left << std::setw(34) << a << b << "\n"; };
  prop("Property", "Report");
  prop("Concordance", !r.concordance ? "Not computed (too many species)"
                                      : (r.concordance->concordant ? "Concordant" : "Discordant"));
  prop("Conservative", yes_no(r.conservative.holds));
  prop("Independent linkage classes", yes_no(r.independent_linkage_classes));
  prop("Positive dependent", r.positively_dependent.holds ? "Has positively dependent reaction vectors"
                                                          : "No positively dependent reaction vectors");
  prop("Regular", r.regular.regular ? "Yes" : "No (" + r.regular.violation + ")");
  prop("Weakly reversible", yes_no(r.flags.weakly_reversible));
  prop("t-minimal", yes_no(r.flags.t_minimal));
  prop("Cycle terminal", yes_no(r.flags.cycle_terminal));
  prop("Point terminal", yes_no(r.flags.point_terminal));
  prop("Independent decomposition blocks", std::to_string(r.fid.blocks.size()));
  if (!r.notes.empty()) {
    out << "\nNotes\n";
    for (size_t i = 0; i < r.notes.size(); ++i) out << "[" << i + 1 << "] " << r.notes[i] << "\n";
  }
  return out.str();
}

std::string render_json(const AnalysisReport& r) {
  json out;
  out["name"] = r.name;
  out["species"] = r.species;
  const auto& n = r.numbers;
  out["numbers"] = {{"m", n.m},   {"n", n.n}, {"n_r", n.n_r}, {"r", n.r},         {"r_irr", n.r_irr},
                    {"l", n.l},   {"sl", n.sl}, {"t", n.t},   {"s", n.s},         {"q", n.q},
                    {"delta", n.delta}, {"delta_rho", n.delta_rho}};
  out["flags"] = {{"weakly_reversible", r.flags.weakly_reversible},
                  {"t_minimal", r.flags.t_minimal},
                  {"cycle_terminal", r.flags.cycle_terminal},
                  {"point_terminal", r.flags.point_terminal}};
  if (r.concordance)
    out["concordance"] = {{"concordant", r.concordance->concordant},
                          {"alpha", vec_json(r.concordance->alpha)},
                          {"sigma", vec_json(r.concordance->sigma)}};
  else
    out["concordance"] = nullptr;
  out["conservative"] = {{"holds", r.conservative.holds}, {"witness", vec_json(r.conservative.witness)}};
  out["positively_dependent"] = {{"holds", r.positively_dependent.holds},
                                 {"witness", vec_json(r.positively_dependent.witness)}};
  out["independent_linkage_classes"] = r.independent_linkage_classes;
  out["regular"] = {{"regular", r.regular.regular}, {"violation", r.regular.violation}};
  json blocks = json::array();
  for (const auto& b : r.fid.blocks) blocks.push_back(b);
  out["fid"] = {{"blocks", blocks}, {"independent", r.fid.independent}};
  out["notes"] = r.notes;
  return out.dump(2) + "\n";
}

std::string render_fid(const ReactionNetwork& net, const Decomposition& d) {
  std::ostringstream out;
  out << "Finest independent decomposition: " << d.blocks.size() << " block" << (d.blocks.size() == 1 ? "" : "s")
      << "\n";
  for (size_t b = 0; b < d.blocks.size(); ++b) {
    out << "P" << b + 1 << " (rank " << d.subspaces[b].dim() << "):\n";
    for (size_t j : d.blocks[b]) out << "  " << net.reaction_label(j) << "\n";
  }
  return out.str();
}

}  // namespace rncdr
