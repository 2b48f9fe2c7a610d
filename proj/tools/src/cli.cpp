#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rncdr/acr.hpp"
#include "rncdr/decomposition.hpp"
#include "rncdr/doa.hpp"
#include "rncdr/dsl.hpp"
#include "rncdr/error.hpp"
#include "rncdr/injectivity.hpp"
#include "rncdr/json_io.hpp"
#include "rncdr/models.hpp"
#include "rncdr/report.hpp"
#include "rncdr/sim.hpp"
#include "rncdr/transforms.hpp"

namespace rncdr {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

NetworkDocument load(const std::string& path) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  bool is_json = path.ends_with(".json") || (first != std::string::npos && text[first] == '{');
  return is_json ? document_from_json(text) : parse_document(text);
}

ModelParams parse_bindings(const std::string& text) {
  ModelParams out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(ErrorKind::InvalidInput, "expected name=value, got '" + item + "'");
    out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "malformed number '" + item + "'");
    }
  }
  return out;
}

std::string vec_str(const RVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

std::string vec_str(const std::vector<double>& v) {
  std::ostringstream s;
  s << std::setprecision(12) << "[";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
  s << "]";
  return s.str();
}

std::string species_set(const ReactionNetwork& net, const std::vector<size_t>& idx) {
  std::string s = "{";
  for (size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + net.species()[idx[i]];
  return s + "}";
}

int cmd_analyze(const std::string& file, bool as_json, std::ostream& out) {
  auto report = analyze(load(file));
  out << (as_json ? render_json(report) : render_text(report));
  return 0;
}

int cmd_injectivity(const std::string& file, const std::string& params, std::ostream& out) {
  auto doc = load(file);
  auto sys = rncdr::bind(doc.system, parse_bindings(params));
  auto rep = analyze_injectivity(sys);
  auto det = normalize_leading(rep.det);
  out << "M* size: " << rep.mstar.matrix.size() << "x" << rep.mstar.matrix.size() << ", replaced rows:";
  for (size_t r : rep.mstar.replaced_rows) out << " " << r + 1;
  out << "\n";
  out << "det(M*) has " << det.size() << " term" << (det.size() == 1 ? "" : "s") << ":\n  " << det.str() << "\n";
  out << "Weight groups:\n";
  for (const auto& g : rep.verdict.terms)
    out << "  " << std::left << std::setw(24) << g.weights.str() << std::setw(6) << sign_name(g.sign)
        << g.coefficient.str() << "\n";
  out << "Verdict: " << to_string(rep.verdict.status) << "\n";
  if (!rep.verdict.offending.empty()) {
    out << "Offending groups:\n";
    for (const auto& g : rep.verdict.offending) out << "  " << g.weights.str() << " (" << sign_name(g.sign) << ")\n";
  }
  return rep.verdict.status == InjectivityStatus::Injective ? 0 : 1;
}

int cmd_doa(const std::string& file, const std::string& orders, bool realize, std::ostream& out) {
  auto doc = load(file);
  auto sys = rncdr::bind(doc.system, parse_bindings(orders));
  auto res = doa_search(sys);
  const auto& net = sys.net;
  out << "Confluence vectors: " << res.confluence_vectors << "\n";
  out << "Admissible partitions examined: " << res.partitions_examined << "\n";
  if (!res.witness) {
    out << "No witness: the system is monostationary for all rate constants.\n";
    return 1;
  }
  const auto& w = *res.witness;
  out << "Witness found: the system admits multiple positive steady states.\n";
  out << "h = " << vec_str(w.h) << "\n";
  out << "Partition:";
  auto reactants = net.reactant_complexes();
  for (size_t i = 0; i < reactants.size(); ++i)
    out << " " << net.complex_label(reactants[i]) << ":" << part_name(w.uml[i]);
  out << "\nRelations:\n";
  for (const auto& r : w.system.relations)
    out << "  " << vec_str(r.coeffs) << (r.strict ? " . mu > 0" : " . mu = 0") << "  [" << to_string(r.provenance)
        << (r.note.empty() ? "" : ": " + r.note) << "]\n";
  out << "mu = " << vec_str(w.mu) << "\n";
  if (realize) {
    auto rz = realize_witness(sys, w.mu);
    out << "Rate constants:\n";
    for (size_t j = 0; j < net.r(); ++j)
      out << "  " << std::left << std::setw(8) << net.reactions()[j].label << std::setprecision(12)
          << rz.rate_constants[j] << "\n";
    out << "x*  = " << vec_str(rz.x1) << "  residual " << rz.residual1 << "\n";
    out << "x** = " << vec_str(rz.x2) << "  residual " << rz.residual2 << "\n";
  }
  return 0;
}

int cmd_acr(const std::string& file, const std::string& params, size_t sample, std::uint64_t seed,
            std::ostream& out) {
  auto doc = load(file);
  auto sys = rncdr::bind(doc.system, parse_bindings(params));
  const auto& net = sys.net;
  if (net.reaction_index("R1") && net.reaction_index("R2")) {
    try {
      auto c = classify(sys);
      out << "Class: " << to_string(c.kind);
      out << " (R = " << (c.r ? to_string(*c.r) : "undefined") << ", Q = " << (c.q ? to_string(*c.q) : "undefined")
          << ")\n";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonNumeric) throw;
      out << "Class: needs numeric orders for R1 and R2\n";
    }
  }
  try {
    auto h = acr_hyperplane(sys);
    out << "Species hyperplane criterion (assumes PLP): ACR species " << species_set(net, h.species) << "\n";
    out << "  orthogonal complement of the kinetic flux subspace:";
    if (h.flux_perp.empty()) out << " {0}";
    for (const auto& v : h.flux_perp) out << " " << vec_str(v);
    out << "\n";
    if (h.flux_perp.empty())
      out << "  note: the kinetic flux subspace is the whole space, so every species passes; this only "
             "implies ACR if the system is PLP\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCycleTerminal && e.kind() != ErrorKind::NonNumeric) throw;
    out << "Species hyperplane criterion: not applicable (" << e.what() << ")\n";
  }
  if (sample > 0) {
    SamplingOptions opt;
    opt.trials = sample;
    opt.seed = seed;
    auto s = acr_sampling(sys, opt);
    out << "Sampling (" << s.equilibria.size() << " equilibria from " << sample << " trials, seed " << s.seed
        << "): ACR species " << species_set(net, s.species) << "\n";
    for (size_t i = 0; i < net.m(); ++i)
      out << "  " << std::left << std::setw(6) << net.species()[i] << " relative spread " << std::setprecision(3)
          << s.spread[i] << "\n";
  }
  return 0;
}

int cmd_fid(const std::string& file, std::ostream& out) {
  auto doc = load(file);
  out << render_fid(doc.system.net, finest_independent_decomposition(doc.system.net));
  return 0;
}

int cmd_simulate(const std::string& file, const std::string& params, const std::string& x0s, double tmax,
                 const std::string& csv, std::ostream& out) {
  auto doc = load(file);
  auto sys = rncdr::bind(doc.system, parse_bindings(params));
  auto x0 = parse_doubles(x0s);
  IntegrateOptions opt;
  opt.record = !csv.empty();
  auto tr = integrate(sys, x0, tmax, opt);
  out << "t = " << tr.t.back() << " after " << tr.accepted << " accepted and " << tr.rejected << " rejected steps\n";
  out << "x = " << vec_str(tr.x.back()) << "\n";
  out << "steady-state residual " << steady_state_residual(sys, tr.x.back()) << "\n";
  for (size_t k = 0; k < tr.conservation_laws.size(); ++k) {
    double a = tr.totals.front()[k], b = tr.totals.back()[k];
    out << "total " << k + 1 << " " << vec_str(tr.conservation_laws[k]) << ": " << a << " -> " << b
        << " (relative drift " << std::abs(b - a) / std::max(std::abs(a), 1e-300) << ")\n";
  }
  if (!csv.empty()) {
    write_file(csv, trajectory_csv(sys, tr));
    out << "wrote " << csv << "\n";
  }
  return 0;
}

int cmd_model(const std::string& name, const std::string& emit, const std::string& params, bool as_json,
              std::ostream& out) {
  NetworkDocument doc{name, build_model(name, parse_bindings(params))};
  std::string text = as_json ? document_to_json(doc) : serialize_document(doc);
  if (emit.empty()) {
    out << text;
  } else {
    write_file(emit, text);
    out << model_card(name) << "wrote " << emit << "\n";
  }
  return 0;
}

int cmd_transform(const std::string& file, const std::string& params, const std::string& emit, std::ostream& out) {
  auto doc = load(file);
  auto sys = rncdr::bind(doc.system, parse_bindings(params));
  NetworkDocument wr{doc.name.empty() ? "wr" : doc.name + "_wr", beccs_wr_transform(sys)};
  auto nn = network_numbers(wr.system.net);
  std::string text = serialize_document(wr);
  if (emit.empty())
    out << text;
  else
    write_file(emit, text);
  out << "n = " << nn.n << ", l = " << nn.l << ", s = " << nn.s << ", weakly reversible: "
      << (structural_flags(wr.system.net).weakly_reversible ? "yes" : "no") << "\n";
  try {
    out << "kinetic deficiency = " << kinetic_deficiency(wr.system) << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonNumeric) throw;
    out << "kinetic deficiency needs numeric kinetic orders\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reaction network analysis for carbon dioxide removal models", "rncdr"};
  app.require_subcommand(1);

  std::string file, orders, params, x0, csv, emit, name;
  bool as_json = false, realize = false, beccs_wr = false;
  size_t sample = 0;
  std::uint64_t seed = 1;
  double tmax = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Network numbers and structural properties");
  analyze_cmd->add_option("file", file, "Network file (.crn or .json)")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit the full report as JSON");

  auto* inj = app.add_subcommand("injectivity", "Symbolic determinant and injectivity verdict");
  inj->add_option("file", file)->required();
  inj->add_option("--params", params, "Bindings name=value,...");

  auto* doa = app.add_subcommand("doa", "Deficiency-one search for multiple steady states");
  doa->add_option("file", file)->required();
  doa->add_option("--orders", orders, "Bindings p1=...,p2=...,q1=...,q2=...");
  doa->add_flag("--realize", realize, "Construct rate constants and two steady states");

  auto* acr = app.add_subcommand("acr", "Absolute concentration robustness");
  acr->add_option("file", file)->required();
  acr->add_option("--sample", sample, "Number of sampled stoichiometric classes");
  acr->add_option("--seed", seed, "Sampling seed");
  acr->add_option("--orders,--params", params, "Bindings name=value,...");

  auto* fid = app.add_subcommand("fid", "Finest independent decomposition");
  fid->add_option("file", file)->required();

  auto* sim = app.add_subcommand("simulate", "Integrate the ODE system");
  sim->add_option("file", file)->required();
  sim->add_option("--x0", x0, "Initial state v1,v2,...")->required();
  sim->add_option("--tmax", tmax, "End time")->required();
  sim->add_option("--csv", csv, "Write the trajectory as CSV");
  sim->add_option("--params", params, "Bindings name=value,...");

  auto* model = app.add_subcommand("model", "Emit a built-in model");
  model->add_option("name", name, "anderies_raw, anderies, beccs, ar or dac")->required();
  model->add_option("--emit", emit, "Output file");
  model->add_option("--params", params, "Bindings name=value,...");
  model->add_flag("--json", as_json, "Emit JSON instead of the reaction language");

  auto* tr = app.add_subcommand("transform", "Network transformations");
  tr->add_option("file", file)->required();
  tr->add_flag("--beccs-wr", beccs_wr, "Weakly reversible transform of the BECCS network")->required();
  tr->add_option("--params", params, "Bindings name=value,...");
  tr->add_option("--emit", emit, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  try {
    int code = 0;
    if (*analyze_cmd) code = cmd_analyze(file, as_json, buffer);
    else if (*inj) code = cmd_injectivity(file, params, buffer);
    else if (*doa) code = cmd_doa(file, orders, realize, buffer);
    else if (*acr) code = cmd_acr(file, params, sample, seed, buffer);
    else if (*fid) code = cmd_fid(file, buffer);
    else if (*sim) code = cmd_simulate(file, params, x0, tmax, csv, buffer);
    else if (*model) code = cmd_model(name, emit, params, as_json, buffer);
    else if (*tr) code = cmd_transform(file, params, emit, buffer);
    out << buffer.str();
    return code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return 2;
  }
}

}  // namespace rncdr
