#include "rncdr/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

namespace rncdr {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& pointer, const std::string& message) {
  fail(ErrorKind::Schema, pointer + ": " + message);
}

const json& field(const json& obj, const std::string& key, const std::string& pointer) {
  if (!obj.is_object()) schema(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(pointer + "/" + key, "missing");
  return *it;
}

std::string string_at(const json& v, const std::string& pointer) {
  if (!v.is_string()) schema(pointer, "expected a string");
  return v.get<std::string>();
}

Rational rational_at(const json& v, const std::string& pointer) {
  std::string text;
  if (v.is_string())
    text = v.get<std::string>();
  else if (v.is_number_integer() || v.is_number_unsigned())
    text = v.dump();
  else if (v.is_number_float())
    text = v.dump();
  else
    schema(pointer, "expected a rational");
  try {
    return parse_rational(text);
  } catch (const Error&) {
    schema(pointer, "malformed rational '" + text + "'");
  }
}

std::string escape_key(const std::string& k) {
  std::string out;
  for (char c : k) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

json complex_json(const ReactionNetwork& net, const RVec& c) {
  json out = json::object();
  for (size_t s = 0; s < c.size(); ++s)
    if (sgn(c[s]) != 0) out[net.species()[s]] = to_string(c[s]);
  return out;
}

}  // namespace

std::string document_to_json(const NetworkDocument& doc) {
  const auto& net = doc.system.net;
  const auto& kin = doc.system.kin;
  json out = json::object();
  out["name"] = doc.name;
  out["species"] = net.species();
  json assumptions = json::array();
  for (const auto& [s, a] : kin.assumptions) assumptions.push_back({{"symbol", s}, {"sign", to_string(a)}});
  out["assumptions"] = assumptions;
  json constants = json::object();
  for (const auto& [s, v] : kin.values) constants[s] = to_string(v);
  out["constants"] = constants;
  json reactions = json::array();
  for (size_t j = 0; j < net.r(); ++j) {
    const auto& rx = net.reactions()[j];
    json orders = json::object();
    for (size_t s = 0; s < net.m(); ++s)
      if (!kin.orders[j][s].is_zero()) orders[net.species()[s]] = kin.orders[j][s].str();
    reactions.push_back({{"label", rx.label},
                         {"reactant", complex_json(net, net.complexes()[rx.reactant])},
                         {"product", complex_json(net, net.complexes()[rx.product])},
                         {"rate", {{"constant", kin.rates[j].str()}, {"orders", orders}}}});
  }
  out["reactions"] = reactions;
  return out.dump(2) + "\n";
}

NetworkDocument document_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Schema, std::string("invalid JSON: ") + e.what());
  }
  if (!in.is_object()) schema("", "expected an object");
  NetworkDocument doc;
  doc.name = in.contains("name") ? string_at(in["name"], "/name") : "";

  std::vector<std::string> species;
  const json& sp = field(in, "species", "");
  if (!sp.is_array()) schema("/species", "expected an array");
  for (size_t i = 0; i < sp.size(); ++i) {
    std::string s = string_at(sp[i], "/species/" + std::to_string(i));
    if (std::find(species.begin(), species.end(), s) != species.end())
      schema("/species/" + std::to_string(i), "duplicate species '" + s + "'");
    species.push_back(s);
  }
  auto species_of = [&](const std::string& name, const std::string& pointer) {
    auto it = std::find(species.begin(), species.end(), name);
    if (it == species.end()) schema(pointer, "unknown species '" + name + "'");
    return static_cast<size_t>(it - species.begin());
  };

  if (in.contains("assumptions")) {
    const json& as = in["assumptions"];
    if (!as.is_array()) schema("/assumptions", "expected an array");
    for (size_t i = 0; i < as.size(); ++i) {
      std::string p = "/assumptions/" + std::to_string(i);
      std::string sym = string_at(field(as[i], "symbol", p), p + "/symbol");
      std::string sign = string_at(field(as[i], "sign", p), p + "/sign");
      try {
        doc.system.kin.assumptions[sym] = parse_assumption(sign);
      } catch (const Error&) {
        schema(p + "/sign", "unknown sign '" + sign + "'");
      }
    }
  }
  if (in.contains("constants")) {
    const json& cs = in["constants"];
    if (!cs.is_object()) schema("/constants", "expected an object");
    for (const auto& [k, v] : cs.items()) doc.system.kin.values[k] = rational_at(v, "/constants/" + escape_key(k));
  }

  const json& rs = field(in, "reactions", "");
  if (!rs.is_array()) schema("/reactions", "expected an array");
  std::vector<ReactionSpec> specs;
  for (size_t j = 0; j < rs.size(); ++j) {
    std::string p = "/reactions/" + std::to_string(j);
    const json& rj = rs[j];
    if (!rj.is_object()) schema(p, "expected an object");
    ReactionSpec spec{string_at(field(rj, "label", p), p + "/label"), RVec(species.size()), RVec(species.size())};
    for (const char* side : {"reactant", "product"}) {
      const json& c = field(rj, side, p);
      std::string cp = p + "/" + side;
      if (!c.is_object()) schema(cp, "expected an object");
      for (const auto& [k, v] : c.items()) {
        Rational coeff = rational_at(v, cp + "/" + escape_key(k));
        if (sgn(coeff) <= 0) schema(cp + "/" + escape_key(k), "coefficient must be positive");
        (std::string(side) == "reactant" ? spec.reactant : spec.product)[species_of(k, cp + "/" + escape_key(k))] = coeff;
      }
    }
    const json& rate = field(rj, "rate", p);
    std::string rp = p + "/rate";
    std::string constant = string_at(field(rate, "constant", rp), rp + "/constant");
    RateConstant rc{1, {}};
    size_t start = 0;
    while (start <= constant.size()) {
      size_t star = constant.find('*', start);
      std::string part = constant.substr(start, star == std::string::npos ? std::string::npos : star - start);
      if (part.empty()) schema(rp + "/constant", "malformed rate constant '" + constant + "'");
      if (std::isdigit(static_cast<unsigned char>(part[0])) || part[0] == '.') {
        try {
          rc.coefficient *= parse_rational(part);
        } catch (const Error&) {
          schema(rp + "/constant", "malformed rate constant '" + constant + "'");
        }
      } else {
        rc.symbols.push_back(part);
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    if (sgn(rc.coefficient) <= 0) schema(rp + "/constant", "rate coefficient must be positive");
    std::vector<KineticOrder> row(species.size(), KineticOrder::number(0));
    if (rate.contains("orders")) {
      const json& os = rate["orders"];
      if (!os.is_object()) schema(rp + "/orders", "expected an object");
      for (const auto& [k, v] : os.items()) {
        std::string op = rp + "/orders/" + escape_key(k);
        size_t s = species_of(k, op);
        if (v.is_string() && !v.get<std::string>().empty() &&
            (std::isalpha(static_cast<unsigned char>(v.get<std::string>()[0])) || v.get<std::string>()[0] == '_'))
          row[s] = KineticOrder::named(v.get<std::string>());
        else
          row[s] = KineticOrder::number(rational_at(v, op));
      }
    }
    doc.system.kin.orders.push_back(std::move(row));
    doc.system.kin.rates.push_back(std::move(rc));
    specs.push_back(std::move(spec));
  }
  try {
    doc.system.net = ReactionNetwork::build(species, specs);
    validate(doc.system);
  } catch (const Error& e) {
    schema("/reactions", e.what());
  }
  return doc;
}

}  // namespace rncdr
