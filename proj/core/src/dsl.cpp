#include "rncdr/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace rncdr {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
  std::string out = "expected ";
  if (expected.size() > 1) out += "one of ";
  for (size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out + "; found " + found;
}

enum class Tok { Ident, Number, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  size_t column = 0;  // 1-based
};

std::string show(const Token& t) {
  if (t.kind == Tok::End) return "end of line";
  return "'" + t.text + "'";
}

class Line {
 public:
  Line(std::string text, size_t number) : text_(std::move(text)), number_(number) { lex(); }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool accept(const std::string& punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::vector<std::string>& expected) const {
    throw ParseError(number_, peek().column, expected, describe(expected, show(peek())));
  }
  [[noreturn]] void error_at(size_t column, const std::string& message) const {
    throw ParseError(number_, column, {}, message);
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) error({"'" + punct + "'"});
  }
  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) error({what});
    return next();
  }
  void expect_end() {
    if (!at_end()) error({"end of line"});
  }
  // Raw text from the current token to the end of the line.
  std::string rest() const { return text_.substr(peek().column - 1); }
  size_t number() const { return number_; }

 private:
  void lex() {
    size_t i = 0;
    const size_t n = text_.size();
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < n) {
      char c = text_[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Token t;
      t.column = i + 1;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < n && is_ident(text_[j])) ++j;
        t.kind = Tok::Ident;
        t.text = text_.substr(i, j - i);
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text_[i + 1])))) {
        size_t j = i;
        auto digits = [&] {
          while (j < n && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        };
        digits();
        if (j < n && text_[j] == '.') {
          ++j;
          digits();
        }
        if (j + 1 < n && (text_[j] == 'e' || text_[j] == 'E') &&
            (std::isdigit(static_cast<unsigned char>(text_[j + 1])) ||
             ((text_[j + 1] == '-' || text_[j + 1] == '+') && j + 2 < n &&
              std::isdigit(static_cast<unsigned char>(text_[j + 2]))))) {
          j += 2;
          digits();
        } else if (j + 1 < n && text_[j] == '/' && std::isdigit(static_cast<unsigned char>(text_[j + 1]))) {
          ++j;
          digits();
        }
        t.kind = Tok::Number;
        t.text = text_.substr(i, j - i);
        i = j;
      } else if (c == '"') {
        size_t j = text_.find('"', i + 1);
        if (j == std::string::npos) throw ParseError(number_, i + 1, {"'\"'"}, "unterminated string");
        t.kind = Tok::String;
        t.text = text_.substr(i + 1, j - i - 1);
        i = j + 1;
      } else {
        static const char* two[] = {"->", ">=", "<="};
        t.kind = Tok::Punct;
        t.text = std::string(1, c);
        for (const char* p : two)
          if (text_.compare(i, 2, p) == 0) t.text = p;
        i += t.text.size();
      }
      toks_.push_back(std::move(t));
    }
    Token end;
    end.column = text_.size() + 1;
    if (auto hash = text_.find('#'); hash != std::string::npos) end.column = hash + 1;
    toks_.push_back(end);
  }

  std::string text_;
  size_t number_;
  std::vector<Token> toks_;
  size_t pos_ = 0;
};

Rational number_value(Line& line, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const Error&) {
    line.error_at(t.column, "malformed number '" + t.text + "'");
  }
}

struct RawFactor {
  std::string name;
  std::optional<KineticOrder> order;  // set when written with ^
  size_t column = 0;
};

struct RawReaction {
  size_t line = 0, column = 0;
  std::string label;
  std::vector<std::pair<std::string, Rational>> reactant, product;
  Rational coefficient = 1;
  std::vector<RawFactor> factors;
};

std::vector<std::pair<std::string, Rational>> parse_complex(Line& line) {
  std::vector<std::pair<std::string, Rational>> terms;
  if (line.peek().kind == Tok::Number && line.peek().text == "0") {
    line.next();
    return terms;
  }
  do {
    Rational coeff = 1;
    if (line.peek().kind == Tok::Number) {
      Token t = line.next();
      coeff = number_value(line, t);
      if (sgn(coeff) <= 0) line.error_at(t.column, "stoichiometric coefficient must be positive");
    }
    Token s = line.expect(Tok::Ident, "species name");
    terms.emplace_back(s.text, coeff);
  } while (line.accept("+"));
  return terms;
}

KineticOrder parse_order(Line& line) {
  bool neg = false;
  if (line.accept("-"))
    neg = true;
  else
    line.accept("+");
  if (line.peek().kind == Tok::Number) {
    Token t = line.next();
    Rational v = number_value(line, t);
    return KineticOrder::number(neg ? Rational(-v) : v);
  }
  if (!neg && line.peek().kind == Tok::Ident) return KineticOrder::named(line.next().text);
  line.error({"number", neg ? "number" : "symbol"});
}

RawReaction parse_reaction(Line& line, size_t column) {
  RawReaction rx;
  rx.line = line.number();
  rx.column = column;
  rx.label = line.expect(Tok::Ident, "reaction label").text;
  line.expect(":");
  rx.reactant = parse_complex(line);
  line.expect("->");
  rx.product = parse_complex(line);
  if (!(line.peek().kind == Tok::Ident && line.peek().text == "rate")) line.error({"'+'", "'rate'"});
  line.next();
  do {
    Token t = line.peek();
    if (t.kind == Tok::Number) {
      line.next();
      rx.coefficient *= number_value(line, t);
    } else if (t.kind == Tok::Ident) {
      line.next();
      RawFactor f{t.text, std::nullopt, t.column};
      if (line.accept("^")) f.order = parse_order(line);
      rx.factors.push_back(std::move(f));
    } else {
      line.error({"number", "symbol", "species"});
    }
  } while (line.accept("*"));
  line.expect_end();
  if (sgn(rx.coefficient) <= 0) line.error_at(column, "rate coefficient must be positive");
  return rx;
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

ParseError::ParseError(size_t line, size_t column, std::vector<std::string> expected, const std::string& message)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

NetworkDocument parse_document(const std::string& text) {
  NetworkDocument doc;
  std::vector<std::string> species;
  std::set<std::string> species_set;
  std::optional<size_t> species_line;
  bool have_name = false;
  std::vector<RawReaction> reactions;
  std::map<std::string, Assumption> assumptions;
  std::map<std::string, Rational> constants;

  std::istringstream in(text);
  std::string raw;
  size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line line(raw, number);
    if (line.at_end()) continue;
    Token kw = line.peek();
    if (kw.kind != Tok::Ident) line.error({"'network'", "'species'", "'assume'", "'const'", "'reaction'"});
    line.next();
    if (kw.text == "network") {
      if (have_name) line.error_at(kw.column, "duplicate network statement");
      doc.name = line.expect(Tok::String, "quoted network name").text;
      have_name = true;
      line.expect_end();
    } else if (kw.text == "species") {
      if (species_line) line.error_at(kw.column, "duplicate species statement");
      species_line = number;
      while (!line.at_end()) {
        Token s = line.expect(Tok::Ident, "species name");
        if (!species_set.insert(s.text).second) line.error_at(s.column, "duplicate species '" + s.text + "'");
        species.push_back(s.text);
      }
    } else if (kw.text == "assume") {
      Token s = line.expect(Tok::Ident, "symbol");
      size_t col = line.peek().column;
      std::string op = line.rest();
      op.erase(std::remove_if(op.begin(), op.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }), op.end());
      if (auto hash = op.find('#'); hash != std::string::npos) op.resize(hash);
      try {
        if (!assumptions.emplace(s.text, parse_assumption(op)).second)
          line.error_at(s.column, "duplicate assumption for '" + s.text + "'");
      } catch (const ParseError&) {
        throw;
      } catch (const Error&) {
        throw ParseError(number, col, {"'<0'", "'=0'", "'>0'", "'>=0'", "'>1'"},
                         describe({"'<0'", "'=0'", "'>0'", "'>=0'", "'>1'"}, op.empty() ? "end of line" : "'" + op + "'"));
      }
    } else if (kw.text == "const") {
      Token s = line.expect(Tok::Ident, "symbol");
      line.expect("=");
      bool neg = line.accept("-");
      Token v = line.expect(Tok::Number, "number");
      Rational value = number_value(line, v);
      if (neg) value = -value;
      line.expect_end();
      if (!constants.emplace(s.text, value).second) line.error_at(s.column, "duplicate constant '" + s.text + "'");
    } else if (kw.text == "reaction") {
      reactions.push_back(parse_reaction(line, kw.column));
    } else {
      throw ParseError(number, kw.column, {"'network'", "'species'", "'assume'", "'const'", "'reaction'"},
                       describe({"'network'", "'species'", "'assume'", "'const'", "'reaction'"}, show(kw)));
    }
  }

  auto declare = [&](const std::string& s) {
    if (species_set.insert(s).second) species.push_back(s);
  };
  for (const auto& rx : reactions) {
    for (const auto& [s, c] : rx.reactant) declare(s);
    for (const auto& [s, c] : rx.product) declare(s);
  }
  for (const auto& rx : reactions)
    for (const auto& f : rx.factors)
      if (f.order) declare(f.name);

  std::vector<ReactionSpec> specs;
  std::set<std::string> labels;
  for (const auto& rx : reactions) {
    if (!labels.insert(rx.label).second)
      throw ParseError(rx.line, rx.column, {}, "duplicate reaction label '" + rx.label + "'");
    ReactionSpec spec{rx.label, RVec(species.size()), RVec(species.size())};
    auto index = [&](const std::string& s) {
      return static_cast<size_t>(std::find(species.begin(), species.end(), s) - species.begin());
    };
    for (const auto& [s, c] : rx.reactant) spec.reactant[index(s)] += c;
    for (const auto& [s, c] : rx.product) spec.product[index(s)] += c;
    if (spec.reactant == spec.product)
      throw ParseError(rx.line, rx.column, {}, "reaction '" + rx.label + "' has identical reactant and product");

    std::vector<KineticOrder> row(species.size(), KineticOrder::number(0));
    std::vector<bool> seen(species.size(), false);
    RateConstant rate{rx.coefficient, {}};
    for (const auto& f : rx.factors) {
      if (!species_set.count(f.name)) {
        rate.symbols.push_back(f.name);
        continue;
      }
      size_t s = index(f.name);
      if (seen[s]) throw ParseError(rx.line, f.column, {}, "species '" + f.name + "' appears twice in the rate");
      seen[s] = true;
      row[s] = f.order ? *f.order : KineticOrder::number(1);
      if (!row[s].is_zero() && sgn(spec.reactant[s]) == 0)
        throw ParseError(rx.line, f.column, {}, "kinetic order on '" + f.name + "' outside the reactant complex");
    }
    doc.system.kin.orders.push_back(std::move(row));
    doc.system.kin.rates.push_back(std::move(rate));
    specs.push_back(std::move(spec));
  }
  doc.system.net = ReactionNetwork::build(species, specs);
  doc.system.kin.assumptions = std::move(assumptions);
  doc.system.kin.values = std::move(constants);
  try {
    validate(doc.system);
  } catch (const Error& e) {
    throw ParseError(number, 1, {}, e.what());
  }
  return doc;
}

std::string serialize_document(const NetworkDocument& doc) {
  const auto& net = doc.system.net;
  const auto& kin = doc.system.kin;
  if (doc.name.find('"') != std::string::npos || doc.name.find('\n') != std::string::npos)
    fail(ErrorKind::InvalidInput, "network name cannot contain quotes or newlines");
  for (const auto& s : net.species())
    if (!valid_symbol(s)) fail(ErrorKind::InvalidInput, "species '" + s + "' is not an identifier");
  std::ostringstream out;
  out << "network \"" << doc.name << "\"\n";
  out << "species";
  for (const auto& s : net.species()) out << " " << s;
  out << "\n";
  for (const auto& [s, a] : kin.assumptions) out << "assume " << s << " " << to_string(a) << "\n";
  for (const auto& [s, v] : kin.values) out << "const " << s << " = " << to_string(v) << "\n";
  auto complex = [&](const RVec& c) {
    std::string text;
    for (size_t s = 0; s < c.size(); ++s) {
      if (sgn(c[s]) == 0) continue;
      if (!text.empty()) text += " + ";
      if (c[s] != 1) text += to_string(c[s]) + " ";
      text += net.species()[s];
    }
    return text.empty() ? std::string("0") : text;
  };
  for (size_t j = 0; j < net.r(); ++j) {
    const auto& rx = net.reactions()[j];
    out << "reaction " << rx.label << ": " << complex(net.complexes()[rx.reactant]) << " -> "
        << complex(net.complexes()[rx.product]) << " rate ";
    const auto& rate = kin.rates[j];
    std::vector<std::string> factors;
    if (rate.coefficient != 1 || rate.symbols.empty()) factors.push_back(to_string(rate.coefficient));
    for (const auto& s : rate.symbols) factors.push_back(s);
    for (size_t s = 0; s < net.m(); ++s)
      if (!kin.orders[j][s].is_zero()) factors.push_back(net.species()[s] + "^" + kin.orders[j][s].str());
    for (size_t f = 0; f < factors.size(); ++f) out << (f ? " * " : "") << factors[f];
    out << "\n";
  }
  return out.str();
}

}  // namespace rncdr
