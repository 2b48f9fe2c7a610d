#pragma once

#include <string>
#include <vector>

#include "rncdr/error.hpp"
#include "rncdr/kinetics.hpp"

namespace rncdr {

struct NetworkDocument {
  std::string name;
  KineticSystem system;
};

class ParseError : public Error {
 public:
  ParseError(size_t line, size_t column, std::vector<std::string> expected, const std::string& message);
  size_t line() const noexcept { return line_; }
  size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  size_t line_, column_;
  std::vector<std::string> expected_;
};

// Line-oriented reaction language:
//   network "name"
//   species A1 A2 ...
//   assume p1 <0
//   const k1 = 1/2
//   reaction R1: A1 + 2 A2 -> 2 A1 + A2 rate k1 * A1^p1 * A2^q1
NetworkDocument parse_document(const std::string& text);
std::string serialize_document(const NetworkDocument& doc);

}  // namespace rncdr
