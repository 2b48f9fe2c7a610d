#pragma once

#include <string>

#include "rncdr/dsl.hpp"

namespace rncdr {

// Canonical JSON: sorted keys, rationals as "p/q" strings, two-space indent.
std::string document_to_json(const NetworkDocument& doc);
// Throws Error(Schema) with a JSON pointer to the offending value.
NetworkDocument document_from_json(const std::string& text);

}  // namespace rncdr
