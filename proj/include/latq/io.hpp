#pragma once

#include <json.hpp>

#include "latq/gram.hpp"

namespace latq {

// Accepts either the plain text format (line 1: n, then n rows of n integers)
// or the structured format {"n": int, "gram": [[int]]}.
SymGram parse_gram(const std::string& text);

SymGram load_gram_file(const std::string& path);

// json echo of a Gram matrix as [[int]]
nlohmann::json gram_to_json(const SymGram& g);

// Deterministic rendering: "json" dumps with sorted keys, "text" prints an
// aligned key/value table with sub-tables for arrays of objects.
std::string emit(const nlohmann::json& report, const std::string& format);

}  // namespace latq
