#pragma once

#include <string>

#include "gbei/graph.hpp"

namespace gbei {

/// {"n": 5, "edges": [[1,2],[2,3]]}
SimpleGraph graphFromJson(const std::string& text);

/// First line "n", then one "u v" line per edge. Blank lines and lines
/// starting with '#' are skipped.
SimpleGraph graphFromText(const std::string& text);

/// Sniffs the format: leading '{' means JSON, anything else plain text.
SimpleGraph graphFromString(const std::string& text);
SimpleGraph graphFromFile(const std::string& path);

/// Byte-exact canonical form: {"n":5,"edges":[[1,2],[2,3]]}, edges sorted
/// lexicographically, no whitespace.
std::string graphToCanonicalJson(const SimpleGraph& g);

std::string graphToDot(const SimpleGraph& g);

}  // namespace gbei
