#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "regmap/word.hpp"

namespace regmap {

/// A finitely presented group, plus optional generators of a subgroup for
/// coset enumeration.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  std::vector<Word> subgroup_generators;

  int ngens() const { return static_cast<int>(generator_names.size()); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line;
  int col;
};

/// Parses the line-oriented presentation format:
///
///   generators: <name> <name> ...
///   relators: <expr>, <expr>, ...
///   subgroup: <expr>, ...        (optional)
///
/// Expressions use `*`, `^int`, parentheses, conjugation `u^v`, commutators
/// `[u,v]` and equations `lhs = rhs` (stored as lhs*rhs^-1). `#` starts a
/// comment. Relator lists may span lines.
Presentation parse_presentation(std::string_view text);

std::string render_word(const Word& w, const std::vector<std::string>& names);
std::string render_presentation(const Presentation& p);

}  // namespace regmap
