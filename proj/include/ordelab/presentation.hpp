#pragma once

#include "ordelab/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordelab {

// Finite presentation < gens | relations >. Relators are stored freely reduced;
// a chained equation w1 = w2 = w3 contributes the consecutive relators
// w1 w2^-1 and w2 w3^-1.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t alphabet_size() const { return generators.size() * 2; }
  std::optional<std::size_t> generator_index(std::string_view name) const;
  std::string text() const;  // canonical "< a, b | ... >" echo
};

// Grammar:
//   presentation := '<' gen (',' gen)* '|' [relation (';' relation)*] '>'
//   relation     := word ('=' word)*
//   word         := ('1' | letter)+        letter := ident ['^' int]
// Throws parse_error with 1-based line/col on malformed input.
GroupPresentation parse_presentation(std::string_view text);

}  // namespace ordelab
