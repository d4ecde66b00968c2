#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordelab {

// Parse failure with 1-based source position.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t col, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + what),
        line_(line),
        col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

// One letter of a group word: generator index plus orientation.
// The default ordering (gen, then inv) is exactly the alphabet order used for
// shortlex: g0 < g0^-1 < g1 < g1^-1 < ...
struct Letter {
  std::uint16_t gen = 0;
  bool inv = false;
  auto operator<=>(const Letter&) const = default;
  Letter inverse() const { return Letter{gen, !inv}; }
  std::size_t rank() const { return std::size_t{gen} * 2 + (inv ? 1 : 0); }
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse_word(const Word& w);
bool is_freely_reduced(const Word& w);

// Shortlex: length first, then the letter order above.
bool shortlex_less(const Word& a, const Word& b);

// Empty word prints as "1"; runs are compressed, e.g. "a^3 b^-2 a".
std::string format_word(const Word& w, const std::vector<std::string>& generators);

// Accepts the same syntax: identifiers with optional ^k exponents, whitespace
// separated, or "1" for the identity. Rejects undeclared generators.  The
// result is freely reduced unless reduce is false (rewrite rule sides must
// keep cancelling pairs verbatim).
Word parse_word(std::string_view text, const std::vector<std::string>& generators,
                bool reduce = true);

// Unambiguous per-ball hash key for a word (not human readable).
std::string word_key(const Word& w);

}  // namespace ordelab
