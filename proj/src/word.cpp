#include "ordelab/word.hpp"

#include <algorithm>
#include <cctype>

namespace ordelab {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inv != l.inv) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].gen == w[i - 1].gen && w[i].inv != w[i - 1].inv) return false;
  }
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long exp = static_cast<long long>(j - i);
    if (w[i].inv) exp = -exp;
    if (!out.empty()) out += ' ';
    out += generators.at(w[i].gen);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

namespace {

std::size_t find_generator(const std::vector<std::string>& generators, std::string_view name) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return i;
  }
  return generators.size();
}

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators,
                bool reduce) {
  Word out;
  std::size_t i = 0;
  auto col = [&] { return i + 1; };
  bool saw_token = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '1') {
      ++i;
      saw_token = true;
      continue;  // identity factor
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_') {
      throw parse_error(1, col(), std::string("unexpected character '") + text[i] + "' in word");
    }
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      ++i;
    }
    std::string_view name = text.substr(start, i - start);
    std::size_t gen = find_generator(generators, name);
    if (gen == generators.size()) {
      throw parse_error(1, start + 1, "unknown generator '" + std::string(name) + "'");
    }
    long long exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t estart = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == estart || (i == estart + 1 && !std::isdigit(static_cast<unsigned char>(text[estart])))) {
        throw parse_error(1, estart + 1, "expected integer exponent after '^'");
      }
      exp = std::stoll(std::string(text.substr(estart, i - estart)));
    }
    bool inv = exp < 0;
    long long count = inv ? -exp : exp;
    for (long long k = 0; k < count; ++k) {
      out.push_back(Letter{static_cast<std::uint16_t>(gen), inv});
    }
    saw_token = true;
  }
  if (!saw_token) throw parse_error(1, 1, "empty word");
  return reduce ? free_reduce(out) : out;
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (const Letter& l : w) {
    key += std::to_string(l.rank());
    key += ',';
  }
  return key;
}

}  // namespace ordelab
