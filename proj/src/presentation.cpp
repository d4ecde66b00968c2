#include "ordelab/presentation.hpp"

#include <cctype>

namespace ordelab {

std::optional<std::size_t> GroupPresentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return i;
  }
  return std::nullopt;
}

std::string GroupPresentation::text() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out += (i == 0 ? " " : ", ");
    out += generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out += (i == 0 ? " " : " ; ");
    out += format_word(relators[i], generators);
  }
  out += " >";
  return out;
}

namespace {

struct Token {
  enum Kind { langle, rangle, pipe, comma, semi, eq, caret, ident, integer, end } kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
    tok_.line = line_;
    tok_.col = col_;
    tok_.text.clear();
    if (pos_ >= src_.size()) {
      tok_.kind = Token::end;
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '<': tok_.kind = Token::langle; bump(); return;
      case '>': tok_.kind = Token::rangle; bump(); return;
      case '|': tok_.kind = Token::pipe; bump(); return;
      case ',': tok_.kind = Token::comma; bump(); return;
      case ';': tok_.kind = Token::semi; bump(); return;
      case '=': tok_.kind = Token::eq; bump(); return;
      case '^': tok_.kind = Token::caret; bump(); return;
      default: break;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::integer;
      tok_.text += c;
      bump();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        tok_.text += src_[pos_];
        bump();
      }
      if (tok_.text == "-" || tok_.text == "+") {
        throw parse_error(tok_.line, tok_.col, "expected digits after sign");
      }
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        tok_.text += src_[pos_];
        bump();
      }
      return;
    }
    throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  GroupPresentation run() {
    expect(Token::langle, "expected '<'");
    parse_generators();
    expect(Token::pipe, "expected '|'");
    parse_relations();
    expect(Token::rangle, "expected '>'");
    if (lex_.peek().kind != Token::end) {
      fail(lex_.peek(), "trailing input after '>'");
    }
    return std::move(pres_);
  }

 private:
  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw parse_error(t.line, t.col, msg);
  }

  Token expect(Token::Kind k, const std::string& msg) {
    if (lex_.peek().kind != k) fail(lex_.peek(), msg);
    return lex_.take();
  }

  void parse_generators() {
    if (lex_.peek().kind != Token::ident) fail(lex_.peek(), "expected generator name");
    for (;;) {
      Token t = expect(Token::ident, "expected generator name");
      if (t.text == "1") fail(t, "'1' is reserved for the identity");
      if (pres_.generator_index(t.text)) fail(t, "duplicate generator '" + t.text + "'");
      pres_.generators.push_back(t.text);
      if (lex_.peek().kind == Token::comma) {
        lex_.take();
        continue;
      }
      if (lex_.peek().kind == Token::ident) {
        fail(lex_.peek(), "expected ',' or '|' between generators");
      }
      break;
    }
  }

  void parse_relations() {
    if (lex_.peek().kind == Token::rangle) return;  // no relators
    for (;;) {
      parse_relation();
      if (lex_.peek().kind == Token::semi) {
        lex_.take();
        continue;
      }
      break;
    }
  }

  void parse_relation() {
    std::vector<Word> sides;
    sides.push_back(parse_side());
    while (lex_.peek().kind == Token::eq) {
      lex_.take();
      sides.push_back(parse_side());
    }
    if (sides.size() == 1) {
      add_relator(sides[0]);
    } else {
      for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
        Word r = sides[i];
        Word rhs_inv = inverse_word(sides[i + 1]);
        r.insert(r.end(), rhs_inv.begin(), rhs_inv.end());
        add_relator(std::move(r));
      }
    }
  }

  void add_relator(Word w) {
    w = free_reduce(std::move(w));
    Token here = lex_.peek();
    if (w.empty()) fail(here, "relator freely reduces to the identity");
    pres_.relators.push_back(std::move(w));
  }

  Word parse_side() {
    Word w;
    bool any = false;
    for (;;) {
      const Token& t = lex_.peek();
      if (t.kind == Token::integer && t.text == "1") {
        lex_.take();
        any = true;
        continue;
      }
      if (t.kind != Token::ident) break;
      Token name = lex_.take();
      auto gi = pres_.generator_index(name.text);
      if (!gi) fail(name, "unknown generator '" + name.text + "' in relator");
      long long exp = 1;
      if (lex_.peek().kind == Token::caret) {
        lex_.take();
        Token e = expect(Token::integer, "expected integer exponent after '^'");
        try {
          exp = std::stoll(e.text);
        } catch (const std::out_of_range&) {
          fail(e, "exponent out of range");
        }
        if (exp > 1000000 || exp < -1000000) fail(e, "exponent out of range");
      }
      bool inv = exp < 0;
      for (long long k = 0; k < (inv ? -exp : exp); ++k) {
        w.push_back(Letter{static_cast<std::uint16_t>(*gi), inv});
      }
      any = true;
    }
    if (!any) fail(lex_.peek(), "expected a word");
    return w;
  }

  Lexer lex_;
  GroupPresentation pres_;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).run(); }

}  // namespace ordelab
