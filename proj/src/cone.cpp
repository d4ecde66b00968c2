#include "ordelab/cone.hpp"

#include <sstream>
#include <stdexcept>

namespace ordelab {

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::minus: return "-1";
    case Sign::star: return "*";
    case Sign::plus: return "+1";
  }
  return "?";
}

std::optional<Sign> sign_from_string(std::string_view text) {
  if (text == "+1") return Sign::plus;
  if (text == "-1") return Sign::minus;
  if (text == "*") return Sign::star;
  return std::nullopt;
}

std::optional<Sign> forced_product(Sign a, Sign b) {
  if (a == Sign::star && b == Sign::star) return Sign::star;
  if (a == Sign::star) return b;
  if (b == Sign::star) return a;
  if (a == b) return a;
  return std::nullopt;  // + times - can land anywhere
}

std::optional<Sign> SignAssignment::eval_word(const Word& w) const {
  if (auto idx = ball->find(w)) return signs[*idx];
  return std::nullopt;
}

std::string_view to_string(ConeViolationKind k) {
  switch (k) {
    case ConeViolationKind::partition: return "partition";
    case ConeViolationKind::inverse: return "inverse";
    case ConeViolationKind::semigroup: return "semigroup";
    case ConeViolationKind::cpc: return "cpc";
    case ConeViolationKind::properness: return "properness";
  }
  return "?";
}

std::string describe(const ConeViolation& v, const SignAssignment& phi,
                     const std::vector<std::string>& generator_names) {
  const Ball& ball = *phi.ball;
  auto word = [&](std::size_t i) { return format_word(ball.label(i), generator_names); };
  auto sign = [&](std::size_t i) { return std::string(to_string(phi.at(i))); };
  std::string out(to_string(v.kind));
  out += ": ";
  switch (v.kind) {
    case ConeViolationKind::partition:
      out += "identity carries " + sign(v.elements[0]) + ", must be *";
      break;
    case ConeViolationKind::inverse:
      out += "phi(" + word(v.elements[0]) + ") = " + sign(v.elements[0]) + " but phi(" +
             word(v.elements[1]) + ") = " + sign(v.elements[1]);
      break;
    case ConeViolationKind::semigroup:
      out += "phi(" + word(v.elements[0]) + ") = " + sign(v.elements[0]) + ", phi(" +
             word(v.elements[1]) + ") = " + sign(v.elements[1]) + " force the product, but phi(" +
             word(v.elements[2]) + ") = " + sign(v.elements[2]);
      break;
    case ConeViolationKind::cpc:
      out += "starred " + word(v.elements[0]) + " and " + word(v.elements[2]) + " around " +
             word(v.elements[1]) + " give phi(" + word(v.elements[3]) + ") = " +
             sign(v.elements[3]) + ", must be +1";
      break;
    case ConeViolationKind::properness:
      out += "every element is starred";
      break;
  }
  return out;
}

std::vector<ConeViolation> verify_relative_cone(const SignAssignment& phi,
                                                std::size_t max_violations) {
  const Ball& ball = *phi.ball;
  std::vector<ConeViolation> out;
  auto full = [&] { return out.size() >= max_violations; };

  if (phi.at(ball.identity()) != Sign::star) {
    out.push_back({ConeViolationKind::partition, {ball.identity()}});
    if (full()) return out;
  }

  for (std::size_t i = 0; i < ball.size() && !full(); ++i) {
    std::size_t j = ball.inverse_of()[i];
    if (j == kNoIndex || j < i) continue;
    if (phi.at(j) != negate(phi.at(i))) {
      out.push_back({ConeViolationKind::inverse, {i, j}});
    }
  }
  if (full()) return out;

  for (std::size_t i = 0; i < ball.size() && !full(); ++i) {
    for (std::size_t j = 0; j < ball.size() && !full(); ++j) {
      if (phi.at(i) == Sign::minus && phi.at(j) == Sign::minus) continue;
      auto expected = forced_product(phi.at(i), phi.at(j));
      if (!expected) continue;
      auto prod = ball.multiply(i, j);
      if (!std::holds_alternative<std::size_t>(prod)) continue;
      std::size_t p = std::get<std::size_t>(prod);
      if (phi.at(p) != *expected) {
        ConeViolationKind kind = ConeViolationKind::semigroup;
        if (phi.at(i) == Sign::star && phi.at(j) == Sign::star) {
          kind = ConeViolationKind::partition;  // C is not closed
        } else if (phi.at(i) == Sign::star || phi.at(j) == Sign::star) {
          kind = ConeViolationKind::cpc;  // C does not normalize into P / P^-1
        }
        out.push_back({kind, {i, j, p}});
      }
    }
  }
  if (full()) return out;

  // c p c' with the left half outside the ball; in-ball halves are already
  // covered by the product scan above.
  for (std::size_t c1 = 0; c1 < ball.size() && !full(); ++c1) {
    if (phi.at(c1) != Sign::star) continue;
    for (std::size_t p = 0; p < ball.size() && !full(); ++p) {
      if (phi.at(p) != Sign::plus) continue;
      if (std::holds_alternative<std::size_t>(ball.multiply(c1, p))) continue;
      for (std::size_t c2 = 0; c2 < ball.size() && !full(); ++c2) {
        if (phi.at(c2) != Sign::star) continue;
        Word w = ball.label(c1);
        w.insert(w.end(), ball.label(p).begin(), ball.label(p).end());
        w.insert(w.end(), ball.label(c2).begin(), ball.label(c2).end());
        auto idx = ball.find(w);
        if (idx && phi.at(*idx) != Sign::plus) {
          out.push_back({ConeViolationKind::cpc, {c1, p, c2, *idx}});
        }
      }
    }
  }
  if (full()) return out;

  bool proper = false;
  for (Sign s : phi.signs) {
    if (s != Sign::star) {
      proper = true;
      break;
    }
  }
  if (!proper) out.push_back({ConeViolationKind::properness, {}});
  return out;
}

Rational ConeDistance::value() const {
  if (identical_at_truncation) return 0;
  return Rational(Integer(1), Integer(1) << radius_of_agreement);
}

ConeDistance cone_distance(const SignAssignment& a, const SignAssignment& b) {
  if (a.ball != b.ball) throw std::invalid_argument("cones live over different balls");
  ConeDistance d;
  for (std::size_t i = 0; i < a.signs.size(); ++i) {
    if (a.signs[i] != b.signs[i]) {
      std::size_t len = a.ball->length(i);
      d.radius_of_agreement = len == 0 ? 0 : len - 1;
      return d;
    }
  }
  d.identical_at_truncation = true;
  d.radius_of_agreement = a.ball->radius();
  return d;
}

std::size_t PartialSignAssignment::defined_count() const {
  std::size_t n = 0;
  for (const auto& s : signs) n += s.has_value();
  return n;
}

std::optional<SignAssignment> PartialSignAssignment::total() const {
  SignAssignment out{ball, {}};
  out.signs.reserve(signs.size());
  for (const auto& s : signs) {
    if (!s) return std::nullopt;
    out.signs.push_back(*s);
  }
  return out;
}

PartialSignAssignment conjugate(const SignAssignment& phi, const Word& g) {
  const Ball& ball = *phi.ball;
  PartialSignAssignment out{&ball, {}};
  out.signs.resize(ball.size());
  Word ginv = inverse_word(g);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    Word w = g;
    w.insert(w.end(), ball.label(i).begin(), ball.label(i).end());
    w.insert(w.end(), ginv.begin(), ginv.end());
    out.signs[i] = phi.eval_word(w);
  }
  return out;
}

std::optional<std::pair<std::size_t, Sign>> stabilizer_fixed_check(const SignAssignment& phi,
                                                                   const Word& g) {
  PartialSignAssignment conj = conjugate(phi, g);
  for (std::size_t i = 0; i < conj.signs.size(); ++i) {
    if (conj.signs[i] && *conj.signs[i] != phi.at(i)) return std::pair{i, *conj.signs[i]};
  }
  return std::nullopt;
}

std::string_view to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::limit: return "LIMIT";
    case LimitVerdict::no_limit: return "NO-LIMIT";
    case LimitVerdict::degenerate: return "DEGENERATE";
  }
  return "?";
}

LimitOutcome limit_of_sequence(const std::vector<SignAssignment>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  for (const SignAssignment& phi : seq) {
    if (phi.ball != seq.front().ball) {
      throw std::invalid_argument("sequence mixes balls");
    }
  }
  LimitOutcome out;
  const SignAssignment& last = seq.back();
  if (seq.size() >= 2) {
    const SignAssignment& prev = seq[seq.size() - 2];
    for (std::size_t i = 0; i < last.signs.size(); ++i) {
      if (prev.signs[i] != last.signs[i]) {
        out.verdict = LimitVerdict::no_limit;
        out.unstable_index = i;
        return out;
      }
    }
  }
  out.assignment = last;
  out.violations = verify_relative_cone(last);
  out.verdict = out.violations.empty() ? LimitVerdict::limit : LimitVerdict::degenerate;
  return out;
}

std::string serialize_cone(const SignAssignment& phi,
                           const std::vector<std::string>& generator_names) {
  std::string out;
  for (std::size_t i = 0; i < phi.signs.size(); ++i) {
    out += format_word(phi.ball->label(i), generator_names);
    out += '\t';
    out += to_string(phi.at(i));
    out += '\n';
  }
  return out;
}

SignAssignment parse_cone(const Ball& ball, const std::vector<std::string>& generator_names,
                          std::string_view text) {
  std::vector<std::optional<Sign>> signs(ball.size());
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw parse_error(lineno, 1, "expected 'word<TAB>sign'");
    }
    Word w = parse_word(std::string_view(line).substr(0, tab), generator_names);
    std::string tail = line.substr(tab + 1);
    while (!tail.empty() && (tail.back() == '\r' || tail.back() == ' ' || tail.back() == '\t')) {
      tail.pop_back();
    }
    while (!tail.empty() && (tail.front() == ' ' || tail.front() == '\t')) tail.erase(0, 1);
    auto s = sign_from_string(tail);
    if (!s) throw parse_error(lineno, tab + 2, "sign must be +1, -1 or *");
    auto idx = ball.find(w);
    if (!idx) {
      throw parse_error(lineno, 1,
                        "'" + format_word(w, generator_names) + "' is outside the truncation");
    }
    if (signs[*idx] && *signs[*idx] != *s) {
      throw parse_error(lineno, 1,
                        "conflicting sign for '" + format_word(ball.label(*idx), generator_names) +
                            "'");
    }
    signs[*idx] = *s;
  }
  SignAssignment out{&ball, {}};
  out.signs.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (!signs[i]) {
      throw parse_error(lineno + 1, 1,
                        "no sign for '" + format_word(ball.label(i), generator_names) + "'");
    }
    out.signs.push_back(*signs[i]);
  }
  return out;
}

}  // namespace ordelab
