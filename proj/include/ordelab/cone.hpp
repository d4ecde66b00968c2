#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordelab/ball.hpp"
#include "ordelab/rational.hpp"

namespace ordelab {

// Sign of an element relative to the cone: +1 in P, -1 in P^-1, * in the
// coset-stabilizing subgroup C.
enum class Sign : int { minus = -1, star = 0, plus = 1 };

std::string_view to_string(Sign s);
std::optional<Sign> sign_from_string(std::string_view text);

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

// Sign a product must carry when the factor signs force one.  Only the
// mixed pairs (+,-) and (-,+) are unconstrained.
std::optional<Sign> forced_product(Sign a, Sign b);

// A candidate relative cone on a ball truncation: one sign per element.
struct SignAssignment {
  const Ball* ball = nullptr;
  std::vector<Sign> signs;

  Sign at(std::size_t i) const { return signs[i]; }
  // Sign of an arbitrary word, when its element lies in the ball.
  std::optional<Sign> eval_word(const Word& w) const;

  bool operator==(const SignAssignment& o) const { return signs == o.signs; }
};

enum class ConeViolationKind { partition, inverse, semigroup, cpc, properness };

std::string_view to_string(ConeViolationKind k);

struct ConeViolation {
  ConeViolationKind kind;
  std::vector<std::size_t> elements;  // ball indices involved, in scan order
};

std::string describe(const ConeViolation& v, const SignAssignment& phi,
                     const std::vector<std::string>& generator_names);

// Checks, in this order: the identity is starred; signs respect inverses;
// products with a forced sign carry it; starred conjugating triples c p c'
// whose left half escapes the ball keep sign +; some element is signed.
// Products of two minus elements are skipped, the inverse scan plus the
// plus-plus scan already covers them.  Stops after max_violations entries.
std::vector<ConeViolation> verify_relative_cone(const SignAssignment& phi,
                                                std::size_t max_violations = 16);

// Ultrametric on cones over the same ball: 2^-n where n is the largest
// radius on which the assignments agree.
struct ConeDistance {
  bool identical_at_truncation = false;
  std::size_t radius_of_agreement = 0;
  Rational value() const;
};

ConeDistance cone_distance(const SignAssignment& a, const SignAssignment& b);

// Conjugation h -> phi(g h g^-1) is only defined where the conjugate stays
// in the ball.
struct PartialSignAssignment {
  const Ball* ball = nullptr;
  std::vector<std::optional<Sign>> signs;

  std::size_t defined_count() const;
  std::optional<SignAssignment> total() const;
};

PartialSignAssignment conjugate(const SignAssignment& phi, const Word& g);

// For g starred in phi, conjugation by g must fix phi wherever defined.
// Returns the first (element, conjugated sign) disagreement, if any.
std::optional<std::pair<std::size_t, Sign>> stabilizer_fixed_check(const SignAssignment& phi,
                                                                   const Word& g);

enum class LimitVerdict { limit, no_limit, degenerate };

std::string_view to_string(LimitVerdict v);

// A sequence converges in the truncation exactly when it stabilizes; the
// last two entries decide.  A stabilized sequence whose limit fails the
// cone check is degenerate.
struct LimitOutcome {
  LimitVerdict verdict = LimitVerdict::no_limit;
  std::optional<SignAssignment> assignment;
  std::vector<ConeViolation> violations;
  std::size_t unstable_index = kNoIndex;
};

LimitOutcome limit_of_sequence(const std::vector<SignAssignment>& seq);

// One line per ball element, "word<TAB>sign", signs +1, -1 or *.
std::string serialize_cone(const SignAssignment& phi,
                           const std::vector<std::string>& generator_names);

// Requires exactly one sign for every ball element; unknown words,
// conflicting duplicates and missing elements are errors.
SignAssignment parse_cone(const Ball& ball, const std::vector<std::string>& generator_names,
                          std::string_view text);

}  // namespace ordelab
