#pragma once

#include <array>
#include <memory>
#include <variant>

#include "ordelab/realization.hpp"

namespace ordelab {

// Uniform view of a group acting on the line by increasing maps, either the
// piecewise-linear action read off a cone or an exact affine action.  Words
// act with the rightmost letter first; act() refuses to answer once an
// evaluation leaves honestly known ground.
class OrderedAction {
 public:
  static OrderedAction from_realization(Realization real);
  static OrderedAction from_affine(AffineModel model, std::size_t generator_count,
                                   std::size_t orbit_radius);

  std::size_t generator_count() const { return generator_count_; }
  Rational basepoint() const { return basepoint_; }
  // Marked points: coset points in realization order, or the basepoint
  // orbit in discovery order for an affine action.
  const std::vector<Rational>& points() const { return points_; }
  // Distinct elements as geodesic words, (length, shortlex).
  std::vector<Word> elements(std::size_t word_radius) const;
  std::optional<Rational> act(const Word& w, const Rational& x) const;
  // Exact map of the word under an affine action.
  std::optional<AffineMap> affine_of(const Word& w) const;

  const Realization* realization() const { return real_ ? &*real_ : nullptr; }

 private:
  OrderedAction() = default;

  std::optional<Realization> real_;
  std::optional<AffineModel> model_;
  std::size_t generator_count_ = 0;
  std::size_t orbit_radius_ = 0;
  Rational basepoint_ = 0;
  std::vector<Rational> points_;
};

// A crossing of f and g over (u, v, w): the g-orbit of u stays under v and
// the f-orbit of v stays over u at every power up to the bound, yet f
// pushes v below w while g pushes u above it.  Both orbits must be decided
// for the whole power range; an orbit that walks off known ground never
// witnesses.  A witness can still dissolve at a deeper bound, so it is
// evidence up to power_bound, not a certificate.
struct CrossingWitness {
  Word f, g;
  Rational u, v, w;
  std::size_t N = 0;  // least power with f^N(v) < w
  std::size_t M = 0;  // least power with g^M(u) > w
  std::size_t power_bound = 0;
};

struct NoneUpToBound {
  std::size_t word_radius = 0;
  std::size_t power_bound = 0;
};

// First witness in scan order: element pairs (f, g) by index with f != g,
// then marked-point triples (u, v, w) by discovery index subject to
// u < w < v by value.
std::variant<CrossingWitness, NoneUpToBound> find_crossing(const OrderedAction& action,
                                                           std::size_t word_radius,
                                                           std::size_t power_bound);

// Two-sided orbit span of a word at a point.  lo/hi track the computed
// iterates; a direction that provably diverges (affine) or walks off known
// ground (piecewise linear) is flagged unbounded instead.
struct Envelope {
  std::vector<Rational> forward;
  std::vector<Rational> backward;
  Rational lo, hi;
  bool unbounded_above = false;
  bool unbounded_below = false;
};

Envelope envelope(const OrderedAction& action, const Word& w, const Rational& x,
                  std::size_t power_bound);

struct OverlapExample {
  Word g1, g2;
  Rational x1, x2;
};

// Pairwise classification of all envelopes of elements up to word_radius
// at all marked points, with unbounded ends treated as infinite.  Two
// partially overlapping envelopes signal a crossing; seeing one without a
// found crossing is flagged as a truncation artifact.
struct NestingReport {
  std::size_t nested = 0;
  std::size_t disjoint = 0;
  std::size_t overlapping = 0;
  bool artifact = false;
  std::optional<OverlapExample> example;
};

NestingReport nesting_report(const OrderedAction& action, std::size_t word_radius,
                             std::size_t power_bound, bool crossing_found);

// Sweep test: from every marked point some power |n| <= bound must reach
// at or above, and at or below, every other marked point.
struct CofinalReport {
  bool cofinal = true;
  Rational witness_x, witness_y;
  bool needed_above = false;  // direction the sweep could not reach
};

CofinalReport cofinal_test(const OrderedAction& action, const Word& g, std::size_t bound);

// Positive f before positive g whose products f g^n never get past g at
// any decidable power; such a pair rules the order out as Conradian.
struct ConradianViolation {
  std::size_t f = 0, g = 0;  // ball indices
  std::vector<std::pair<std::size_t, Sign>> tested;  // (n, sign of g^-1 f g^n)
};

std::optional<ConradianViolation> conradian_violation(const SignAssignment& phi,
                                                      std::size_t n_bound);

// Three-way comparison in the relative order, undefined when the
// truncation cannot decide.
class OrderOracle {
 public:
  enum class Cmp { less, equivalent, greater, undefined };

  virtual ~OrderOracle() = default;
  virtual Cmp compare(const Word& u, const Word& v) const = 0;
};

std::string_view to_string(OrderOracle::Cmp c);

// Compares via phi(u^-1 v) on the ball.
class ConeOracle : public OrderOracle {
 public:
  explicit ConeOracle(SignAssignment phi) : phi_(std::move(phi)) {}
  Cmp compare(const Word& u, const Word& v) const override;

 private:
  SignAssignment phi_;
};

// Compares images of the basepoint under an exact affine action; total.
class AffineOracle : public OrderOracle {
 public:
  explicit AffineOracle(AffineModel model, Rational basepoint = 0)
      : model_(std::move(model)), basepoint_(std::move(basepoint)) {}
  Cmp compare(const Word& u, const Word& v) const override;

 private:
  AffineModel model_;
  Rational basepoint_;
};

enum class RecurrenceVerdict { recurrent_up_to_bound, fails, undecided };

std::string_view to_string(RecurrenceVerdict v);

// Translates of the chain by h^n: n is decidable when every neighbouring
// comparison is, a witness when the chain also holds.  The verdict needs
// evidence in the upper half of the power range: a witness there means
// recurrent; enough decided powers there, none of them witnesses and at
// least half the range decided overall, means the chain fails; anything
// less stays undecided.
struct RecurrenceOutcome {
  RecurrenceVerdict verdict = RecurrenceVerdict::undecided;
  std::vector<std::size_t> witnesses;
  std::vector<std::size_t> decidable;
  std::size_t bound = 0;
};

RecurrenceOutcome recurrence_check(const OrderOracle& oracle, const std::vector<Word>& chain,
                                   const Word& h, std::size_t bound);

}  // namespace ordelab
