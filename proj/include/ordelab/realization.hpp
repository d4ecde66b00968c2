#pragma once

#include <vector>

#include "ordelab/coset.hpp"
#include "ordelab/rational.hpp"

namespace ordelab {

// Coset points on the line, class id -> coordinate.  Classes are inserted
// in representative order: the identity class sits at 0, a new maximum at
// max+1, a new minimum at min-1, anything else at the midpoint of its
// neighbours.  Pairs the truncation leaves undecided are placed where the
// order's linear extension puts them.
std::vector<Rational> embed_cosets(const CosetOrder& order);

// Increasing piecewise-linear map through the breakpoints, slope 1 outside
// them.  No breakpoints means the identity.
struct PLMap {
  std::vector<Rational> xs;  // strictly increasing
  std::vector<Rational> ys;

  Rational apply(const Rational& x) const;
  // apply() interpolates honest data only inside the breakpoint hull.
  bool confident(const Rational& x) const;
};

struct Evaluation {
  Rational value;
  bool confident = true;  // every letter application stayed on the hull
};

// Action on the line read off a cone: one PL map per letter, basepoint at
// the identity class.  Words act with the rightmost letter first.
struct Realization {
  CosetOrder order;
  std::vector<Rational> t;            // class id -> point
  Rational p = 0;                     // basepoint, t of the identity class
  std::vector<PLMap> letter_maps;     // by letter rank

  Evaluation evaluate(const Word& w, Rational x) const;
};

// Builds the realization.  Undecided coset pairs follow the linear
// extension; throws order_incoherent only when some letter's interpolation
// data comes out non increasing, which signals a corrupted order.
Realization realize(const SignAssignment& phi);

struct RealizationReport {
  std::size_t elements = 0;
  std::size_t decidable = 0;       // elements whose evaluation is confident
  std::size_t eq1_holds = 0;       // sign of rho(g)(p) - p matches phi(g)
  std::vector<std::size_t> eq1_failures;
  std::size_t stars_checked = 0;
  std::size_t stars_fixing = 0;    // starred elements with rho(g)(p) = p
  std::size_t pairs_checked = 0;   // length-2 elements vs the embedding
  std::size_t pairs_agreeing = 0;

  bool ok() const {
    return eq1_failures.empty() && stars_fixing == stars_checked &&
           pairs_agreeing == pairs_checked;
  }
};

// Order-iff-action check over the ball: the basepoint moves the way the
// sign says, starred elements fix it, and two-letter compositions land on
// the embedded coset point.  Only confident evaluations are counted.
RealizationReport verify_realization(const Realization& real, const SignAssignment& phi);

}  // namespace ordelab
