#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordelab/cone.hpp"

namespace ordelab {

// A sign assignment that cannot be read as a left order on cosets.
class order_incoherent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int8_t kRelUnknown = 2;

// Order on the cosets gC seen inside a ball.  Classes are the star-linked
// components; rel[x][y] is +1 for x before y, -1 for after.  Pairs the
// truncation leaves free are completed deterministically, kept left
// invariant wherever the ball can test it, and flagged in undecided_pairs;
// total means no pair needed completing.  position/class_by_position carry
// the resulting ranking.
struct CosetOrder {
  const Ball* ball = nullptr;
  std::vector<std::size_t> class_of;            // ball index -> class id
  std::vector<std::size_t> rep_of;              // class id -> least ball index
  std::vector<std::vector<std::int8_t>> rel;    // class id x class id
  bool total = false;
  std::vector<std::pair<std::size_t, std::size_t>> undecided_pairs;
  std::vector<std::size_t> position;            // class id -> rank, least first
  std::vector<std::size_t> class_by_position;

  std::size_t class_count() const { return rep_of.size(); }
  std::size_t identity_class() const { return class_of[ball->identity()]; }
};

// Reads the coset order off a cone: g ~ h when phi(g^-1 h) is starred, and
// gC before hC when it is +1.  Throws order_incoherent on conflicting
// relations.
CosetOrder cone_to_coset_order(const SignAssignment& phi);

struct LeftInvarianceViolation {
  std::size_t h;        // ball index of the translating element
  std::size_t class_f;  // class pair with class_f before class_g ...
  std::size_t class_g;  // ... whose translates compare the other way
};

struct ConeFromOrder {
  SignAssignment assignment;
  std::optional<LeftInvarianceViolation> invariance;
};

// Rebuilds the cone from an order: stars on the identity class, then the
// direct edge rel[identity][class] signs everything else.  c_generators
// must land in the identity class.  Also scans for the first failure of
// left invariance, which a hand-built order may exhibit.
ConeFromOrder coset_order_to_cone(const CosetOrder& order,
                                  const std::vector<Word>& c_generators);

}  // namespace ordelab
