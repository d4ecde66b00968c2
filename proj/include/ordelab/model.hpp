#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ordelab/rational.hpp"
#include "ordelab/word.hpp"

namespace ordelab {

// x -> scale*x + offset with scale > 0, so every map is order-preserving.
struct AffineMap {
  Rational scale = 1;
  Rational offset = 0;

  Rational apply(const Rational& x) const { return scale * x + offset; }

  // Function composition: (*this)(inner(x)).
  AffineMap compose(const AffineMap& inner) const {
    return {scale * inner.scale, scale * inner.offset + offset};
  }

  AffineMap inverse() const { return {1 / scale, -offset / scale}; }

  bool operator==(const AffineMap&) const = default;
};

std::string to_string(const AffineMap& m);

// Exact model of a group acting on the line by affine maps.  A word is the
// product of its letters, so the rightmost letter acts first.
class AffineModel {
 public:
  explicit AffineModel(std::vector<AffineMap> generator_maps);

  AffineMap letter_map(Letter l) const;
  AffineMap eval(const Word& w) const;
  std::string key(const Word& w) const { return to_string(eval(w)); }

 private:
  std::vector<AffineMap> generator_maps_;
};

// Integer Heisenberg group as triples: (x,y,z)*(x',y',z') =
// (x+x', y+y', z+z'+x*y').  Generators a=(1,0,0), b=(0,1,0), c=(0,0,1).
struct HeisTriple {
  Integer x = 0, y = 0, z = 0;

  HeisTriple mul(const HeisTriple& o) const { return {x + o.x, y + o.y, z + o.z + x * o.y}; }
  HeisTriple inverse() const { return {-x, -y, x * y - z}; }
  bool operator==(const HeisTriple&) const = default;
};

class HeisModel {
 public:
  HeisTriple letter_value(Letter l) const;
  HeisTriple eval(const Word& w) const;
  std::string key(const Word& w) const;
};

// Maps a word to a string that is equal for two words exactly when they
// represent the same group element.  Used to deduplicate ball elements when
// no confluent rewriting system is available.
using ModelKeyFn = std::function<std::string(const Word&)>;

}  // namespace ordelab
