#include "ordelab/model.hpp"

#include <stdexcept>

namespace ordelab {

std::string to_string(const AffineMap& m) {
  return to_string(m.scale) + "x+" + to_string(m.offset);
}

AffineModel::AffineModel(std::vector<AffineMap> generator_maps)
    : generator_maps_(std::move(generator_maps)) {
  for (const AffineMap& m : generator_maps_) {
    if (m.scale <= 0) throw std::invalid_argument("affine generator must have positive scale");
  }
}

AffineMap AffineModel::letter_map(Letter l) const {
  if (l.gen >= generator_maps_.size()) throw std::invalid_argument("letter outside model");
  const AffineMap& m = generator_maps_[l.gen];
  return l.inv ? m.inverse() : m;
}

AffineMap AffineModel::eval(const Word& w) const {
  AffineMap acc;
  for (Letter l : w) acc = acc.compose(letter_map(l));
  return acc;
}

HeisTriple HeisModel::letter_value(Letter l) const {
  if (l.gen >= 3) throw std::invalid_argument("letter outside model");
  HeisTriple t;
  if (l.gen == 0) t.x = 1;
  if (l.gen == 1) t.y = 1;
  if (l.gen == 2) t.z = 1;
  return l.inv ? t.inverse() : t;
}

HeisTriple HeisModel::eval(const Word& w) const {
  HeisTriple acc;
  for (Letter l : w) acc = acc.mul(letter_value(l));
  return acc;
}

std::string HeisModel::key(const Word& w) const {
  HeisTriple t = eval(w);
  return t.x.str() + "," + t.y.str() + "," + t.z.str();
}

}  // namespace ordelab
