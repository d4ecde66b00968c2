#include "ordelab/realization.hpp"

#include <algorithm>

namespace ordelab {

std::vector<Rational> embed_cosets(const CosetOrder& order) {
  const std::size_t k = order.class_count();
  // Placement follows the linear extension, so undecided pairs inherit its
  // deterministic choice.  Hand built orders may carry rel only.
  auto before = [&](std::size_t d, std::size_t c) {
    if (order.position.size() == k) return order.position[d] < order.position[c];
    return order.rel[d][c] == 1;
  };
  std::vector<Rational> t(k);
  std::vector<std::size_t> placed;
  for (std::size_t c = 0; c < k; ++c) {
    if (placed.empty()) {
      t[c] = 0;
      placed.push_back(c);
      continue;
    }
    bool has_below = false, has_above = false;
    Rational lo = 0, hi = 0;
    for (std::size_t d : placed) {
      if (before(d, c)) {
        if (!has_below || t[d] > lo) lo = t[d];
        has_below = true;
      } else {
        if (!has_above || t[d] < hi) hi = t[d];
        has_above = true;
      }
    }
    if (!has_below) {
      t[c] = hi - 1;
    } else if (!has_above) {
      t[c] = lo + 1;
    } else {
      t[c] = (lo + hi) / 2;
    }
    placed.push_back(c);
  }
  return t;
}

Rational PLMap::apply(const Rational& x) const {
  if (xs.empty()) return x;
  if (x <= xs.front()) return ys.front() + (x - xs.front());
  if (x >= xs.back()) return ys.back() + (x - xs.back());
  std::size_t hi = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
  std::size_t lo = hi - 1;
  Rational fr = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + fr * (ys[hi] - ys[lo]);
}

bool PLMap::confident(const Rational& x) const {
  return !xs.empty() && x >= xs.front() && x <= xs.back();
}

Evaluation Realization::evaluate(const Word& w, Rational x) const {
  Evaluation out{std::move(x), true};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const PLMap& m = letter_maps[it->rank()];
    out.confident = out.confident && m.confident(out.value);
    out.value = m.apply(out.value);
  }
  return out;
}

Realization realize(const SignAssignment& phi) {
  Realization real;
  real.order = cone_to_coset_order(phi);
  real.t = embed_cosets(real.order);
  real.p = real.t[real.order.identity_class()];

  const Ball& ball = *phi.ball;
  const std::size_t ranks = 2 * ball.rws().generator_count();
  real.letter_maps.resize(ranks);
  for (std::size_t rank = 0; rank < ranks; ++rank) {
    Letter l{static_cast<std::uint16_t>(rank / 2), rank % 2 == 1};
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t c = 0; c < real.order.class_count(); ++c) {
      Word w{l};
      const Word& rep = ball.label(real.order.rep_of[c]);
      w.insert(w.end(), rep.begin(), rep.end());
      auto idx = ball.find(w);
      if (!idx) continue;
      pts.emplace_back(real.t[c], real.t[real.order.class_of[*idx]]);
    }
    std::sort(pts.begin(), pts.end());
    PLMap& m = real.letter_maps[rank];
    for (auto& [x, y] : pts) {
      m.xs.push_back(x);
      m.ys.push_back(y);
    }
    for (std::size_t i = 1; i < m.ys.size(); ++i) {
      if (m.ys[i] <= m.ys[i - 1]) {
        throw order_incoherent("letter map is not increasing");
      }
    }
  }
  return real;
}

RealizationReport verify_realization(const Realization& real, const SignAssignment& phi) {
  const Ball& ball = *phi.ball;
  RealizationReport rep;
  rep.elements = ball.size();
  for (std::size_t i = 0; i < ball.size(); ++i) {
    Evaluation ev = real.evaluate(ball.label(i), real.p);
    if (!ev.confident) continue;
    ++rep.decidable;
    int moved = ev.value > real.p ? 1 : ev.value < real.p ? -1 : 0;
    if (moved == static_cast<int>(phi.at(i))) {
      ++rep.eq1_holds;
    } else {
      rep.eq1_failures.push_back(i);
    }
    if (phi.at(i) == Sign::star) {
      ++rep.stars_checked;
      if (moved == 0) ++rep.stars_fixing;
    }
    if (ball.label(i).size() == 2) {
      ++rep.pairs_checked;
      if (ev.value == real.t[real.order.class_of[i]]) ++rep.pairs_agreeing;
    }
  }
  return rep;
}

}  // namespace ordelab
