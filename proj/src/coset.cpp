#include "ordelab/coset.hpp"

#include <algorithm>
#include <numeric>

namespace ordelab {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// phi(g_i^-1 g_j) when the quotient lies in the ball.
std::optional<Sign> quotient_sign(const SignAssignment& phi, std::size_t i, std::size_t j) {
  const Ball& ball = *phi.ball;
  Word w = inverse_word(ball.label(i));
  w.insert(w.end(), ball.label(j).begin(), ball.label(j).end());
  return phi.eval_word(w);
}

}  // namespace

CosetOrder cone_to_coset_order(const SignAssignment& phi) {
  const Ball& ball = *phi.ball;
  const std::size_t n = ball.size();

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (quotient_sign(phi, i, j) == Sign::star) uf.unite(i, j);
    }
  }

  CosetOrder order;
  order.ball = &ball;
  order.class_of.assign(n, kNoIndex);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = uf.find(i);
    if (order.class_of[root] == kNoIndex) {
      order.class_of[root] = order.rep_of.size();
      order.rep_of.push_back(root);
    }
    order.class_of[i] = order.class_of[root];
  }

  const std::size_t k = order.class_count();
  order.rel.assign(k, std::vector<std::int8_t>(k, kRelUnknown));
  for (std::size_t c = 0; c < k; ++c) order.rel[c][c] = 0;

  // In-ball class translates: trans[h][c] lists every class that h times an
  // element of c can reach.  A coset split across classes by the truncation
  // may translate into several.
  std::vector<std::vector<std::vector<std::size_t>>> trans(
      n, std::vector<std::vector<std::size_t>>(k));
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      auto prod = ball.multiply(h, i);
      if (std::holds_alternative<std::size_t>(prod)) {
        trans[h][order.class_of[i]].push_back(order.class_of[std::get<std::size_t>(prod)]);
      }
    }
    for (auto& images : trans[h]) {
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> worklist;
  auto record = [&](std::size_t x, std::size_t y, std::int8_t r) {
    if (order.rel[x][y] == kRelUnknown) {
      order.rel[x][y] = r;
      order.rel[y][x] = static_cast<std::int8_t>(-r);
      worklist.emplace_back(r == 1 ? x : y, r == 1 ? y : x);
    } else if (order.rel[x][y] != r) {
      throw order_incoherent("conflicting coset relations");
    }
  };

  // Every decided pair drags along its transitive consequences and, by left
  // invariance, its in-ball translates.  A cycle or a translate that is
  // already decided the other way shows up as a conflicting record.
  auto drain = [&] {
    while (!worklist.empty()) {
      auto [x, y] = worklist.back();  // x before y
      worklist.pop_back();
      for (std::size_t m = 0; m < k; ++m) {
        if (order.rel[y][m] == 1 && order.rel[x][m] != 1) record(x, m, 1);
        if (order.rel[m][x] == 1 && order.rel[m][y] != 1) record(m, y, 1);
      }
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t cx : trans[h][x]) {
          for (std::size_t cy : trans[h][y]) {
            if (cx != cy && order.rel[cx][cy] != 1) record(cx, cy, 1);
          }
        }
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ci = order.class_of[i];
      std::size_t cj = order.class_of[j];
      if (ci == cj) continue;
      auto s = quotient_sign(phi, i, j);
      if (s == Sign::plus) record(ci, cj, 1);
      if (s == Sign::minus) record(ci, cj, -1);
      if (s == Sign::star) throw order_incoherent("starred quotient across classes");
    }
  }
  drain();

  // Pairs the ball genuinely leaves free are settled smallest class first
  // and chased to their consequences, so the completed order stays left
  // invariant wherever the ball can test it.  A choice whose consequences
  // collide is reversed; if both directions collide the cone admits no
  // invariant completion at this radius.
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = x + 1; y < k; ++y) {
      if (order.rel[x][y] != kRelUnknown) continue;
      order.undecided_pairs.emplace_back(x, y);
      auto snapshot = order.rel;
      try {
        record(x, y, 1);
        drain();
      } catch (const order_incoherent&) {
        order.rel = std::move(snapshot);
        worklist.clear();
        record(x, y, -1);
        drain();
      }
    }
  }
  order.total = order.undecided_pairs.empty();

  // Deterministic linear extension: repeatedly take the class with nothing
  // unplaced before it, smallest representative first.  For a total order
  // this is the order itself.
  order.position.assign(k, kNoIndex);
  std::vector<char> placed(k, 0);
  for (std::size_t rank = 0; rank < k; ++rank) {
    std::size_t best = kNoIndex;
    for (std::size_t c = 0; c < k; ++c) {
      if (placed[c]) continue;
      bool minimal = true;
      for (std::size_t d = 0; d < k; ++d) {
        if (!placed[d] && order.rel[d][c] == 1) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      if (best == kNoIndex || order.rep_of[c] < order.rep_of[best]) best = c;
    }
    placed[best] = 1;
    order.position[best] = rank;
    order.class_by_position.push_back(best);
  }
  return order;
}

ConeFromOrder coset_order_to_cone(const CosetOrder& order,
                                  const std::vector<Word>& c_generators) {
  const Ball& ball = *order.ball;
  const std::size_t idc = order.identity_class();

  for (const Word& g : c_generators) {
    auto idx = ball.find(g);
    if (!idx || order.class_of[*idx] != idc) {
      throw std::invalid_argument("designated C generator is not in the identity class");
    }
  }

  ConeFromOrder out{SignAssignment{&ball, {}}, std::nullopt};
  out.assignment.signs.reserve(ball.size());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::size_t c = order.class_of[i];
    if (c == idc) {
      out.assignment.signs.push_back(Sign::star);
      continue;
    }
    std::int8_t r = order.rel[idc][c];
    if (r == kRelUnknown) {
      throw order_incoherent("order does not place a coset against the identity class");
    }
    out.assignment.signs.push_back(r == 1 ? Sign::plus : Sign::minus);
  }

  // First left-invariance failure: f before g whose translates by h compare
  // the other way.
  for (std::size_t h = 0; h < ball.size() && !out.invariance; ++h) {
    for (std::size_t f = 0; f < order.class_count() && !out.invariance; ++f) {
      for (std::size_t g = 0; g < order.class_count(); ++g) {
        if (order.rel[f][g] != 1) continue;
        auto tf = ball.multiply(h, order.rep_of[f]);
        auto tg = ball.multiply(h, order.rep_of[g]);
        if (!std::holds_alternative<std::size_t>(tf) ||
            !std::holds_alternative<std::size_t>(tg)) {
          continue;
        }
        std::size_t cf = order.class_of[std::get<std::size_t>(tf)];
        std::size_t cg = order.class_of[std::get<std::size_t>(tg)];
        if (cf != cg && order.rel[cf][cg] == -1) {
          out.invariance = LeftInvarianceViolation{h, f, g};
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace ordelab
