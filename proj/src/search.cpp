#include "ordelab/search.hpp"

#include <future>

namespace ordelab {

namespace {

constexpr std::int8_t kUnset = 2;

struct Searcher {
  const Ball& ball;
  const std::vector<std::vector<std::size_t>>& prod;
  std::size_t limit;
  SearchOutcome out;

  Sign sign_at(const std::vector<std::int8_t>& st, std::size_t i) const {
    return static_cast<Sign>(st[i]);
  }

  // Sets i (and its inverse partner) to s.  False on conflict.
  bool try_assign(std::vector<std::int8_t>& st, std::size_t i, Sign s,
                  std::vector<std::size_t>& fresh) const {
    if (st[i] != kUnset) return sign_at(st, i) == s;
    st[i] = static_cast<std::int8_t>(s);
    fresh.push_back(i);
    std::size_t j = ball.inverse_of()[i];
    if (j == kNoIndex) return true;  // truncated ball, no partner to pin
    if (j == i) return s == Sign::star;
    if (st[j] != kUnset) return sign_at(st, j) == negate(s);
    st[j] = static_cast<std::int8_t>(negate(s));
    fresh.push_back(j);
    return true;
  }

  bool propagate(std::vector<std::int8_t>& st, std::vector<std::size_t> queue) const {
    while (!queue.empty()) {
      std::size_t k = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (st[i] == kUnset) continue;
        for (auto [a, b] : {std::pair{k, i}, std::pair{i, k}}) {
          auto expected = forced_product(sign_at(st, a), sign_at(st, b));
          if (!expected) continue;
          std::size_t p = prod[a][b];
          if (p == kNoIndex) continue;
          if (st[p] == kUnset) {
            if (!try_assign(st, p, *expected, queue)) return false;
          } else if (sign_at(st, p) != *expected) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void dfs(const std::vector<std::int8_t>& st) {
    if (out.hit_limit) return;
    std::size_t next = kNoIndex;
    for (std::size_t i = 0; i < st.size(); ++i) {
      if (st[i] == kUnset) {
        next = i;
        break;
      }
    }
    if (next == kNoIndex) {
      SignAssignment phi{&ball, {}};
      phi.signs.reserve(st.size());
      for (std::int8_t s : st) phi.signs.push_back(static_cast<Sign>(s));
      if (verify_relative_cone(phi).empty()) {
        if (out.assignments.size() == limit) {
          out.hit_limit = true;
        } else {
          out.assignments.push_back(std::move(phi));
        }
      }
      return;
    }
    for (Sign s : {Sign::plus, Sign::minus, Sign::star}) {
      ++out.nodes;
      std::vector<std::int8_t> child = st;
      std::vector<std::size_t> fresh;
      if (try_assign(child, next, s, fresh) && propagate(child, std::move(fresh))) {
        dfs(child);
      }
      if (out.hit_limit) return;
    }
  }
};

}  // namespace

SearchOutcome search_cones(const Ball& ball, const SearchConstraints& constraints,
                           std::size_t limit, unsigned jobs) {
  std::vector<std::vector<std::size_t>> prod(ball.size(),
                                             std::vector<std::size_t>(ball.size(), kNoIndex));
  for (std::size_t i = 0; i < ball.size(); ++i) {
    for (std::size_t j = 0; j < ball.size(); ++j) {
      auto r = ball.multiply(i, j);
      if (std::holds_alternative<std::size_t>(r)) prod[i][j] = std::get<std::size_t>(r);
    }
  }

  Searcher root{ball, prod, limit, {}};
  std::vector<std::int8_t> st(ball.size(), kUnset);
  std::vector<std::size_t> fresh;
  bool ok = root.try_assign(st, ball.identity(), Sign::star, fresh);
  for (auto [i, s] : constraints.forced) {
    if (!ok) break;
    if (i >= ball.size()) throw std::invalid_argument("forced index outside the ball");
    ok = root.try_assign(st, i, s, fresh);
  }
  if (ok) ok = root.propagate(st, std::move(fresh));
  if (!ok) return {};

  std::size_t first_free = kNoIndex;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (st[i] == kUnset) {
      first_free = i;
      break;
    }
  }

  if (jobs <= 1 || first_free == kNoIndex) {
    root.dfs(st);
    return std::move(root.out);
  }

  auto branch = [&](Sign s) {
    Searcher sub{ball, prod, limit, {}};
    sub.out.nodes = 1;
    std::vector<std::int8_t> child = st;
    std::vector<std::size_t> q;
    if (sub.try_assign(child, first_free, s, q) && sub.propagate(child, std::move(q))) {
      sub.dfs(child);
    }
    return std::move(sub.out);
  };
  auto fut_plus = std::async(std::launch::async, branch, Sign::plus);
  auto fut_minus = std::async(std::launch::async, branch, Sign::minus);
  auto fut_star = std::async(std::launch::async, branch, Sign::star);

  SearchOutcome merged;
  for (SearchOutcome part : {fut_plus.get(), fut_minus.get(), fut_star.get()}) {
    merged.nodes += part.nodes;
    merged.hit_limit = merged.hit_limit || part.hit_limit;
    for (SignAssignment& a : part.assignments) {
      if (merged.assignments.size() == limit) {
        merged.hit_limit = true;
        break;
      }
      merged.assignments.push_back(std::move(a));
    }
  }
  return merged;
}

}  // namespace ordelab
