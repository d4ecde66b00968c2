#include "ordelab/dynamics.hpp"

#include <algorithm>

namespace ordelab {

OrderedAction OrderedAction::from_realization(Realization real) {
  OrderedAction a;
  a.generator_count_ = real.order.ball->rws().generator_count();
  a.basepoint_ = real.p;
  a.points_ = real.t;
  a.real_ = std::move(real);
  return a;
}

OrderedAction OrderedAction::from_affine(AffineModel model, std::size_t generator_count,
                                         std::size_t orbit_radius) {
  OrderedAction a;
  a.generator_count_ = generator_count;
  a.orbit_radius_ = orbit_radius;
  a.model_ = std::move(model);
  for (const Word& w : a.elements(orbit_radius)) {
    Rational v = a.model_->eval(w).apply(a.basepoint_);
    if (std::find(a.points_.begin(), a.points_.end(), v) == a.points_.end()) {
      a.points_.push_back(v);
    }
  }
  return a;
}

std::vector<Word> OrderedAction::elements(std::size_t word_radius) const {
  if (model_) {
    const AffineModel* m = &*model_;
    ModelKeyFn key = [m](const Word& w) { return m->key(w); };
    Ball ball = enumerate_ball(RewritingSystem::cancellation_only(generator_count_), key,
                               word_radius);
    return ball.elements();
  }
  const Ball& ball = *real_->order.ball;
  std::vector<Word> out;
  for (std::size_t i = 0; i < ball.size() && ball.length(i) <= word_radius; ++i) {
    out.push_back(ball.label(i));
  }
  return out;
}

std::optional<Rational> OrderedAction::act(const Word& w, const Rational& x) const {
  if (model_) return model_->eval(w).apply(x);
  Evaluation ev = real_->evaluate(w, x);
  if (!ev.confident) return std::nullopt;
  return ev.value;
}

std::optional<AffineMap> OrderedAction::affine_of(const Word& w) const {
  if (!model_) return std::nullopt;
  return model_->eval(w);
}

std::variant<CrossingWitness, NoneUpToBound> find_crossing(const OrderedAction& action,
                                                           std::size_t word_radius,
                                                           std::size_t power_bound) {
  std::vector<Word> elems = action.elements(word_radius);
  const std::vector<Rational>& pts = action.points();

  // orbit[e][p] holds the decided prefix e(x), e^2(x), ...
  std::vector<std::vector<std::vector<Rational>>> orbit(
      elems.size(), std::vector<std::vector<Rational>>(pts.size()));
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t p = 0; p < pts.size(); ++p) {
      Rational x = pts[p];
      for (std::size_t n = 1; n <= power_bound; ++n) {
        auto y = action.act(elems[e], x);
        if (!y) break;
        orbit[e][p].push_back(*y);
        x = *y;
      }
    }
  }

  for (std::size_t f = 0; f < elems.size(); ++f) {
    for (std::size_t g = 0; g < elems.size(); ++g) {
      if (f == g) continue;
      for (std::size_t iu = 0; iu < pts.size(); ++iu) {
        for (std::size_t iv = 0; iv < pts.size(); ++iv) {
          for (std::size_t iw = 0; iw < pts.size(); ++iw) {
            const Rational& u = pts[iu];
            const Rational& v = pts[iv];
            const Rational& w = pts[iw];
            if (!(u < w && w < v)) continue;
            // an orbit that goes dark before the bound establishes nothing
            if (orbit[g][iu].size() < power_bound || orbit[f][iv].size() < power_bound) {
              continue;
            }
            bool ok = true;
            for (const Rational& y : orbit[g][iu]) {
              if (!(y < v)) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            for (const Rational& y : orbit[f][iv]) {
              if (!(y > u)) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            std::size_t N = 0;
            for (std::size_t n = 0; n < orbit[f][iv].size(); ++n) {
              if (orbit[f][iv][n] < w) {
                N = n + 1;
                break;
              }
            }
            if (N == 0) continue;
            std::size_t M = 0;
            for (std::size_t n = 0; n < orbit[g][iu].size(); ++n) {
              if (orbit[g][iu][n] > w) {
                M = n + 1;
                break;
              }
            }
            if (M == 0) continue;
            return CrossingWitness{elems[f], elems[g], u, v, w, N, M, power_bound};
          }
        }
      }
    }
  }
  return NoneUpToBound{word_radius, power_bound};
}

namespace {

// +1 diverges to +inf, -1 to -inf, 0 stays bounded.
int affine_divergence(const AffineMap& m, const Rational& x) {
  if (m.scale == 1) {
    if (m.offset > 0) return 1;
    if (m.offset < 0) return -1;
    return 0;
  }
  Rational fix = m.offset / (1 - m.scale);
  if (m.scale < 1) return 0;
  if (x > fix) return 1;
  if (x < fix) return -1;
  return 0;
}

}  // namespace

Envelope envelope(const OrderedAction& action, const Word& w, const Rational& x,
                  std::size_t power_bound) {
  Envelope env;
  env.lo = env.hi = x;
  auto widen = [&env](const Rational& v) {
    if (v < env.lo) env.lo = v;
    if (v > env.hi) env.hi = v;
  };
  if (auto fm = action.affine_of(w)) {
    AffineMap inv = fm->inverse();
    for (auto [m, vec] : {std::pair{&*fm, &env.forward}, std::pair{&inv, &env.backward}}) {
      Rational cur = x;
      for (std::size_t n = 1; n <= power_bound; ++n) {
        cur = m->apply(cur);
        vec->push_back(cur);
        widen(cur);
      }
      int d = affine_divergence(*m, x);
      env.unbounded_above = env.unbounded_above || d == 1;
      env.unbounded_below = env.unbounded_below || d == -1;
    }
    return env;
  }
  const Realization* real = action.realization();
  const Word winv = inverse_word(w);
  using DirOut = std::pair<const Word*, std::vector<Rational>*>;
  for (auto [dir, vec] : {DirOut{&w, &env.forward}, DirOut{&winv, &env.backward}}) {
    Rational cur = x;
    for (std::size_t n = 1; n <= power_bound; ++n) {
      Evaluation ev = real->evaluate(*dir, cur);
      if (!ev.confident) {
        if (ev.value > cur) env.unbounded_above = true;
        if (ev.value < cur) env.unbounded_below = true;
        break;
      }
      cur = ev.value;
      vec->push_back(cur);
      widen(cur);
    }
  }
  return env;
}

namespace {

struct ExtInterval {
  // -1 below means the lower end is -inf; +1 above means +inf.
  bool inf_below = false, inf_above = false;
  Rational lo, hi;

  static ExtInterval of(const Envelope& e) {
    return {e.unbounded_below, e.unbounded_above, e.lo, e.hi};
  }

  bool operator==(const ExtInterval& o) const {
    bool lo_eq = inf_below == o.inf_below && (inf_below || lo == o.lo);
    bool hi_eq = inf_above == o.inf_above && (inf_above || hi == o.hi);
    return lo_eq && hi_eq;
  }

  bool contains(const ExtInterval& o) const {
    bool lo_ok = inf_below || (!o.inf_below && lo <= o.lo);
    bool hi_ok = inf_above || (!o.inf_above && hi >= o.hi);
    return lo_ok && hi_ok;
  }

  static bool apart(const ExtInterval& a, const ExtInterval& b) {
    // a strictly below b
    return !a.inf_above && !b.inf_below && a.hi < b.lo;
  }
};

}  // namespace

NestingReport nesting_report(const OrderedAction& action, std::size_t word_radius,
                             std::size_t power_bound, bool crossing_found) {
  std::vector<Word> elems = action.elements(word_radius);
  const std::vector<Rational>& pts = action.points();

  struct Instance {
    std::size_t e, p;
    ExtInterval iv;
  };
  std::vector<Instance> inst;
  for (std::size_t e = 0; e < elems.size(); ++e) {
    for (std::size_t p = 0; p < pts.size(); ++p) {
      inst.push_back({e, p, ExtInterval::of(envelope(action, elems[e], pts[p], power_bound))});
    }
  }

  NestingReport rep;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    for (std::size_t j = i + 1; j < inst.size(); ++j) {
      const ExtInterval& a = inst[i].iv;
      const ExtInterval& b = inst[j].iv;
      if (a == b || a.contains(b) || b.contains(a)) {
        ++rep.nested;
      } else if (ExtInterval::apart(a, b) || ExtInterval::apart(b, a)) {
        ++rep.disjoint;
      } else {
        ++rep.overlapping;
        if (!rep.example) {
          rep.example = OverlapExample{elems[inst[i].e], elems[inst[j].e], pts[inst[i].p],
                                       pts[inst[j].p]};
        }
      }
    }
  }
  rep.artifact = rep.overlapping > 0 && !crossing_found;
  return rep;
}

CofinalReport cofinal_test(const OrderedAction& action, const Word& g, std::size_t bound) {
  const std::vector<Rational>& pts = action.points();
  const Word ginv = inverse_word(g);
  for (const Rational& x : pts) {
    Rational mn = x, mx = x;
    for (const Word* dir : {&g, &ginv}) {
      Rational cur = x;
      for (std::size_t n = 1; n <= bound; ++n) {
        auto y = action.act(*dir, cur);
        if (!y) break;
        cur = *y;
        if (cur < mn) mn = cur;
        if (cur > mx) mx = cur;
      }
    }
    for (const Rational& y : pts) {
      if (mx < y) return {false, x, y, true};
      if (mn > y) return {false, x, y, false};
    }
  }
  return {};
}

std::optional<ConradianViolation> conradian_violation(const SignAssignment& phi,
                                                      std::size_t n_bound) {
  const Ball& ball = *phi.ball;
  for (std::size_t f = 0; f < ball.size(); ++f) {
    if (phi.at(f) != Sign::plus) continue;
    for (std::size_t g = 0; g < ball.size(); ++g) {
      if (g == f || phi.at(g) != Sign::plus) continue;
      Word fg = inverse_word(ball.label(f));
      fg.insert(fg.end(), ball.label(g).begin(), ball.label(g).end());
      if (auto s = phi.eval_word(fg); s && *s != Sign::plus) continue;  // g not after f
      Word acc = inverse_word(ball.label(g));
      acc.insert(acc.end(), ball.label(f).begin(), ball.label(f).end());
      std::vector<std::pair<std::size_t, Sign>> tested;
      bool all_leq = true;
      for (std::size_t n = 1; n <= n_bound; ++n) {
        acc.insert(acc.end(), ball.label(g).begin(), ball.label(g).end());
        if (auto s = phi.eval_word(acc)) {
          tested.emplace_back(n, *s);
          if (*s == Sign::plus) {
            all_leq = false;
            break;
          }
        }
      }
      if (all_leq && !tested.empty()) return ConradianViolation{f, g, std::move(tested)};
    }
  }
  return std::nullopt;
}

std::string_view to_string(OrderOracle::Cmp c) {
  switch (c) {
    case OrderOracle::Cmp::less: return "less";
    case OrderOracle::Cmp::equivalent: return "equivalent";
    case OrderOracle::Cmp::greater: return "greater";
    case OrderOracle::Cmp::undefined: return "undefined";
  }
  return "?";
}

OrderOracle::Cmp ConeOracle::compare(const Word& u, const Word& v) const {
  Word w = inverse_word(u);
  w.insert(w.end(), v.begin(), v.end());
  auto s = phi_.eval_word(w);
  if (!s) return Cmp::undefined;
  switch (*s) {
    case Sign::plus: return Cmp::less;
    case Sign::minus: return Cmp::greater;
    case Sign::star: return Cmp::equivalent;
  }
  return Cmp::undefined;
}

OrderOracle::Cmp AffineOracle::compare(const Word& u, const Word& v) const {
  Rational a = model_.eval(u).apply(basepoint_);
  Rational b = model_.eval(v).apply(basepoint_);
  if (a < b) return Cmp::less;
  if (a > b) return Cmp::greater;
  return Cmp::equivalent;
}

std::string_view to_string(RecurrenceVerdict v) {
  switch (v) {
    case RecurrenceVerdict::recurrent_up_to_bound: return "RECURRENT-UP-TO-BOUND";
    case RecurrenceVerdict::fails: return "FAILS";
    case RecurrenceVerdict::undecided: return "UNDECIDED";
  }
  return "?";
}

RecurrenceOutcome recurrence_check(const OrderOracle& oracle, const std::vector<Word>& chain,
                                   const Word& h, std::size_t bound) {
  RecurrenceOutcome out;
  out.bound = bound;
  std::vector<Word> shifted = chain;  // chain[i] h^n as n grows
  for (std::size_t n = 1; n <= bound; ++n) {
    for (Word& w : shifted) w.insert(w.end(), h.begin(), h.end());
    bool defined = true, holds = true;
    for (std::size_t i = 0; i + 1 < shifted.size(); ++i) {
      OrderOracle::Cmp c = oracle.compare(shifted[i], shifted[i + 1]);
      if (c == OrderOracle::Cmp::undefined) {
        defined = false;
        break;
      }
      holds = holds && c == OrderOracle::Cmp::less;
    }
    if (defined) {
      out.decidable.push_back(n);
      if (holds) out.witnesses.push_back(n);
    }
  }
  bool witness_high = std::any_of(out.witnesses.begin(), out.witnesses.end(),
                                  [&](std::size_t n) { return 2 * n > bound; });
  bool decided_high = std::any_of(out.decidable.begin(), out.decidable.end(),
                                  [&](std::size_t n) { return 2 * n > bound; });
  if (witness_high) {
    out.verdict = RecurrenceVerdict::recurrent_up_to_bound;
  } else if (out.decidable.size() >= (bound + 1) / 2 && decided_high) {
    out.verdict = RecurrenceVerdict::fails;
  } else {
    out.verdict = RecurrenceVerdict::undecided;
  }
  return out;
}

}  // namespace ordelab
