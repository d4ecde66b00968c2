#include "ordelab/rewriting.hpp"

#include <algorithm>
#include <sstream>

namespace ordelab {

RewritingSystem::RewritingSystem(std::size_t generator_count, std::vector<RewriteRule> rules)
    : generator_count_(generator_count), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const RewriteRule& r = rules_[i];
    if (r.lhs.empty()) {
      throw std::invalid_argument("rule " + std::to_string(i) + ": empty lhs");
    }
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (Letter l : *side) {
        if (l.gen >= generator_count_) {
          throw std::invalid_argument("rule " + std::to_string(i) + ": letter outside alphabet");
        }
      }
    }
    if (!shortlex_less(r.rhs, r.lhs)) {
      throw std::invalid_argument("rule " + std::to_string(i) + ": not shortlex-decreasing");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[j].lhs == r.lhs) {
        throw std::invalid_argument("rules " + std::to_string(j) + " and " + std::to_string(i) +
                                    " share a lhs");
      }
    }
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
}

RewritingSystem RewritingSystem::cancellation_only(std::size_t generator_count) {
  std::vector<RewriteRule> rules;
  for (std::size_t g = 0; g < generator_count; ++g) {
    Letter x{static_cast<std::uint16_t>(g), false};
    rules.push_back({{x, x.inverse()}, {}});
    rules.push_back({{x.inverse(), x}, {}});
  }
  return RewritingSystem(generator_count, std::move(rules));
}

RewritingSystem RewritingSystem::parse(const std::vector<std::string>& generator_names,
                                       std::string_view text) {
  std::vector<RewriteRule> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw parse_error(lineno, 1, "rule line without '->'");
    }
    Word lhs = parse_word(std::string_view(line).substr(0, arrow), generator_names, false);
    Word rhs = parse_word(std::string_view(line).substr(arrow + 2), generator_names, false);
    rules.push_back({std::move(lhs), std::move(rhs)});
  }
  return RewritingSystem(generator_names.size(), std::move(rules));
}

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& lhs) {
  if (pos + lhs.size() > w.size()) return false;
  return std::equal(lhs.begin(), lhs.end(), w.begin() + pos);
}

}  // namespace

NormalizeOutcome RewritingSystem::normalize(Word w, std::uint64_t budget) const {
  NormalizeOutcome out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const RewriteRule* hit = nullptr;
    for (const RewriteRule& r : rules_) {
      if (matches_at(w, pos, r.lhs)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      ++pos;
      continue;
    }
    if (out.steps == budget) {
      out.budget_exhausted = true;
      break;
    }
    Word next;
    next.reserve(w.size() - hit->lhs.size() + hit->rhs.size());
    next.insert(next.end(), w.begin(), w.begin() + pos);
    next.insert(next.end(), hit->rhs.begin(), hit->rhs.end());
    next.insert(next.end(), w.begin() + pos + hit->lhs.size(), w.end());
    w = std::move(next);
    ++out.steps;
    // No redex can start before pos - max_lhs_ + 1: anything earlier ends
    // strictly left of the edit and was already scanned.
    pos = pos > max_lhs_ ? pos - max_lhs_ + 1 : 0;
  }
  out.word = std::move(w);
  return out;
}

Word RewritingSystem::normal_form(const Word& w, std::uint64_t budget) const {
  NormalizeOutcome out = normalize(w, budget);
  if (out.budget_exhausted) {
    throw std::runtime_error("rewrite budget exhausted after " + std::to_string(out.steps) +
                             " steps");
  }
  return std::move(out.word);
}

std::string_view to_string(Confluence c) {
  switch (c) {
    case Confluence::confluent: return "confluent";
    case Confluence::not_confluent: return "not-confluent";
    case Confluence::inconclusive: return "inconclusive";
  }
  return "?";
}

ConfluenceReport check_confluence(const RewritingSystem& rws, std::uint64_t pair_bound) {
  const auto& rules = rws.rules();
  ConfluenceReport report;
  // A peak is any word where rule_i fires at 0 and rule_j fires at `offset`
  // with the two lhs occurrences sharing at least one letter.
  auto each_peak = [&](auto&& visit) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Word& li = rules[i].lhs;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        const Word& lj = rules[j].lhs;
        for (std::size_t off = 0; off < li.size(); ++off) {
          if (i == j && off == 0) continue;
          std::size_t shared = std::min(lj.size(), li.size() - off);
          if (!std::equal(lj.begin(), lj.begin() + shared, li.begin() + off)) continue;
          if (!visit(i, j, off)) return;
        }
      }
    }
  };
  each_peak([&](std::size_t, std::size_t, std::size_t) {
    ++report.pair_count;
    return true;
  });
  bool done = true;
  each_peak([&](std::size_t i, std::size_t j, std::size_t off) {
    if (report.pairs_checked == pair_bound) {
      done = false;
      return false;
    }
    const Word& li = rules[i].lhs;
    const Word& lj = rules[j].lhs;
    Word peak = li;
    if (off + lj.size() > li.size()) {
      peak.insert(peak.end(), lj.begin() + (li.size() - off), lj.end());
    }
    Word left = rules[i].rhs;
    left.insert(left.end(), peak.begin() + li.size(), peak.end());
    Word right(peak.begin(), peak.begin() + off);
    right.insert(right.end(), rules[j].rhs.begin(), rules[j].rhs.end());
    right.insert(right.end(), peak.begin() + off + lj.size(), peak.end());
    NormalizeOutcome ln = rws.normalize(std::move(left), 10000000);
    NormalizeOutcome rn = rws.normalize(std::move(right), 10000000);
    ++report.pairs_checked;
    if (ln.budget_exhausted || rn.budget_exhausted) {
      done = false;
      return false;
    }
    if (ln.word != rn.word) {
      report.status = Confluence::not_confluent;
      report.witness = OverlapWitness{i, j, off, std::move(peak), std::move(ln.word),
                                      std::move(rn.word)};
      return false;
    }
    return true;
  });
  if (report.status != Confluence::not_confluent) {
    report.status = done ? Confluence::confluent : Confluence::inconclusive;
  }
  return report;
}

}  // namespace ordelab
