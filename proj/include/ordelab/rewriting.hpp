#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordelab/word.hpp"

namespace ordelab {

// One rewrite rule lhs -> rhs.  Rules must be strictly shortlex-decreasing,
// which makes every system here terminating.
struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct NormalizeOutcome {
  Word word;
  std::uint64_t steps = 0;
  bool budget_exhausted = false;
};

inline constexpr std::uint64_t kDefaultRewriteBudget = 1000000;

class RewritingSystem {
 public:
  // Throws std::invalid_argument unless every rule has a nonempty lhs, is
  // strictly shortlex-decreasing, stays inside the alphabet, and no two
  // rules share a lhs.
  RewritingSystem(std::size_t generator_count, std::vector<RewriteRule> rules);

  // Free cancellation rules x x^-1 -> 1, x^-1 x -> 1 for each generator.
  static RewritingSystem cancellation_only(std::size_t generator_count);

  // One rule per nonempty line: "lhs -> rhs".  Words use the same syntax as
  // relators ("a b a^-1", "1" for the empty word).  '#' starts a comment.
  static RewritingSystem parse(const std::vector<std::string>& generator_names,
                               std::string_view text);

  std::size_t generator_count() const { return generator_count_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  // Leftmost redex first; among rules matching at the same position, the one
  // with the lowest index wins.  Each applied rule counts as one step.
  NormalizeOutcome normalize(Word w, std::uint64_t budget = kDefaultRewriteBudget) const;

  // As normalize, but throws std::runtime_error if the budget runs out.
  Word normal_form(const Word& w, std::uint64_t budget = kDefaultRewriteBudget) const;

 private:
  std::size_t generator_count_;
  std::vector<RewriteRule> rules_;
  std::size_t max_lhs_ = 0;
};

enum class Confluence { confluent, not_confluent, inconclusive };

std::string_view to_string(Confluence c);

struct OverlapWitness {
  std::size_t rule_i = 0;
  std::size_t rule_j = 0;
  std::size_t offset = 0;  // position of rule_j's lhs inside the peak
  Word peak;
  Word left_nf;   // normal form after firing rule_i at position 0
  Word right_nf;  // normal form after firing rule_j at the offset
};

struct ConfluenceReport {
  Confluence status = Confluence::inconclusive;
  std::uint64_t pairs_checked = 0;
  std::uint64_t pair_count = 0;
  std::optional<OverlapWitness> witness;
};

// Critical-pair check.  The systems here are terminating, so joinability of
// every overlap and containment peak is equivalent to confluence; a system
// with all pairs joinable is confluent, and the first non-joinable peak is
// returned as a witness.  pair_bound caps how many peaks are normalized
// before giving up with an inconclusive report.
ConfluenceReport check_confluence(const RewritingSystem& rws,
                                  std::uint64_t pair_bound = 100000);

}  // namespace ordelab
