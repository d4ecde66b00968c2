#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ordelab/model.hpp"
#include "ordelab/rewriting.hpp"
#include "ordelab/word.hpp"

namespace ordelab {

inline constexpr std::size_t kDefaultBallCap = 200000;
inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Product that leaves the truncation.
struct Outside {
  Word normal_form;
};

// Elements of the ball of a given radius in the word metric, one index per
// group element.  Labels are geodesic representatives, indices sorted by
// (length, shortlex) of the label.  Deduplication uses the model key when
// one is given and the rewriting normal form otherwise; the latter is only
// a true group ball when the system is confluent.
class Ball {
 public:
  const RewritingSystem& rws() const { return rws_; }
  std::size_t radius() const { return radius_; }
  bool truncated_by_cap() const { return truncated_by_cap_; }
  bool has_model() const { return static_cast<bool>(model_key_); }

  std::size_t size() const { return elements_.size(); }
  const std::vector<Word>& elements() const { return elements_; }
  const Word& label(std::size_t i) const { return elements_[i]; }
  std::size_t length(std::size_t i) const { return elements_[i].size(); }

  std::size_t identity() const { return 0; }
  // Index of each letter's element, by letter rank; kNoIndex if absent.
  const std::vector<std::size_t>& generator_elements() const { return generator_elements_; }
  // inverse_of()[i] is kNoIndex only when the cap truncated enumeration.
  const std::vector<std::size_t>& inverse_of() const { return inverse_of_; }

  std::string key_of(const Word& w) const;
  std::optional<std::size_t> find(const Word& w) const;
  std::variant<std::size_t, Outside> multiply(std::size_t i, std::size_t j) const;
  std::size_t invert(std::size_t i) const { return inverse_of_[i]; }

 private:
  friend Ball enumerate_ball(const RewritingSystem& rws, std::optional<ModelKeyFn> model_key,
                             std::size_t radius, std::size_t cap);

  Ball(RewritingSystem rws, std::optional<ModelKeyFn> model_key, std::size_t radius)
      : rws_(std::move(rws)), model_key_(std::move(model_key)), radius_(radius) {}

  RewritingSystem rws_;
  std::optional<ModelKeyFn> model_key_;
  std::size_t radius_;
  bool truncated_by_cap_ = false;
  std::vector<Word> elements_;
  std::vector<std::size_t> generator_elements_;
  std::vector<std::size_t> inverse_of_;
  std::unordered_map<std::string, std::size_t> index_by_key_;
};

Ball enumerate_ball(const RewritingSystem& rws, std::optional<ModelKeyFn> model_key,
                    std::size_t radius, std::size_t cap = kDefaultBallCap);

inline Ball enumerate_ball(const RewritingSystem& rws, std::size_t radius,
                           std::size_t cap = kDefaultBallCap) {
  return enumerate_ball(rws, std::nullopt, radius, cap);
}

}  // namespace ordelab
