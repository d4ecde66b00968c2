#include "ordelab/ball.hpp"

#include <algorithm>

namespace ordelab {

std::string Ball::key_of(const Word& w) const {
  if (model_key_) return (*model_key_)(w);
  return word_key(rws_.normal_form(w));
}

std::optional<std::size_t> Ball::find(const Word& w) const {
  auto it = index_by_key_.find(key_of(w));
  if (it == index_by_key_.end() || it->second == kNoIndex) return std::nullopt;
  return it->second;
}

std::variant<std::size_t, Outside> Ball::multiply(std::size_t i, std::size_t j) const {
  Word w = elements_[i];
  w.insert(w.end(), elements_[j].begin(), elements_[j].end());
  if (auto idx = find(w)) return *idx;
  return Outside{rws_.normalize(std::move(w)).word};
}

Ball enumerate_ball(const RewritingSystem& rws, std::optional<ModelKeyFn> model_key,
                    std::size_t radius, std::size_t cap) {
  Ball ball(rws, std::move(model_key), radius);
  const std::size_t ranks = 2 * rws.generator_count();

  Word empty;
  ball.index_by_key_.emplace(ball.key_of(empty), 0);
  ball.elements_.push_back(empty);

  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  for (std::size_t r = 1; r <= radius && !ball.truncated_by_cap_; ++r) {
    std::vector<std::pair<Word, std::string>> fresh;
    for (std::size_t p = layer_begin; p < layer_end && !ball.truncated_by_cap_; ++p) {
      for (std::size_t rank = 0; rank < ranks; ++rank) {
        Letter l{static_cast<std::uint16_t>(rank / 2), rank % 2 == 1};
        const Word& parent = ball.elements_[p];
        if (!parent.empty() && parent.back() == l.inverse()) continue;
        Word cand = parent;
        cand.push_back(l);
        Word label = ball.model_key_ ? cand : ball.rws_.normal_form(cand);
        std::string key = ball.key_of(cand);
        if (ball.index_by_key_.contains(key)) continue;
        if (ball.elements_.size() + fresh.size() == cap) {
          ball.truncated_by_cap_ = true;
          break;
        }
        ball.index_by_key_.emplace(key, kNoIndex);
        fresh.emplace_back(std::move(label), std::move(key));
      }
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
    layer_begin = ball.elements_.size();
    for (auto& [label, key] : fresh) {
      ball.index_by_key_[key] = ball.elements_.size();
      ball.elements_.push_back(std::move(label));
    }
    layer_end = ball.elements_.size();
    if (layer_begin == layer_end) break;  // group exhausted before the radius
  }

  ball.generator_elements_.assign(ranks, kNoIndex);
  for (std::size_t rank = 0; rank < ranks; ++rank) {
    Word w{Letter{static_cast<std::uint16_t>(rank / 2), rank % 2 == 1}};
    if (auto idx = ball.find(w)) ball.generator_elements_[rank] = *idx;
  }
  ball.inverse_of_.assign(ball.elements_.size(), kNoIndex);
  for (std::size_t i = 0; i < ball.elements_.size(); ++i) {
    if (auto idx = ball.find(inverse_word(ball.elements_[i]))) ball.inverse_of_[i] = *idx;
  }
  return ball;
}

}  // namespace ordelab
