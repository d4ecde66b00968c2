#include "ordelab/ball.hpp"
#include "ordelab/catalog.hpp"

#include <doctest.h>

using namespace ordelab;

namespace {

const CatalogEntry& preset(const char* name) { return *find_preset(name); }

std::vector<std::string> labels_of(const Ball& b, const std::vector<std::string>& gens) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < b.size(); ++i) out.push_back(format_word(b.label(i), gens));
  return out;
}

}  // namespace

TEST_CASE("abelian balls grow linearly") {
  const CatalogEntry& e = preset("z2");
  RewritingSystem rws = e.rws();
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r <= 3; ++r) sizes.push_back(enumerate_ball(rws, r).size());
  CHECK(sizes == std::vector<std::size_t>{1, 5, 13, 25});
}

TEST_CASE("ball labels are geodesic normal forms in shortlex layers") {
  Ball b = enumerate_ball(preset("z2").rws(), 2);
  auto gens = preset("z2").presentation().generators;
  CHECK(labels_of(b, gens) ==
        std::vector<std::string>{"1", "a", "a^-1", "b", "b^-1", "a^2", "a b", "a b^-1", "a^-2",
                                 "a^-1 b", "a^-1 b^-1", "b^2", "b^-2"});
  for (std::size_t i = 1; i < b.size(); ++i) {
    CHECK(b.length(i - 1) <= b.length(i));
    if (b.length(i - 1) == b.length(i)) CHECK(shortlex_less(b.label(i - 1), b.label(i)));
  }
}

TEST_CASE("model keys merge labels the rules cannot") {
  const CatalogEntry& e = preset("bs12");
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r <= 4; ++r) {
    sizes.push_back(enumerate_ball(e.rws(), e.model_key(), r).size());
  }
  CHECK(sizes == std::vector<std::size_t>{1, 5, 17, 43, 93});

  Ball b = enumerate_ball(e.rws(), e.model_key(), 2);
  auto gens = e.presentation().generators;
  CHECK(labels_of(b, gens) ==
        std::vector<std::string>{"1", "a", "a^-1", "b", "b^-1", "a^2", "a b", "a b^-1", "a^-2",
                                 "a^-1 b", "a^-1 b^-1", "b a", "b a^-1", "b^2", "b^-1 a",
                                 "b^-1 a^-1", "b^-2"});
}

TEST_CASE("heisenberg balls match the cubic growth start") {
  const CatalogEntry& e = preset("heis");
  std::vector<std::size_t> sizes;
  for (std::size_t r = 0; r <= 3; ++r) {
    sizes.push_back(enumerate_ball(e.rws(), e.model_key(), r).size());
  }
  CHECK(sizes == std::vector<std::size_t>{1, 7, 29, 83});
}

TEST_CASE("identity generators and inverses are indexed") {
  Ball b = enumerate_ball(preset("z2").rws(), 2);
  CHECK(b.identity() == 0);
  CHECK(b.label(0).empty());
  auto gens = b.generator_elements();
  REQUIRE(gens.size() == 4);  // a, a^-1, b, b^-1 by rank
  CHECK(gens[0] == 1);
  CHECK(gens[1] == 2);
  CHECK(gens[2] == 3);
  CHECK(gens[3] == 4);
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t j = b.invert(i);
    REQUIRE(j != kNoIndex);
    CHECK(b.invert(j) == i);
  }
}

TEST_CASE("multiplication inside the ball is associative with the labels") {
  Ball b = enumerate_ball(preset("klein").rws(), 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto r = b.multiply(i, j);
      Word prod = b.label(i);
      const Word& lj = b.label(j);
      prod.insert(prod.end(), lj.begin(), lj.end());
      Word nf = preset("klein").rws().normal_form(prod);
      if (const auto* idx = std::get_if<std::size_t>(&r)) {
        CHECK(b.label(*idx) == nf);
      } else {
        CHECK(std::get<Outside>(r).normal_form == nf);
        CHECK_FALSE(b.find(nf).has_value());
      }
    }
  }
}

TEST_CASE("a cap truncates the enumeration and says so") {
  Ball b = enumerate_ball(preset("z2").rws(), std::nullopt, 3, 7);
  CHECK(b.truncated_by_cap());
  CHECK(b.size() <= 7);
  CHECK_FALSE(enumerate_ball(preset("z2").rws(), 3).truncated_by_cap());
}

TEST_CASE("find answers by group element not spelling") {
  const CatalogEntry& e = preset("bs12");
  Ball b = enumerate_ball(e.rws(), e.model_key(), 2);
  auto gens = e.presentation().generators;
  // a b a^-1 and b^2 spell the same element; only the geodesic is stored
  auto idx = b.find(parse_word("a b a^-1", gens));
  REQUIRE(idx.has_value());
  CHECK(format_word(b.label(*idx), gens) == "b^2");
  CHECK_FALSE(b.find(parse_word("a^3", gens)).has_value());
}
