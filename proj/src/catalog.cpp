#include "ordelab/catalog.hpp"

#include <stdexcept>

namespace ordelab {

namespace {

constexpr std::string_view k_z_rules = R"(a a^-1 -> 1
a^-1 a -> 1)";

constexpr std::string_view k_f2_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1)";

constexpr std::string_view k_z2_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1
b a -> a b
b a^-1 -> a^-1 b
b^-1 a -> a b^-1
b^-1 a^-1 -> a^-1 b^-1)";

constexpr std::string_view k_klein_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1
b a -> a^-1 b
b a^-1 -> a b
b^-1 a -> a^-1 b^-1
b^-1 a^-1 -> a b^-1)";

constexpr std::string_view k_bs12_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1
a b a^-1 -> b b
a b^-1 a^-1 -> b^-1 b^-1
a^-1 b b -> b a^-1
a^-1 b^-1 b^-1 -> b^-1 a^-1
b a b^-1 -> b^-1 a
b a^-1 b^-1 -> a^-1 b
b b a -> a b
b^-1 a b -> b a
b^-1 a^-1 b -> a^-1 b^-1
b^-1 b^-1 a -> a b^-1
b a^-1 a^-1 b^-1 -> a^-1 b a^-1 b
b a^-1 b a -> a^-1 b a b
b b b b -> a b b a^-1
b^-1 a a b -> b a b a
b^-1 a b^-1 a -> b a a b^-1
b^-1 a^-1 a^-1 b -> a^-1 b^-1 a^-1 b^-1
b^-1 a^-1 b^-1 a -> a^-1 b^-1 a b^-1
b^-1 b^-1 b^-1 b^-1 -> a b^-1 b^-1 a^-1
b a b b a^-1 -> a b b a^-1 b
b^-1 a b^-1 b^-1 a^-1 -> a b^-1 b^-1 a^-1 b^-1
a^-1 a^-1 b a b b -> b a^-1 a^-1 b a
a^-1 a^-1 b^-1 a b^-1 b^-1 -> b^-1 a^-1 a^-1 b^-1 a
a^-1 b a^-1 b a^-1 b -> b a^-1 a^-1 a^-1 b^-1
a^-1 b^-1 a^-1 b^-1 a^-1 b^-1 -> b^-1 a^-1 a^-1 a^-1 b
b a a b^-1 b^-1 a^-1 -> b^-1 a b^-1 b^-1 b^-1
b a b a a b^-1 -> b^-1 a a b^-1 a
b a b a b a -> b^-1 a a a b
b a b b b a^-1 -> a b b b a^-1 b
b a^-1 a^-1 b a a -> a^-1 a^-1 b a a b
b^-1 a b^-1 b^-1 b^-1 a^-1 -> a b^-1 b^-1 b^-1 a^-1 b^-1
b^-1 a^-1 a^-1 b^-1 a a -> a^-1 a^-1 b^-1 a a b^-1)";

constexpr std::string_view k_heis_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1
c a -> a c
c a^-1 -> a^-1 c
c b -> b c
c b^-1 -> b^-1 c
c c^-1 -> 1
c^-1 a -> a c^-1
c^-1 a^-1 -> a^-1 c^-1
c^-1 b -> b c^-1
c^-1 b^-1 -> b^-1 c^-1
c^-1 c -> 1
a b a^-1 -> b c
a b c^-1 -> b a
a b^-1 a^-1 -> b^-1 c^-1
a b^-1 c -> b^-1 a
a^-1 b a -> b c^-1
a^-1 b c -> b a^-1
a^-1 b^-1 a -> b^-1 c
a^-1 b^-1 c^-1 -> b^-1 a^-1
b a b^-1 -> a c^-1
b a c -> a b
b a^-1 b^-1 -> a^-1 c
b a^-1 c^-1 -> a^-1 b
b^-1 a b -> a c
b^-1 a c^-1 -> a b^-1
b^-1 a^-1 b -> a^-1 c^-1
b^-1 a^-1 c -> a^-1 b^-1
a b a c^-1 -> b a a
a b b c^-1 -> b a b
a b^-1 a c -> b^-1 a a
a b^-1 b^-1 c -> b^-1 a b^-1
a^-1 b a^-1 c -> b a^-1 a^-1
a^-1 b b c -> b a^-1 b
a^-1 b^-1 a^-1 c^-1 -> b^-1 a^-1 a^-1
a^-1 b^-1 b^-1 c^-1 -> b^-1 a^-1 b^-1
b a a b -> a b b a
b a a b^-1 -> a a c^-1 c^-1
b a a c -> a b a
b a b c -> a b b
b a^-1 a^-1 b -> a^-1 b b a^-1
b a^-1 a^-1 b^-1 -> a^-1 a^-1 c c
b a^-1 a^-1 c^-1 -> a^-1 b a^-1
b a^-1 b c^-1 -> a^-1 b b
b b c c -> a b b a^-1
b b c^-1 c^-1 -> a^-1 b b a
b^-1 a a b -> a a c c
b^-1 a a b^-1 -> a b^-1 b^-1 a
b^-1 a a c^-1 -> a b^-1 a
b^-1 a b^-1 c^-1 -> a b^-1 b^-1
b^-1 a^-1 a^-1 b -> a^-1 a^-1 c^-1 c^-1
b^-1 a^-1 a^-1 b^-1 -> a^-1 b^-1 b^-1 a^-1
b^-1 a^-1 a^-1 c -> a^-1 b^-1 a^-1
b^-1 a^-1 b^-1 c -> a^-1 b^-1 b^-1
b^-1 b^-1 c c -> a^-1 b^-1 b^-1 a
b^-1 b^-1 c^-1 c^-1 -> a b^-1 b^-1 a^-1
a b a a c^-1 -> b a a a
a b b a c^-1 -> b a b a
a b b b c^-1 -> b a b b
a b^-1 a a c -> b^-1 a a a
a b^-1 b^-1 a c -> b^-1 a b^-1 a
a b^-1 b^-1 b^-1 c -> b^-1 a b^-1 b^-1
a^-1 b a^-1 a^-1 c -> b a^-1 a^-1 a^-1
a^-1 b b a^-1 c -> b a^-1 b a^-1
a^-1 b b b c -> b a^-1 b b
a^-1 b^-1 a^-1 a^-1 c^-1 -> b^-1 a^-1 a^-1 a^-1
a^-1 b^-1 b^-1 a^-1 c^-1 -> b^-1 a^-1 b^-1 a^-1
a^-1 b^-1 b^-1 b^-1 c^-1 -> b^-1 a^-1 b^-1 b^-1
b a a a b -> a b a b a
b a a a c -> a b a a
b a b a b -> a b b b a
b a b b a^-1 -> a b b a^-1 b
b a b b c -> a b b b
b a^-1 a^-1 a^-1 b -> a^-1 b a^-1 b a^-1
b a^-1 a^-1 a^-1 c^-1 -> a^-1 b a^-1 a^-1
b a^-1 b a^-1 b -> a^-1 b b b a^-1
b a^-1 b b a -> a^-1 b b a b
b a^-1 b b c^-1 -> a^-1 b b b
b b a c^-1 c^-1 -> a^-1 b b a a
b b a^-1 c c -> a b b a^-1 a^-1
b^-1 a a a b^-1 -> a b^-1 a b^-1 a
b^-1 a a a c^-1 -> a b^-1 a a
b^-1 a b^-1 a b^-1 -> a b^-1 b^-1 b^-1 a
b^-1 a b^-1 b^-1 a^-1 -> a b^-1 b^-1 a^-1 b^-1
b^-1 a b^-1 b^-1 c^-1 -> a b^-1 b^-1 b^-1
b^-1 a^-1 a^-1 a^-1 b^-1 -> a^-1 b^-1 a^-1 b^-1 a^-1
b^-1 a^-1 a^-1 a^-1 c -> a^-1 b^-1 a^-1 a^-1
b^-1 a^-1 b^-1 a^-1 b^-1 -> a^-1 b^-1 b^-1 b^-1 a^-1
b^-1 a^-1 b^-1 b^-1 a -> a^-1 b^-1 b^-1 a b^-1
b^-1 a^-1 b^-1 b^-1 c -> a^-1 b^-1 b^-1 b^-1
b^-1 b^-1 a c c -> a^-1 b^-1 b^-1 a a
b^-1 b^-1 a^-1 c^-1 c^-1 -> a b^-1 b^-1 a^-1 a^-1)";

constexpr std::string_view k_p237_rules = R"(a a^-1 -> 1
a^-1 a -> 1
b b^-1 -> 1
b^-1 b -> 1
c c^-1 -> 1
c^-1 c -> 1
b c -> a
b^-1 a -> c
a c^-1 -> b
c^-1 b^-1 -> a^-1
a^-1 b -> c^-1
c a^-1 -> b^-1
b b b -> a a
c c c c c c -> a a c^-1
b a a -> a a b
c a a -> a a c
b^-1 a a -> a a b^-1
c^-1 a a -> a a c^-1
b a^-1 a^-1 -> a^-1 a^-1 b
c a^-1 a^-1 -> a^-1 a^-1 c
b^-1 a^-1 a^-1 -> a^-1 a^-1 b^-1
c^-1 a^-1 a^-1 -> a^-1 a^-1 c^-1)";

CatalogEntry make(std::string name, std::string description, std::string pres,
                  std::string alt, std::string_view rules, Confluence declared) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.presentation_text = std::move(pres);
  e.alt_presentation_text = std::move(alt);
  e.rules_text = std::string(rules);
  e.declared = declared;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v;
  v.push_back(make("z", "infinite cyclic group", "< a | >", "", k_z_rules,
                   Confluence::confluent));
  v.push_back(make("z2", "free abelian group of rank 2", "< a, b | a b = b a >", "",
                   k_z2_rules, Confluence::confluent));
  v.push_back(make("f2", "free group of rank 2", "< a, b | >", "", k_f2_rules,
                   Confluence::confluent));
  v.push_back(make("klein", "Klein bottle group", "< a, b | b a b^-1 a >", "",
                   k_klein_rules, Confluence::confluent));
  v.push_back(make("heis", "integer Heisenberg group",
                   "< a, b, c | a b = c b a ; a c = c a ; b c = c b >", "", k_heis_rules,
                   Confluence::not_confluent));
  v.push_back(make("bs12", "Baumslag-Solitar group BS(1,2)", "< a, b | a b a^-1 = b^2 >",
                   "", k_bs12_rules, Confluence::not_confluent));
  v.push_back(make("p237", "(2,3,7) triangle-type presentation",
                   "< a, b, c | a^2 = a b c ; b^3 = a b c ; c^7 = a b c >",
                   "< a, b | a^2 = b^3 ; "
                   "b^-1 a b^-1 a b^-1 a b^-1 a b^-1 a b^-1 a b^-1 a = a^2 >",
                   k_p237_rules, Confluence::not_confluent));
  return v;
}

}  // namespace

GroupPresentation CatalogEntry::presentation() const {
  return parse_presentation(presentation_text);
}

GroupPresentation CatalogEntry::alt_presentation() const {
  if (alt_presentation_text.empty()) {
    throw std::logic_error("preset '" + name + "' has no alternate presentation");
  }
  return parse_presentation(alt_presentation_text);
}

RewritingSystem CatalogEntry::rws() const {
  return RewritingSystem::parse(presentation().generators, rules_text);
}

std::optional<ModelKeyFn> CatalogEntry::model_key() const {
  if (name == "bs12") {
    AffineModel m = *affine_model();
    return [m](const Word& w) { return m.key(w); };
  }
  if (name == "heis") {
    HeisModel m;
    return [m](const Word& w) { return m.key(w); };
  }
  return std::nullopt;
}

std::optional<AffineModel> CatalogEntry::affine_model() const {
  if (name != "bs12") return std::nullopt;
  return AffineModel({AffineMap{2, 0}, AffineMap{1, 1}});
}

bool CatalogEntry::exploratory() const {
  return declared != Confluence::confluent && !model_key();
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_preset(std::string_view name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace ordelab
