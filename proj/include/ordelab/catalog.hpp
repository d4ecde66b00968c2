#pragma once

#include "ordelab/model.hpp"
#include "ordelab/presentation.hpp"
#include "ordelab/rewriting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordelab {

// A preset bundles a presentation with a terminating rule set. For the
// confluent entries the rules compute canonical normal forms; for the rest
// they only shrink words, so ball enumeration additionally needs a faithful
// model key (when one exists) or must be flagged as exploratory.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::string presentation_text;
  std::string alt_presentation_text;  // empty when there is no second form
  std::string rules_text;
  Confluence declared = Confluence::confluent;

  GroupPresentation presentation() const;
  GroupPresentation alt_presentation() const;  // throws when absent
  RewritingSystem rws() const;
  std::optional<ModelKeyFn> model_key() const;
  std::optional<AffineModel> affine_model() const;
  bool exploratory() const;
};

const std::vector<CatalogEntry>& catalog();

// nullptr when the name is not a preset
const CatalogEntry* find_preset(std::string_view name);

}  // namespace ordelab
