#include "ordelab/pipeline.hpp"

#include "ordelab/ball.hpp"
#include "ordelab/certify.hpp"
#include "ordelab/dynamics.hpp"
#include "ordelab/search.hpp"

#include <sstream>

namespace ordelab {

std::string_view to_string(PipelineReport::Verdict v) {
  switch (v) {
    case PipelineReport::Verdict::consistent: return "CONSISTENT";
    case PipelineReport::Verdict::inconsistent: return "INCONSISTENT";
    case PipelineReport::Verdict::undecided: return "UNDECIDED";
  }
  return "?";
}

PipelineReport pipeline_check(const CatalogEntry& preset, std::size_t radius,
                              std::size_t limit, std::size_t n_bound) {
  PipelineReport rep;
  GroupPresentation pres = preset.presentation();
  SurjectionCertificate cert = certify_onto_z(pres);
  rep.surjects = cert.surjects;
  rep.diagonal = cert.diagonal;
  rep.exploratory = preset.exploratory();

  Ball ball = enumerate_ball(preset.rws(), preset.model_key(), radius);
  SearchOutcome res = search_cones(ball, {}, limit, 1);
  rep.cones_examined = res.assignments.size();
  rep.search_truncated = res.hit_limit || ball.truncated_by_cap();

  bool candidate = false;
  for (std::size_t i = 0; i < res.assignments.size(); ++i) {
    std::ostringstream line;
    line << "cone " << i << ": ";
    if (auto v = conradian_violation(res.assignments[i], n_bound)) {
      candidate = true;
      line << "conradian violation candidate f=" << format_word(ball.label(v->f), pres.generators)
           << " g=" << format_word(ball.label(v->g), pres.generators);
    } else {
      line << "no conradian violation up to n=" << n_bound;
    }
    rep.cone_lines.push_back(line.str());
  }

  if (auto m = preset.affine_model()) {
    OrderedAction action = OrderedAction::from_affine(*m, pres.generators.size(), 2);
    rep.crossing_found = std::holds_alternative<CrossingWitness>(find_crossing(action, 2, 4));
  }

  if (rep.surjects) {
    rep.verdict = PipelineReport::Verdict::consistent;
    rep.note = "a surjection onto the integers exists, so recurrent orders with "
               "crossings are accounted for";
  } else if (rep.exploratory || rep.search_truncated) {
    rep.verdict = PipelineReport::Verdict::undecided;
    rep.note = "order-side evidence cannot be certified here: ball labels are "
               "unverified or the search was truncated";
  } else if (!candidate || !rep.crossing_found) {
    rep.verdict = PipelineReport::Verdict::consistent;
    rep.note = "no certified recurrent order with crossings was found, so nothing "
               "requires a surjection";
  } else {
    rep.verdict = PipelineReport::Verdict::inconsistent;
    rep.note = "certified order-side evidence contradicts the missing surjection";
  }
  return rep;
}

}  // namespace ordelab
