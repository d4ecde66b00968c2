#include "ordelab/cli.hpp"

#include "ordelab/ball.hpp"
#include "ordelab/catalog.hpp"
#include "ordelab/certify.hpp"
#include "ordelab/cone.hpp"
#include "ordelab/coset.hpp"
#include "ordelab/dynamics.hpp"
#include "ordelab/pipeline.hpp"
#include "ordelab/presentation.hpp"
#include "ordelab/realization.hpp"
#include "ordelab/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace ordelab {

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Out {
  bool records = false;

  void kv(std::string_view key, std::string_view value) const {
    if (records) {
      std::cout << key << '\t' << value << '\n';
    } else {
      std::cout << key << ": " << value << '\n';
    }
  }
  void kv(std::string_view key, const std::string& value) const {
    kv(key, std::string_view(value));
  }
  void kv(std::string_view key, const char* value) const { kv(key, std::string_view(value)); }
  void kv(std::string_view key, std::size_t value) const { kv(key, std::to_string(value)); }
  void kv(std::string_view key, bool value) const { kv(key, value ? "yes" : "no"); }
  void raw(const std::string& line) const { std::cout << line << '\n'; }
};

const CatalogEntry& preset_or_throw(const std::string& name) {
  const CatalogEntry* e = find_preset(name);
  if (!e) {
    std::string names;
    for (const CatalogEntry& c : catalog()) {
      if (!names.empty()) names += ", ";
      names += c.name;
    }
    throw UsageError("unknown preset '" + name + "' (have: " + names + ")");
  }
  return *e;
}

void gate_exploratory(const CatalogEntry& e, bool flag) {
  if (e.exploratory() && !flag) {
    throw UsageError("preset '" + e.name +
                     "' has non-confluent rules and no faithful model, so ball labels may "
                     "repeat group elements; pass --exploratory to proceed anyway");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared state for subcommands that pick a cone on a ball.
struct ConePick {
  std::size_t radius = 2;
  std::size_t limit = kDefaultSearchLimit;
  unsigned jobs = 1;
  std::size_t index = 0;
  std::string cone_file;
  std::vector<std::string> star_words, plus_words, minus_words;
};

SearchConstraints forced_from(const Ball& ball, const std::vector<std::string>& generators,
                              const ConePick& pick) {
  SearchConstraints c;
  auto add = [&](const std::vector<std::string>& words, Sign s) {
    for (const std::string& text : words) {
      Word w = parse_word(text, generators);
      auto idx = ball.find(w);
      if (!idx) throw UsageError("word '" + text + "' is outside the ball");
      c.forced.emplace_back(*idx, s);
    }
  };
  add(pick.star_words, Sign::star);
  add(pick.plus_words, Sign::plus);
  add(pick.minus_words, Sign::minus);
  return c;
}

// Either loads the cone from a file or takes entry `index` of the search.
SignAssignment pick_cone(const Ball& ball, const std::vector<std::string>& generators,
                         const ConePick& pick) {
  if (!pick.cone_file.empty()) {
    return parse_cone(ball, generators, read_file(pick.cone_file));
  }
  SearchOutcome res = search_cones(ball, forced_from(ball, generators, pick), pick.limit,
                                   pick.jobs);
  if (res.assignments.empty()) {
    throw std::runtime_error("no cone satisfies the constraints at this radius");
  }
  if (pick.index >= res.assignments.size()) {
    throw UsageError("cone index " + std::to_string(pick.index) + " out of range; found " +
                     std::to_string(res.assignments.size()) + " cones");
  }
  return res.assignments[pick.index];
}

void add_cone_pick(CLI::App* cmd, ConePick& pick, bool with_radius = true) {
  if (with_radius) cmd->add_option("--radius", pick.radius, "ball radius for the cone search");
  cmd->add_option("--limit", pick.limit, "cap on emitted cones");
  cmd->add_option("--jobs", pick.jobs, "worker threads for the search");
  cmd->add_option("--index", pick.index, "which cone of the search to use");
  cmd->add_option("--cone", pick.cone_file, "read the cone from a file instead of searching");
  cmd->add_option("--star", pick.star_words, "force this word to *")->take_all();
  cmd->add_option("--plus", pick.plus_words, "force this word to +1")->take_all();
  cmd->add_option("--minus", pick.minus_words, "force this word to -1")->take_all();
}

// Builds the ordered action a dynamics subcommand works on: the exact
// affine action when the preset has one, otherwise the realization of a
// picked cone.  The realization keeps pointers into its ball, so the
// bundle carries the ball along; it is null on the affine path.
struct ActionBundle {
  std::unique_ptr<Ball> ball;
  OrderedAction action;
};

ActionBundle action_for(const CatalogEntry& e, const ConePick& pick, bool exploratory,
                        std::size_t orbit_radius) {
  GroupPresentation pres = e.presentation();
  if (auto m = e.affine_model()) {
    return {nullptr, OrderedAction::from_affine(*m, pres.generators.size(), orbit_radius)};
  }
  gate_exploratory(e, exploratory);
  auto ball = std::make_unique<Ball>(enumerate_ball(e.rws(), e.model_key(), pick.radius));
  SignAssignment phi = pick_cone(*ball, pres.generators, pick);
  OrderedAction action = OrderedAction::from_realization(realize(phi));
  return {std::move(ball), std::move(action)};
}

int cmd_catalog(const Out& out) {
  for (const CatalogEntry& e : catalog()) {
    std::ostringstream line;
    if (out.records) {
      line << e.name << '\t' << to_string(e.declared) << '\t'
           << (e.exploratory() ? "exploratory" : "verified") << '\t' << e.description;
    } else {
      line << e.name << ": " << e.description << " (" << to_string(e.declared) << ")";
      if (e.exploratory()) line << " [exploratory]";
    }
    out.raw(line.str());
  }
  return 0;
}

int cmd_parse(const Out& out, const std::string& text, const std::string& file) {
  std::string source = file.empty() ? text : read_file(file);
  if (source.empty()) throw UsageError("give a presentation as an argument or via --file");
  GroupPresentation pres = parse_presentation(source);
  out.kv("presentation", pres.text());
  out.kv("generators", pres.generators.size());
  out.kv("relators", pres.relators.size());
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    out.kv("relator " + std::to_string(i), format_word(pres.relators[i], pres.generators));
  }
  return 0;
}

int cmd_ball(const Out& out, const std::string& name, std::size_t radius, std::size_t cap,
             bool exploratory) {
  const CatalogEntry& e = preset_or_throw(name);
  gate_exploratory(e, exploratory);
  Ball ball = enumerate_ball(e.rws(), e.model_key(), radius, cap);
  GroupPresentation pres = e.presentation();
  out.kv("preset", e.name);
  out.kv("radius", radius);
  out.kv("size", ball.size());
  out.kv("truncated", ball.truncated_by_cap());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    std::ostringstream line;
    line << i << '\t' << ball.length(i) << '\t' << format_word(ball.label(i), pres.generators);
    out.raw(line.str());
  }
  return 0;
}

int cmd_cones(const Out& out, const std::string& name, const ConePick& pick, bool exploratory) {
  const CatalogEntry& e = preset_or_throw(name);
  gate_exploratory(e, exploratory);
  GroupPresentation pres = e.presentation();
  Ball ball = enumerate_ball(e.rws(), e.model_key(), pick.radius);
  SearchOutcome res = search_cones(ball, forced_from(ball, pres.generators, pick), pick.limit,
                                   pick.jobs);
  out.kv("preset", e.name);
  out.kv("radius", pick.radius);
  out.kv("cones", res.assignments.size());
  out.kv("hit-limit", res.hit_limit);
  if (res.assignments.empty()) {
    out.kv("nodes", static_cast<std::size_t>(res.nodes));
    out.kv("verdict", "UNSAT");
    return kExitNegative;
  }
  for (std::size_t i = 0; i < res.assignments.size(); ++i) {
    out.raw("cone " + std::to_string(i) + ":");
    std::cout << serialize_cone(res.assignments[i], pres.generators);
  }
  return 0;
}

int cmd_realize(const Out& out, const std::string& name, const ConePick& pick,
                bool exploratory) {
  const CatalogEntry& e = preset_or_throw(name);
  gate_exploratory(e, exploratory);
  GroupPresentation pres = e.presentation();
  Ball ball = enumerate_ball(e.rws(), e.model_key(), pick.radius);
  SignAssignment phi = pick_cone(ball, pres.generators, pick);
  Realization real = realize(phi);
  out.kv("preset", e.name);
  out.kv("radius", pick.radius);
  out.kv("classes", real.order.class_count());
  for (std::size_t c = 0; c < real.order.class_count(); ++c) {
    std::ostringstream line;
    line << "class " << c << '\t' << format_word(ball.label(real.order.rep_of[c]), pres.generators)
         << '\t' << to_string(real.t[c]);
    out.raw(line.str());
  }
  for (std::size_t rank = 0; rank < real.letter_maps.size(); ++rank) {
    const PLMap& m = real.letter_maps[rank];
    std::ostringstream line;
    Letter l{static_cast<std::uint16_t>(rank / 2), rank % 2 == 1};
    line << "map " << format_word(Word{l}, pres.generators) << ':';
    for (std::size_t i = 0; i < m.xs.size(); ++i) {
      line << ' ' << to_string(m.xs[i]) << "->" << to_string(m.ys[i]);
    }
    out.raw(line.str());
  }
  RealizationReport rep = verify_realization(real, phi);
  out.kv("elements", rep.elements);
  out.kv("decidable", rep.decidable);
  out.kv("eq1-holds", rep.eq1_holds);
  out.kv("stars-fixing", std::to_string(rep.stars_fixing) + "/" +
                             std::to_string(rep.stars_checked));
  out.kv("pairs-agreeing", std::to_string(rep.pairs_agreeing) + "/" +
                               std::to_string(rep.pairs_checked));
  out.kv("verified", rep.ok());
  return rep.ok() ? 0 : kExitNegative;
}

int cmd_crossings(const Out& out, const std::string& name, const ConePick& pick,
                  bool exploratory, std::size_t word_radius, std::size_t power_bound) {
  const CatalogEntry& e = preset_or_throw(name);
  GroupPresentation pres = e.presentation();
  ActionBundle bundle = action_for(e, pick, exploratory, word_radius);
  out.kv("preset", e.name);
  out.kv("word-radius", word_radius);
  out.kv("power-bound", power_bound);
  auto res = find_crossing(bundle.action, word_radius, power_bound);
  if (const auto* w = std::get_if<CrossingWitness>(&res)) {
    out.kv("crossing", "found");
    out.kv("f", format_word(w->f, pres.generators));
    out.kv("g", format_word(w->g, pres.generators));
    out.kv("u", to_string(w->u));
    out.kv("v", to_string(w->v));
    out.kv("w", to_string(w->w));
    out.kv("N", w->N);
    out.kv("M", w->M);
  } else {
    out.kv("crossing", "none up to the bounds");
  }
  return 0;
}

int cmd_envelope(const Out& out, const std::string& name, const ConePick& pick,
                 bool exploratory, const std::string& word_text, const std::string& point_text,
                 std::size_t power_bound) {
  const CatalogEntry& e = preset_or_throw(name);
  GroupPresentation pres = e.presentation();
  ActionBundle bundle = action_for(e, pick, exploratory, 2);
  Word w = parse_word(word_text, pres.generators);
  Rational x = parse_rational(point_text);
  Envelope env = envelope(bundle.action, w, x, power_bound);
  out.kv("word", format_word(w, pres.generators));
  out.kv("point", to_string(x));
  out.kv("lo", to_string(env.lo));
  out.kv("hi", to_string(env.hi));
  out.kv("unbounded-above", env.unbounded_above);
  out.kv("unbounded-below", env.unbounded_below);
  auto orbit_line = [&](const std::vector<Rational>& orbit) {
    std::ostringstream ss;
    for (std::size_t i = 0; i < orbit.size(); ++i) ss << (i ? " " : "") << to_string(orbit[i]);
    return ss.str();
  };
  out.kv("forward", orbit_line(env.forward));
  out.kv("backward", orbit_line(env.backward));
  return 0;
}

int cmd_recurrence(const Out& out, const std::string& name, const ConePick& pick,
                   bool exploratory, const std::vector<std::string>& chain_texts,
                   const std::string& h_text, std::size_t bound) {
  const CatalogEntry& e = preset_or_throw(name);
  GroupPresentation pres = e.presentation();
  std::vector<Word> chain;
  for (const std::string& t : chain_texts) chain.push_back(parse_word(t, pres.generators));
  Word h = parse_word(h_text, pres.generators);

  std::unique_ptr<OrderOracle> oracle;
  std::optional<SignAssignment> phi;
  std::optional<Ball> ball;
  if (auto m = e.affine_model()) {
    oracle = std::make_unique<AffineOracle>(*m);
  } else {
    gate_exploratory(e, exploratory);
    ball.emplace(enumerate_ball(e.rws(), e.model_key(), pick.radius));
    phi.emplace(pick_cone(*ball, pres.generators, pick));
    oracle = std::make_unique<ConeOracle>(*phi);
  }
  RecurrenceOutcome res = recurrence_check(*oracle, chain, h, bound);
  out.kv("preset", e.name);
  out.kv("bound", res.bound);
  out.kv("verdict", to_string(res.verdict));
  std::ostringstream ws, ds;
  for (std::size_t i = 0; i < res.witnesses.size(); ++i)
    ws << (i ? " " : "") << res.witnesses[i];
  out.kv("witnesses", ws.str());
  out.kv("decidable", res.decidable.size());
  return res.verdict == RecurrenceVerdict::fails ? kExitNegative : 0;
}

int cmd_certify(const Out& out, const std::string& name, bool alt) {
  const CatalogEntry& e = preset_or_throw(name);
  if (alt && e.alt_presentation_text.empty()) {
    throw UsageError("preset '" + e.name + "' has no alternate presentation");
  }
  GroupPresentation pres = alt ? e.alt_presentation() : e.presentation();
  SurjectionCertificate cert = certify_onto_z(pres);
  out.kv("preset", e.name);
  out.kv("presentation", pres.text());
  out.kv("verdict", cert.surjects ? "SURJECTS" : "NO-SURJECTION");
  std::ostringstream diag;
  for (std::size_t i = 0; i < cert.diagonal.size(); ++i)
    diag << (i ? " " : "") << cert.diagonal[i];
  out.kv("diagonal", diag.str());
  if (cert.surjects) {
    std::ostringstream img;
    for (std::size_t i = 0; i < cert.generator_images.size(); ++i) {
      img << (i ? " " : "") << pres.generators[i] << ":" << cert.generator_images[i];
    }
    out.kv("images", img.str());
    out.kv("image-verified", cert.image_verified);
  }
  out.kv("transforms-verified", cert.transforms_verified);
  return cert.surjects ? 0 : kExitNegative;
}

int cmd_pipeline(const Out& out, const std::string& name, std::size_t radius,
                 std::size_t limit, std::size_t n_bound, bool exploratory) {
  const CatalogEntry& e = preset_or_throw(name);
  gate_exploratory(e, exploratory);
  PipelineReport rep = pipeline_check(e, radius, limit, n_bound);
  out.kv("preset", e.name);
  out.kv("radius", radius);
  out.kv("surjects", rep.surjects);
  std::ostringstream diag;
  for (std::size_t i = 0; i < rep.diagonal.size(); ++i)
    diag << (i ? " " : "") << rep.diagonal[i];
  out.kv("diagonal", diag.str());
  out.kv("cones-examined", rep.cones_examined);
  out.kv("crossing-found", rep.crossing_found);
  for (const std::string& line : rep.cone_lines) out.raw(line);
  out.kv("verdict", to_string(rep.verdict));
  out.kv("note", rep.note);
  return rep.verdict == PipelineReport::Verdict::inconsistent ? kExitNegative : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"ordelab: relative orders on finitely generated groups"};
  app.require_subcommand(1);

  Out out;
  std::string format = "human";
  app.add_option("--format", format, "output format: human or records")
      ->check(CLI::IsMember({"human", "records"}));

  std::string name, text, file, word_text, point_text = "0", h_text;
  std::vector<std::string> chain_texts;
  std::size_t radius = 2, cap = kDefaultBallCap, word_radius = 2, power_bound = 8, bound = 16;
  std::size_t pipe_limit = kDefaultSearchLimit, n_bound = 8;
  bool exploratory = false, alt = false;
  ConePick pick;

  CLI::App* c_catalog = app.add_subcommand("catalog", "list the built-in presets");

  CLI::App* c_parse = app.add_subcommand("parse", "parse a presentation and echo it");
  c_parse->add_option("text", text, "presentation text, e.g. \"< a, b | a b = b a >\"");
  c_parse->add_option("--file", file, "read the presentation from a file");

  CLI::App* c_ball = app.add_subcommand("ball", "enumerate a ball in the group");
  c_ball->add_option("preset", name)->required();
  c_ball->add_option("--radius", radius, "ball radius");
  c_ball->add_option("--cap", cap, "element cap");
  c_ball->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_cones = app.add_subcommand("cones", "enumerate relative cones on a ball");
  c_cones->add_option("preset", name)->required();
  add_cone_pick(c_cones, pick);
  c_cones->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_realize = app.add_subcommand("realize", "realize a cone as maps of the line");
  c_realize->add_option("preset", name)->required();
  add_cone_pick(c_realize, pick);
  c_realize->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_cross = app.add_subcommand("crossings", "search for a crossing witness");
  c_cross->add_option("preset", name)->required();
  c_cross->add_option("--word-radius", word_radius, "how long the tested elements may be");
  c_cross->add_option("--power-bound", power_bound, "how many powers to try");
  add_cone_pick(c_cross, pick);
  c_cross->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_env = app.add_subcommand("envelope", "orbit envelope of a word at a point");
  c_env->add_option("preset", name)->required();
  c_env->add_option("--word", word_text, "the acting word")->required();
  c_env->add_option("--point", point_text, "starting point, a rational");
  c_env->add_option("--power-bound", power_bound, "how many powers to try");
  add_cone_pick(c_env, pick);
  c_env->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_rec = app.add_subcommand("recurrence", "check a chain against shifted copies");
  c_rec->add_option("preset", name)->required();
  c_rec->add_option("--chain", chain_texts, "chain words, in order")->required()->take_all();
  c_rec->add_option("--shift", h_text, "shift word")->required();
  c_rec->add_option("--bound", bound, "largest shift power");
  add_cone_pick(c_rec, pick);
  c_rec->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  CLI::App* c_cert = app.add_subcommand("certify", "certify a surjection onto the integers");
  c_cert->add_option("preset", name)->required();
  c_cert->add_flag("--alt", alt, "use the alternate presentation");

  CLI::App* c_pipe = app.add_subcommand("pipeline", "cross-check orders against the certificate");
  c_pipe->add_option("preset", name)->required();
  c_pipe->add_option("--radius", radius, "ball radius for the cone search");
  c_pipe->add_option("--limit", pipe_limit, "cap on examined cones");
  c_pipe->add_option("--n-bound", n_bound, "power bound for the conradian probe");
  c_pipe->add_flag("--exploratory", exploratory, "allow unverified ball labels");

  for (CLI::App* sub : {c_catalog, c_parse, c_ball, c_cones, c_realize, c_cross, c_env, c_rec,
                        c_cert, c_pipe}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  out.records = format == "records";

  try {
    if (c_catalog->parsed()) return cmd_catalog(out);
    if (c_parse->parsed()) return cmd_parse(out, text, file);
    if (c_ball->parsed()) return cmd_ball(out, name, radius, cap, exploratory);
    if (c_cones->parsed()) return cmd_cones(out, name, pick, exploratory);
    if (c_realize->parsed()) return cmd_realize(out, name, pick, exploratory);
    if (c_cross->parsed())
      return cmd_crossings(out, name, pick, exploratory, word_radius, power_bound);
    if (c_env->parsed())
      return cmd_envelope(out, name, pick, exploratory, word_text, point_text, power_bound);
    if (c_rec->parsed())
      return cmd_recurrence(out, name, pick, exploratory, chain_texts, h_text, bound);
    if (c_cert->parsed()) return cmd_certify(out, name, alt);
    if (c_pipe->parsed())
      return cmd_pipeline(out, name, radius, pipe_limit, n_bound, exploratory);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const order_incoherent& e) {
    std::cerr << "order incoherent: " << e.what() << '\n';
    return kExitNegative;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

}  // namespace ordelab
