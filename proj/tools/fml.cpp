// Command-line front end: fml <command> [options]. Exit status 0 means
// proved / holds, 1 refuted / fails, 2 unknown, 3 and above an error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "fml/consequence.hpp"
#include "fml/io.hpp"
#include "fml/random.hpp"
#include "fml/representation.hpp"

using namespace fml;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUnknown = 2;
constexpr int kError = 3;

struct Common {
  std::string logic = "fundamental";
  bool json = false;
  std::size_t max_universe = SaturationBudget{}.max_universe;
  std::size_t max_steps = SaturationBudget{}.max_steps;
  int max_states = 0;
  bool serial = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_logic = true, bool with_search = true) {
  if (with_logic) {
    cmd->add_option("--logic", c.logic, "fundamental | ortho | intuitionistic | classical | modal")
        ->capture_default_str();
  }
  cmd->add_flag("--json", c.json, "Print JSON instead of text");
  if (!with_search) return;
  cmd->add_option("--max-universe", c.max_universe, "Saturation universe bound")->capture_default_str();
  cmd->add_option("--max-steps", c.max_steps, "Saturation step bound")->capture_default_str();
  cmd->add_option("--max-states", c.max_states, "Largest frame tried by countermodel search (0: per-logic default)");
  cmd->add_flag("--serial", c.serial, "Run the countermodel search on one thread");
}

DecideOptions decide_options(const Common& c) {
  DecideOptions o;
  o.budget = {c.max_universe, c.max_steps};
  o.max_states = c.max_states;
  o.parallel = !c.serial;
  return o;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_trace(const Trace& trace) { std::cout << serialize_trace(trace); }

std::string set_text(const ModalFrame& f, StateSet s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.members()) {
    out += (first ? "" : ", ") + f.name(x);
    first = false;
  }
  return out + "}";
}

const LatticeAlgebra& load_lattice(const std::string& fixture_name, const std::string& file,
                                   std::optional<LatticeAlgebra>& holder) {
  if (!fixture_name.empty() && !file.empty()) throw CLI::ValidationError("give either --fixture or --file");
  if (!fixture_name.empty()) {
    try {
      return fixture(fixture_name).algebra;
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown fixture '" + fixture_name + "'");
    }
  }
  if (file.empty()) throw CLI::ValidationError("give --fixture or --file");
  holder.emplace(lattice_from_json(read_json_file(file)));
  return *holder;
}

int verdict_exit(const Verdict& v) {
  if (std::holds_alternative<Proved>(v)) return kHolds;
  if (std::holds_alternative<Refuted>(v)) return kFails;
  return kUnknown;
}

void report_verdict(const Verdict& v, const Common& c) {
  if (c.json) {
    print(verdict_to_json(v));
    return;
  }
  std::cout << verdict_name(v) << '\n';
  if (const auto* p = std::get_if<Proved>(&v)) {
    print_trace(p->trace);
  } else if (const auto* r = std::get_if<Refuted>(&v)) {
    std::cout << "countermodel in class " << frame_class_name(r->frame_class) << ":\n";
    print(countermodel_to_json(r->model));
  } else {
    std::cout << std::get<Unknown>(v).report << '\n';
  }
}

int cmd_prove(const std::string& goal_text, const Common& c) {
  const Consecution goal = parse_consecution(goal_text, parse_logic(c.logic));
  const SaturationResult r = saturate(goal, {c.max_universe, c.max_steps});
  if (c.json) {
    Json j;
    j["verdict"] = r.proved ? "proved" : "unknown";
    j["universe"] = r.stats.universe;
    j["derived"] = r.stats.derived;
    j["rounds"] = r.stats.rounds;
    if (!r.stats.limit.empty()) j["limit"] = r.stats.limit;
    if (r.proved) j["trace"] = trace_to_json(r.trace);
    print(j);
  } else if (r.proved) {
    std::cout << "proved\n";
    print_trace(r.trace);
  } else {
    std::cout << "unknown: no derivation over " << r.stats.universe << " formulas ("
              << r.stats.derived << " consecutions derived"
              << (r.stats.limit.empty() ? "" : ", " + r.stats.limit + " budget reached") << ")\n";
  }
  return r.proved ? kHolds : kUnknown;
}

int cmd_refute(const std::string& goal_text, const Common& c) {
  const LogicId logic = parse_logic(c.logic);
  const Consecution goal = parse_consecution(goal_text, logic);
  const auto cls = refutation_class(logic);
  if (!cls) throw std::invalid_argument("no countermodel search for " + std::string(logic_name(logic)));
  SearchOptions o;
  o.max_states = c.max_states > 0 ? c.max_states : default_max_states(logic);
  o.parallel = !c.serial;
  o.seeds = fixture_seed_frames(*cls);
  const SearchResult r = countermodel_search(goal.lhs, goal.rhs, *cls, o);
  if (c.json) {
    Json j;
    j["verdict"] = r.model ? "refuted" : "unknown";
    j["frame_class"] = std::string(frame_class_name(*cls));
    j["frames_examined"] = r.stats.frames_examined;
    j["valuations_examined"] = r.stats.valuations_examined;
    if (r.model) j["countermodel"] = countermodel_to_json(*r.model);
    print(j);
  } else if (r.model) {
    std::cout << "refuted\ncountermodel in class " << frame_class_name(*cls) << ":\n";
    print(countermodel_to_json(*r.model));
  } else {
    std::cout << "unknown: no countermodel among " << r.stats.frames_examined << " frames of up to "
              << o.max_states << " states\n";
  }
  return r.model ? kFails : kUnknown;
}

int cmd_decide(const std::string& goal_text, const Common& c) {
  const Consecution goal = parse_consecution(goal_text, parse_logic(c.logic));
  const Verdict v = decide(goal, decide_options(c));
  report_verdict(v, c);
  return verdict_exit(v);
}

int cmd_model_check(const std::string& model_file, const std::string& text, const Common& c) {
  const Model m = model_from_json(read_json_file(model_file));
  for (const auto& [atom, set] : m.valuation) {
    if (!is_fixpoint(m.frame, set)) {
      throw std::invalid_argument("valuation of '" + atom + "' is not a fixpoint: " + set_text(m.frame, set));
    }
  }
  const bool is_goal = text.find("|-") != std::string::npos;
  Formula lhs = Formula::top();
  Formula rhs = Formula::top();
  if (is_goal) {
    const Consecution goal = parse_consecution(text, LogicId::FundamentalModal);
    lhs = goal.lhs;
    rhs = goal.rhs;
  } else {
    rhs = parse(text);
  }
  const StateSet forced = denotation(m, rhs);
  const std::optional<int> failure =
      is_goal ? find_failure(m, lhs, rhs) : (forced == m.frame.carrier() ? std::nullopt
                                                                       : std::optional<int>((m.frame.carrier() - forced).first()));
  if (c.json) {
    Json j;
    j["holds"] = !failure.has_value();
    if (is_goal) j["lhs_states"] = state_set_to_json(m.frame, denotation(m, lhs));
    j[is_goal ? "rhs_states" : "states"] = state_set_to_json(m.frame, forced);
    if (failure) j["witness"] = m.frame.name(*failure);
    print(j);
  } else {
    if (is_goal) std::cout << "lhs forced at " << set_text(m.frame, denotation(m, lhs)) << '\n';
    std::cout << (is_goal ? "rhs" : "formula") << " forced at " << set_text(m.frame, forced) << '\n';
    std::cout << (failure ? "fails at " + m.frame.name(*failure) : std::string("holds")) << '\n';
  }
  return failure ? kFails : kHolds;
}

// Closure laws and both correspondence biconditionals on one frame; empty when all hold.
std::vector<std::string> correspondence_violations(const ModalFrame& f) {
  std::vector<std::string> bad;
  const FixpointAlgebra alg = fixpoints(f);
  const StateSet zero = alg.bottom();
  const std::uint64_t subsets = std::uint64_t{1} << f.size();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const StateSet a(bits);
    const StateSet ca = closure(f, a);
    if (!a.subset_of(ca)) bad.push_back("closure not extensive");
    if (closure(f, ca) != ca) bad.push_back("closure not idempotent");
    if (!alg.contains(ca)) bad.push_back("closure image missing from the fixpoints");
  }
  bool meet_law = true, dne_law = true;
  for (StateSet a : alg.elements()) {
    if (!alg.contains(alg.neg(a))) bad.push_back("negation leaves the fixpoints");
    meet_law = meet_law && (a & alg.neg(a)).subset_of(zero);
    dne_law = dne_law && a.subset_of(alg.neg(alg.neg(a)));
  }
  if (meet_law != satisfies(f, FrameCondition::PseudoReflexive)) bad.push_back("pseudo-reflexivity correspondence");
  if (dne_law != satisfies(f, FrameCondition::PseudoSymmetric)) bad.push_back("pseudo-symmetry correspondence");
  return bad;
}

int cmd_frame_check(const std::string& file, const std::vector<std::string>& conds, int random_count,
                    std::uint64_t seed, int states, const Common& c) {
  if (random_count > 0) {
    Rng rng(seed);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    std::size_t violations = 0, pr = 0, ps = 0;
    Json failures = Json::array();
    for (int i = 0; i < random_count; ++i) {
      std::uniform_int_distribution<int> size(1, states);
      const ModalFrame f = random_frame(rng, size(rng), density(rng));
      pr += satisfies(f, FrameCondition::PseudoReflexive);
      ps += satisfies(f, FrameCondition::PseudoSymmetric);
      const auto bad = correspondence_violations(f);
      violations += bad.empty() ? 0 : 1;
      if (!bad.empty()) failures.push_back({{"frame", frame_to_json(f)}, {"violations", bad}});
    }
    if (c.json) {
      Json j;
      j["frames"] = random_count;
      j["seed"] = seed;
      j["pseudo_reflexive"] = pr;
      j["pseudo_symmetric"] = ps;
      j["violations"] = violations;
      j["failures"] = failures;
      print(j);
    } else {
      std::cout << random_count << " random frames (seed " << seed << "): " << pr << " pseudo-reflexive, " << ps
                << " pseudo-symmetric, " << violations << " with violations\n";
      for (const auto& fl : failures) std::cout << fl.dump() << '\n';
    }
    return violations == 0 ? kHolds : kFails;
  }
  if (file.empty()) throw CLI::ValidationError("give a frame file or --random N");
  const ModalFrame f = frame_from_json(read_json_file(file));
  std::vector<FrameCondition> which;
  for (const auto& s : conds) which.push_back(parse_condition(s));
  if (which.empty()) which = standard_conditions();
  bool all = true;
  Json reports = Json::array();
  for (FrameCondition cond : which) {
    const ConditionReport r = check_condition(f, cond);
    all = all && r.holds;
    reports.push_back(condition_to_json(f, r));
  }
  const FixpointAlgebra alg = fixpoints(f);
  if (c.json) {
    Json j;
    j["states"] = f.size();
    j["fixpoints"] = alg.size();
    j["conditions"] = reports;
    print(j);
  } else {
    std::cout << f.size() << " states, " << alg.size() << " fixpoints\n";
    for (const auto& r : reports) {
      std::cout << (r["holds"].get<bool>() ? "  holds  " : "  fails  ") << r["condition"].get<std::string>();
      if (r.contains("witness")) std::cout << " at " << r["witness"].dump();
      std::cout << '\n';
    }
  }
  return all ? kHolds : kFails;
}

int cmd_represent(const std::string& fixture_name, const std::string& file, const std::string& flavor_text,
                  bool dot, const Common& c) {
  std::optional<LatticeAlgebra> holder;
  const LatticeAlgebra& l = load_lattice(fixture_name, file, holder);
  const Flavor flavor = parse_flavor(flavor_text);
  ModalFrame frame;
  MorphismReport morphism;
  try {
    if (flavor == Flavor::Pairs || flavor == Flavor::Unified) {
      const PairsFrame rep = flavor == Flavor::Pairs ? build_pairs_frame(l) : build_unified_frame(l);
      frame = rep.frame;
      morphism = canonical_embedding(l, rep);
    } else {
      const FilterIdealFrame rep = build_filter_ideal_frame(l, flavor == Flavor::UnifiedFilterIdeal);
      frame = rep.frame;
      morphism = canonical_embedding(l, rep);
    }
  } catch (const PreconditionError& e) {
    if (c.json) {
      print({{"built", false}, {"reason", e.what()}, {"property", property_to_json(l, e.report())}});
    } else {
      std::cerr << "precondition fails: " << e.what() << '\n';
    }
    return kFails;
  }
  if (dot) {
    std::cout << frame_to_dot(frame);
    return morphism.isomorphism() ? kHolds : kFails;
  }
  if (c.json) {
    Json j;
    j["built"] = true;
    j["flavor"] = std::string(flavor_name(flavor));
    j["frame"] = frame_to_json(frame);
    Json conds = Json::array();
    for (FrameCondition cond : standard_conditions()) conds.push_back(condition_to_json(frame, check_condition(frame, cond)));
    j["conditions"] = conds;
    j["morphism"] = morphism_to_json(l, frame, morphism);
    print(j);
  } else {
    std::cout << flavor_name(flavor) << " frame with " << frame.size() << " states, " << morphism.fixpoint_count
              << " fixpoints\n";
    for (FrameCondition cond : standard_conditions()) {
      std::cout << (satisfies(frame, cond) ? "  holds  " : "  fails  ") << condition_name(cond) << '\n';
    }
    std::cout << "embedding: " << (morphism.isomorphism() ? "isomorphism" : "not an isomorphism") << '\n';
    for (const auto& op : morphism.preserves) {
      std::cout << (op.preserved ? "  preserves " : "  breaks    ") << op.op << '\n';
    }
  }
  return morphism.isomorphism() ? kHolds : kFails;
}

int cmd_axioms(const std::string& fixture_name, const std::string& file, bool properties, const Common& c) {
  std::optional<LatticeAlgebra> holder;
  const LatticeAlgebra& l = load_lattice(fixture_name, file, holder);
  bool all = true;
  Json axioms = Json::array();
  for (Axiom a : all_axioms()) {
    if (a == Axiom::DiaDef || a == Axiom::BoxDef) continue;
    const PropertyReport r = check_axiom(l, a);
    all = all && r.holds;
    Json j = property_to_json(l, r);
    j["axiom"] = std::string(axiom_formula(a));
    axioms.push_back(j);
  }
  Json props = Json::array();
  if (properties) {
    for (Property p : all_properties()) {
      try {
        props.push_back(property_to_json(l, check_property(l, p)));
      } catch (const MissingOperation&) {
      }
    }
  }
  if (c.json) {
    Json j;
    j["axioms"] = axioms;
    if (properties) j["properties"] = props;
    print(j);
  } else {
    for (const auto& a : axioms) {
      std::cout << (a["holds"].get<bool>() ? "✓ " : "✗ ") << a["name"].get<std::string>() << "  "
                << a["axiom"].get<std::string>();
      if (a.contains("chain")) std::cout << "  fails: " << a["chain"].get<std::string>();
      std::cout << '\n';
    }
    for (const auto& p : props) {
      std::cout << (p["holds"].get<bool>() ? "✓ " : "✗ ") << p["name"].get<std::string>();
      if (p.contains("witness")) std::cout << "  at " << p["witness"].dump();
      std::cout << '\n';
    }
  }
  return all ? kHolds : kFails;
}

int cmd_translate(const std::string& text, const Common& c) {
  const bool is_goal = text.find("|-") != std::string::npos;
  std::string out;
  if (is_goal) {
    const Consecution goal = parse_consecution(text, LogicId::Ortho);
    out = render(godel_gentzen(goal.lhs)) + " |- " + render(godel_gentzen(goal.rhs));
  } else {
    out = render(godel_gentzen(parse(text)));
  }
  if (c.json) {
    print({{"input", text}, {"translation", out}});
  } else {
    std::cout << out << '\n';
  }
  return kHolds;
}

int cmd_reduce_classical(const std::string& text, bool run, const Common& c) {
  const Consecution goal = parse_consecution(text, LogicId::Classical);
  const Formula premise = classical_premise(goal.lhs, goal.rhs);
  const Consecution reduced{premise, goal.rhs, LogicId::Fundamental};
  const bool entails = classical_entails(goal.lhs, goal.rhs);
  if (!run) {
    if (c.json) {
      print({{"reduction", render(reduced)}, {"classically_valid", entails}});
    } else {
      std::cout << render(reduced) << '\n';
    }
    return kHolds;
  }
  const Verdict v = decide(reduced, decide_options(c));
  if (c.json) {
    Json j = verdict_to_json(v);
    j["reduction"] = render(reduced);
    j["classically_valid"] = entails;
    print(j);
  } else {
    std::cout << render(reduced) << '\n' << "classically " << (entails ? "valid" : "invalid") << '\n';
    report_verdict(v, c);
  }
  return verdict_exit(v);
}

int cmd_fixtures(bool verify, const std::string& dump, const Common& c) {
  if (!dump.empty()) {
    const Fixture* fx = nullptr;
    try {
      fx = &fixture(dump);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown fixture '" + dump + "'");
    }
    print(lattice_to_json(fx->algebra.data()));
    return kHolds;
  }
  if (verify) {
    bool all = true;
    Json checks = Json::array();
    for (const auto& ch : verify_fixtures()) {
      all = all && ch.ok;
      checks.push_back({{"fixture", ch.fixture}, {"claim", ch.claim}, {"ok", ch.ok}, {"detail", ch.detail}});
    }
    if (c.json) {
      print({{"ok", all}, {"checks", checks}});
    } else {
      for (const auto& ch : checks) {
        std::cout << (ch["ok"].get<bool>() ? "ok    " : "FAIL  ") << ch["fixture"].get<std::string>() << ": "
                  << ch["claim"].get<std::string>();
        if (!ch["ok"].get<bool>()) std::cout << " (" << ch["detail"].get<std::string>() << ")";
        std::cout << '\n';
      }
    }
    return all ? kHolds : kFails;
  }
  Json list = Json::array();
  for (const auto& fx : fixtures()) list.push_back({{"name", fx.name}, {"description", fx.description}});
  if (c.json) {
    print(list);
  } else {
    for (const auto& fx : fixtures()) std::cout << fx.name << "  " << fx.description << '\n';
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental and modal logic workbench"};
  app.require_subcommand(1);

  Common common;
  std::string goal;

  auto* prove = app.add_subcommand("prove", "Search for a derivation by bounded saturation");
  prove->add_option("goal", goal, "Consecution 'phi |- psi'")->required();
  add_common(prove, common);

  auto* refute = app.add_subcommand("refute", "Search for a countermodel");
  refute->add_option("goal", goal, "Consecution 'phi |- psi'")->required();
  add_common(refute, common);

  auto* dec = app.add_subcommand("decide", "Interleave proof search and countermodel search");
  dec->add_option("goal", goal, "Consecution 'phi |- psi'")->required();
  add_common(dec, common);

  std::string model_file;
  auto* mc = app.add_subcommand("model-check", "Evaluate a formula or consecution on a model file");
  mc->add_option("model", model_file, "Model JSON: {\"frame\": ..., \"valuation\": ...}")->required();
  mc->add_option("formula", goal, "Formula, or consecution 'phi |- psi'")->required();
  add_common(mc, common, false, false);

  std::string frame_file;
  std::vector<std::string> conditions;
  int random_count = 0;
  std::uint64_t seed = 1;
  int random_states = 5;
  auto* fc = app.add_subcommand("frame-check", "Check frame conditions, or run the correspondence suite");
  fc->add_option("frame", frame_file, "Frame JSON file");
  fc->add_option("--condition", conditions,
                 "pseudo_reflexive | pseudo_symmetric | modal_frame | additive | negative | unified | reflexive | symmetric");
  fc->add_option("--random", random_count, "Run closure and correspondence laws on N random frames");
  fc->add_option("--seed", seed, "Seed for --random")->capture_default_str();
  fc->add_option("--states", random_states, "Largest random frame")->capture_default_str()->check(CLI::Range(1, 8));
  add_common(fc, common, false, false);

  std::string fixture_name, lattice_file, flavor = "pairs";
  bool dot = false;
  auto* rep = app.add_subcommand("represent", "Build the frame representing a lattice and check the embedding");
  rep->add_option("--fixture", fixture_name, "Named algebra");
  rep->add_option("--file", lattice_file, "Lattice JSON file");
  rep->add_option("--flavor", flavor, "pairs | unified | filter-ideal | unified-filter-ideal")->capture_default_str();
  rep->add_flag("--dot", dot, "Print the frame as DOT");
  add_common(rep, common, false, false);

  bool properties = false;
  auto* ax = app.add_subcommand("axioms", "Check the negation/modality axioms of a lattice");
  ax->add_option("--fixture", fixture_name, "Named algebra");
  ax->add_option("--file", lattice_file, "Lattice JSON file");
  ax->add_flag("--properties", properties, "Also report the lattice properties of the operations");
  add_common(ax, common, false, false);

  auto* tr = app.add_subcommand("translate", "Goedel-Gentzen translation of a formula or consecution");
  tr->add_option("formula", goal, "Formula or consecution")->required();
  add_common(tr, common, false, false);

  bool run = false;
  auto* rc = app.add_subcommand("reduce-classical", "State-description reduction of a classical consecution");
  rc->add_option("goal", goal, "Consecution 'phi |- psi'")->required();
  rc->add_flag("--decide", run, "Decide the reduced consecution in fundamental logic");
  add_common(rc, common, false);

  bool verify = false;
  std::string dump;
  auto* fx = app.add_subcommand("fixtures", "List, dump or verify the named algebras");
  fx->add_flag("--verify", verify, "Replay every stored expectation");
  fx->add_option("--dump", dump, "Print the named algebra as lattice JSON");
  add_common(fx, common, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*prove) return cmd_prove(goal, common);
    if (*refute) return cmd_refute(goal, common);
    if (*dec) return cmd_decide(goal, common);
    if (*mc) return cmd_model_check(model_file, goal, common);
    if (*fc) return cmd_frame_check(frame_file, conditions, random_count, seed, random_states, common);
    if (*rep) return cmd_represent(fixture_name, lattice_file, flavor, dot, common);
    if (*ax) return cmd_axioms(fixture_name, lattice_file, properties, common);
    if (*tr) return cmd_translate(goal, common);
    if (*rc) return cmd_reduce_classical(goal, run, common);
    if (*fx) return cmd_fixtures(verify, dump, common);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError + 1;
  }
  return kError;
}
