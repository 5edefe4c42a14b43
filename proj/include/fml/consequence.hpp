#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fml/formula.hpp"
#include "fml/frames.hpp"

namespace fml {

/// True iff every two-valued assignment satisfying phi satisfies psi.
/// Propositional formulas only; throws LanguageError otherwise.
bool classical_entails(const Formula& phi, const Formula& psi);

/// One derivation step. `rule` is "1" to "20" for the numbered schemas,
/// "dne" (¬¬φ ⊢ φ), "pc" (from φ∧ψ ⊢ φ∧¬φ infer φ ⊢ ¬ψ), "cases" (from
/// α∧φ ⊢ χ and α∧ψ ⊢ χ infer α∧(φ∨ψ) ⊢ χ) or "hyp" (an extra axiom).
/// Premises are indices of earlier steps.
struct RuleInstance {
  std::string rule;
  Formula lhs;
  Formula rhs;
  std::vector<int> premises;
};

using Trace = std::vector<RuleInstance>;

/// Rule identifiers available in a logic, in display order.
const std::vector<std::string>& logic_rules(LogicId logic);

struct TraceCheck {
  bool ok = true;
  /// First bad step, -1 when ok.
  int step = -1;
  std::string reason;
};

/// Every step is an instance of a rule of the logic whose premises are
/// earlier steps. `hypotheses` lists the consecutions accepted as "hyp".
TraceCheck check_trace(const Trace& trace, LogicId logic, const std::vector<Consecution>& hypotheses = {});
bool check_trace_ok(const Trace& trace, LogicId logic);

/// Checks the trace and that its last step concludes the goal.
TraceCheck check_proof(const Trace& trace, const Consecution& goal, const std::vector<Consecution>& hypotheses = {});

/// One line per step, `<rule>: <lhs> |- <rhs>`, followed by ` FROM i, j`
/// when the step has premises; premises are 0-based line positions.
std::string serialize_trace(const Trace& trace);
/// Inverse of serialize_trace; throws ParseError or std::invalid_argument.
Trace parse_trace(std::string_view text, LogicId logic);

struct SaturationBudget {
  std::size_t max_universe = 256;
  std::size_t max_steps = 200000;
};

struct SaturationStats {
  std::size_t universe = 0;
  std::size_t derived = 0;
  int rounds = 0;
  /// "universe" or "steps" when a budget stopped the run, empty when the
  /// relation was computed to its fixpoint over the final universe.
  std::string limit;
};

struct SaturationResult {
  bool proved = false;
  Trace trace;
  SaturationStats stats;
};

/// Least relation closed under the logic's rules over a staged finite
/// universe of formulas; every derived pair is derivable in the logic.
/// `hypotheses` are added as axioms (rule "hyp").
SaturationResult saturate(const Consecution& goal, const SaturationBudget& budget = {},
                          const std::vector<Consecution>& hypotheses = {});

/// The universe the saturation would use, in admission order.
std::vector<Formula> saturation_universe(const Consecution& goal, std::size_t max_universe,
                                         const std::vector<Consecution>& hypotheses = {});

// ---------------------------------------------------------------------------

struct Proved {
  Trace trace;
};

struct Refuted {
  CounterModel model;
  FrameClass frame_class;
};

struct Unknown {
  std::string report;
};

using Verdict = std::variant<Proved, Refuted, Unknown>;

std::string_view verdict_name(const Verdict& v);

/// Frame class used to refute goals of the logic; nullopt for the
/// intuitionistic fragment, which has no countermodel search.
std::optional<FrameClass> refutation_class(LogicId logic);
int default_max_states(LogicId logic);

struct DecideOptions {
  SaturationBudget budget;
  /// 0 selects default_max_states(logic).
  int max_states = 0;
  bool parallel = true;
  /// Also try the frames obtained by representing the named algebras.
  bool fixture_seeds = true;
};

/// Interleaves saturation with countermodel search. Proved carries a trace
/// accepted by check_trace, Refuted a model in refutation_class(logic).
Verdict decide(const Consecution& goal, const DecideOptions& options = {});

/// Candidate frames from the representation of the named algebras that lie in the class.
const std::vector<ModalFrame>& fixture_seed_frames(FrameClass c);

}  // namespace fml
