#include <algorithm>
#include <map>
#include <mutex>

#include "fml/consequence.hpp"
#include "fml/representation.hpp"

namespace fml {

namespace {

bool eval_classical(const Formula& f, const std::map<std::string, bool>& v) {
  switch (f.kind()) {
    case Connective::Atom: return v.at(f.name());
    case Connective::Neg: return !eval_classical(f.operand(), v);
    case Connective::And: return eval_classical(f.left(), v) && eval_classical(f.right(), v);
    case Connective::Or: return eval_classical(f.left(), v) || eval_classical(f.right(), v);
    default: throw LanguageError("classical evaluation is defined on the propositional language only");
  }
}

// First assignment (atoms in sorted order, false before true) satisfying phi but not psi.
std::optional<std::map<std::string, bool>> classical_counterexample(const Formula& phi, const Formula& psi) {
  check_language(phi, LogicId::Classical);
  check_language(psi, LogicId::Classical);
  auto names = atoms(phi);
  names.merge(atoms(psi));
  const std::vector<std::string> vars(names.begin(), names.end());
  const std::size_t n = vars.size();
  if (n >= 63) throw std::invalid_argument("too many atoms for a truth table");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < n; ++i) v[vars[i]] = (bits >> (n - 1 - i)) & 1U;
    if (eval_classical(phi, v) && !eval_classical(psi, v)) return v;
  }
  return std::nullopt;
}

}  // namespace

bool classical_entails(const Formula& phi, const Formula& psi) { return !classical_counterexample(phi, psi); }

std::string_view verdict_name(const Verdict& v) {
  if (std::holds_alternative<Proved>(v)) return "proved";
  if (std::holds_alternative<Refuted>(v)) return "refuted";
  return "unknown";
}

std::optional<FrameClass> refutation_class(LogicId logic) {
  switch (logic) {
    case LogicId::Fundamental: return FrameClass::Fundamental;
    case LogicId::Ortho: return FrameClass::Ortho;
    case LogicId::Classical: return FrameClass::Classical;
    case LogicId::FundamentalModal: return FrameClass::FundamentalModal;
    case LogicId::IntuitionisticFragment: return std::nullopt;
  }
  return std::nullopt;
}

int default_max_states(LogicId logic) {
  switch (logic) {
    case LogicId::Fundamental: return 4;
    case LogicId::Ortho: return 5;
    case LogicId::FundamentalModal: return 3;
    case LogicId::Classical: return 1;
    case LogicId::IntuitionisticFragment: return 0;
  }
  return 0;
}

const std::vector<ModalFrame>& fixture_seed_frames(FrameClass c) {
  static std::once_flag once;
  static std::map<FrameClass, std::vector<ModalFrame>> seeds;
  std::call_once(once, [] {
    std::vector<ModalFrame> built;
    for (const auto& fx : fixtures()) {
      try {
        built.push_back(build_unified_frame(fx.algebra).frame);
      } catch (const PreconditionError&) {
      }
      built.push_back(build_pairs_frame(fx.algebra).frame);
    }
    for (FrameClass cls : {FrameClass::Any, FrameClass::Fundamental, FrameClass::Ortho, FrameClass::Classical,
                           FrameClass::FundamentalModal}) {
      auto& out = seeds[cls];
      for (const auto& f : built) {
        ModalFrame candidate = f;
        if (cls != FrameClass::FundamentalModal) {
          std::vector<StateSet> rows;
          for (int x = 0; x < f.size(); ++x) rows.push_back(f.open_succ(x));
          candidate = ModalFrame::from_rows(f.size(), rows, {}, {}, false);
          candidate.set_names(f.names());
        }
        if (in_class(candidate, cls) && std::find(out.begin(), out.end(), candidate) == out.end()) {
          out.push_back(std::move(candidate));
        }
      }
    }
  });
  return seeds.at(c);
}

Verdict decide(const Consecution& goal, const DecideOptions& options) {
  check_language(goal.lhs, goal.logic);
  check_language(goal.rhs, goal.logic);
  const SaturationBudget& budget = options.budget;

  auto unknown = [&](const SaturationResult& sat, const SearchStats* search, int max_states) {
    std::string report = "no derivation over " + std::to_string(sat.stats.universe) + " formulas (" +
                         std::to_string(sat.stats.derived) + " consecutions derived" +
                         (sat.stats.limit.empty() ? "" : ", " + sat.stats.limit + " budget reached") + ")";
    if (search) {
      report += "; no countermodel among " + std::to_string(search->frames_examined) + " frames of up to " +
                std::to_string(max_states) + " states";
      if (!search->sizes_skipped.empty()) report += " (larger sizes not enumerated)";
    }
    return Unknown{report};
  };

  if (goal.logic == LogicId::Classical) {
    if (auto v = classical_counterexample(goal.lhs, goal.rhs)) {
      ModalFrame frame = ModalFrame::relational(1, {{0, 0}});
      Valuation val;
      for (const auto& [name, truth] : *v) val[name] = truth ? StateSet::single(0) : StateSet{};
      return Refuted{CounterModel{frame, val, 0}, FrameClass::Classical};
    }
    SaturationResult sat = saturate(goal, budget);
    if (sat.proved) return Proved{std::move(sat.trace)};
    Unknown u = unknown(sat, nullptr, 0);
    u.report = "classically valid by truth table, but " + u.report;
    return u;
  }

  const auto cls = refutation_class(goal.logic);
  if (!cls) {
    SaturationResult sat = saturate(goal, budget);
    if (sat.proved) return Proved{std::move(sat.trace)};
    return unknown(sat, nullptr, 0);
  }

  const int max_states = options.max_states > 0 ? options.max_states : default_max_states(goal.logic);
  SearchOptions search;
  search.parallel = options.parallel;
  search.max_states = std::min(2, max_states);
  SearchResult found = countermodel_search(goal.lhs, goal.rhs, *cls, search);
  if (found.model) return Refuted{std::move(*found.model), *cls};

  SaturationBudget small = budget;
  small.max_universe = std::min<std::size_t>(64, budget.max_universe);
  SaturationResult sat = saturate(goal, small);
  if (sat.proved) return Proved{std::move(sat.trace)};

  search.max_states = max_states;
  if (options.fixture_seeds) search.seeds = fixture_seed_frames(*cls);
  found = countermodel_search(goal.lhs, goal.rhs, *cls, search);
  if (found.model) return Refuted{std::move(*found.model), *cls};

  if (budget.max_universe > small.max_universe) {
    sat = saturate(goal, budget);
    if (sat.proved) return Proved{std::move(sat.trace)};
  }
  return unknown(sat, &found.stats, max_states);
}

}  // namespace fml
