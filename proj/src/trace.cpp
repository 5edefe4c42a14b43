#include <algorithm>
#include <charconv>
#include <sstream>

#include "fml/consequence.hpp"

namespace fml {

const std::vector<std::string>& logic_rules(LogicId logic) {
  static const std::vector<std::string> base{"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
  auto with = [](std::vector<std::string> extra) {
    std::vector<std::string> v = base;
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  static const std::vector<std::string> ortho = with({"dne"});
  static const std::vector<std::string> intuitionistic = with({"pc", "cases"});
  static const std::vector<std::string> classical = with({"dne", "cases"});
  static const std::vector<std::string> modal =
      with({"12", "13", "14", "15", "16", "17", "18", "19", "20"});
  switch (logic) {
    case LogicId::Fundamental: return base;
    case LogicId::Ortho: return ortho;
    case LogicId::IntuitionisticFragment: return intuitionistic;
    case LogicId::Classical: return classical;
    case LogicId::FundamentalModal: return modal;
  }
  return base;
}

namespace {

bool is(const Formula& f, Connective c) { return f.kind() == c; }

bool is_neg_of(const Formula& n, const Formula& f) { return is(n, Connective::Neg) && n.operand() == f; }

int premise_count(const std::string& rule) {
  if (rule == "8" || rule == "9" || rule == "10" || rule == "cases") return 2;
  if (rule == "11" || rule == "19" || rule == "20" || rule == "pc") return 1;
  return 0;
}

// Empty string when the step matches its schema, else the reason.
std::string match(const RuleInstance& s, const std::vector<const RuleInstance*>& p,
                  const std::vector<Consecution>& hyps) {
  const Formula& l = s.lhs;
  const Formula& r = s.rhs;
  const std::string& id = s.rule;
  auto fail = [&](const char* why) { return std::string(why); };

  if (id == "1") return l == r ? "" : fail("rule 1 needs φ ⊢ φ");
  if (id == "2") return is(l, Connective::And) && l.left() == r ? "" : fail("rule 2 needs φ∧ψ ⊢ φ");
  if (id == "3") return is(l, Connective::And) && l.right() == r ? "" : fail("rule 3 needs φ∧ψ ⊢ ψ");
  if (id == "4") return is(r, Connective::Or) && r.left() == l ? "" : fail("rule 4 needs φ ⊢ φ∨ψ");
  if (id == "5") return is(r, Connective::Or) && r.right() == l ? "" : fail("rule 5 needs φ ⊢ ψ∨φ");
  if (id == "6") {
    return is(r, Connective::Neg) && is_neg_of(r.operand(), l) ? "" : fail("rule 6 needs φ ⊢ ¬¬φ");
  }
  if (id == "7") {
    return is(l, Connective::And) && is_neg_of(l.right(), l.left()) ? "" : fail("rule 7 needs φ∧¬φ ⊢ ψ");
  }
  if (id == "8") {
    return p[0]->lhs == l && p[0]->rhs == p[1]->lhs && p[1]->rhs == r ? ""
                                                                      : fail("rule 8 needs φ ⊢ ψ and ψ ⊢ χ");
  }
  if (id == "9") {
    return is(r, Connective::And) && p[0]->lhs == l && p[1]->lhs == l && p[0]->rhs == r.left() &&
                   p[1]->rhs == r.right()
               ? ""
               : fail("rule 9 needs φ ⊢ ψ and φ ⊢ χ for φ ⊢ ψ∧χ");
  }
  if (id == "10") {
    return is(l, Connective::Or) && p[0]->lhs == l.left() && p[1]->lhs == l.right() && p[0]->rhs == r &&
                   p[1]->rhs == r
               ? ""
               : fail("rule 10 needs φ ⊢ χ and ψ ⊢ χ for φ∨ψ ⊢ χ");
  }
  if (id == "11") {
    return is_neg_of(l, p[0]->rhs) && is_neg_of(r, p[0]->lhs) ? "" : fail("rule 11 needs φ ⊢ ψ for ¬ψ ⊢ ¬φ");
  }
  if (id == "12") return is(l, Connective::Bot) || is(r, Connective::Top) ? "" : fail("rule 12 needs ⊥ ⊢ φ or φ ⊢ ⊤");
  if (id == "13") {
    return is(l, Connective::Neg) && is(l.operand(), Connective::Top) && is(r, Connective::Bot)
               ? ""
               : fail("rule 13 needs ¬⊤ ⊢ ⊥");
  }
  if (id == "14") {
    const bool ok = is(l, Connective::And) && is(l.left(), Connective::Box) && is(l.right(), Connective::Box) &&
                    is(r, Connective::Box) && is(r.operand(), Connective::And) &&
                    r.operand().left() == l.left().operand() && r.operand().right() == l.right().operand();
    return ok ? "" : fail("rule 14 needs □φ∧□ψ ⊢ □(φ∧ψ)");
  }
  if (id == "15") {
    const bool ok = is(l, Connective::Dia) && is(l.operand(), Connective::Or) && is(r, Connective::Or) &&
                    is(r.left(), Connective::Dia) && is(r.right(), Connective::Dia) &&
                    r.left().operand() == l.operand().left() && r.right().operand() == l.operand().right();
    return ok ? "" : fail("rule 15 needs ◇(φ∨ψ) ⊢ ◇φ∨◇ψ");
  }
  if (id == "16") {
    const bool ok = is(l, Connective::Dia) && is(l.operand(), Connective::Neg) && is(r, Connective::Neg) &&
                    is(r.operand(), Connective::Box) && r.operand().operand() == l.operand().operand();
    return ok ? "" : fail("rule 16 needs ◇¬φ ⊢ ¬□φ");
  }
  if (id == "17") {
    return is(l, Connective::Top) && is(r, Connective::Box) && is(r.operand(), Connective::Top)
               ? ""
               : fail("rule 17 needs ⊤ ⊢ □⊤");
  }
  if (id == "18") {
    return is(l, Connective::Dia) && is(l.operand(), Connective::Bot) && is(r, Connective::Bot)
               ? ""
               : fail("rule 18 needs ◇⊥ ⊢ ⊥");
  }
  if (id == "19" || id == "20") {
    const Connective c = id == "19" ? Connective::Box : Connective::Dia;
    const bool ok = is(l, c) && is(r, c) && l.operand() == p[0]->lhs && r.operand() == p[0]->rhs;
    return ok ? "" : fail(id == "19" ? "rule 19 needs φ ⊢ ψ for □φ ⊢ □ψ" : "rule 20 needs φ ⊢ ψ for ◇φ ⊢ ◇ψ");
  }
  if (id == "dne") return is(l, Connective::Neg) && is_neg_of(l.operand(), r) ? "" : fail("dne needs ¬¬φ ⊢ φ");
  if (id == "pc") {
    // From φ∧ψ ⊢ φ∧¬φ infer φ ⊢ ¬ψ.
    const Formula& pl = p[0]->lhs;
    const Formula& pr = p[0]->rhs;
    const bool ok = is(pl, Connective::And) && pl.left() == l && is(pr, Connective::And) && pr.left() == l &&
                    is_neg_of(pr.right(), l) && is_neg_of(r, pl.right());
    return ok ? "" : fail("pc needs φ∧ψ ⊢ φ∧¬φ for φ ⊢ ¬ψ");
  }
  if (id == "cases") {
    // From α∧φ ⊢ χ and α∧ψ ⊢ χ infer α∧(φ∨ψ) ⊢ χ.
    const bool ok = is(l, Connective::And) && is(l.right(), Connective::Or) && is(p[0]->lhs, Connective::And) &&
                    is(p[1]->lhs, Connective::And) && p[0]->lhs.left() == l.left() &&
                    p[1]->lhs.left() == l.left() && p[0]->lhs.right() == l.right().left() &&
                    p[1]->lhs.right() == l.right().right() && p[0]->rhs == r && p[1]->rhs == r;
    return ok ? "" : fail("cases needs α∧φ ⊢ χ and α∧ψ ⊢ χ for α∧(φ∨ψ) ⊢ χ");
  }
  if (id == "hyp") {
    const bool ok = std::any_of(hyps.begin(), hyps.end(), [&](const Consecution& h) { return h.lhs == l && h.rhs == r; });
    return ok ? "" : fail("hyp is not one of the hypotheses");
  }
  return "unknown rule '" + id + "'";
}

}  // namespace

TraceCheck check_trace(const Trace& trace, LogicId logic, const std::vector<Consecution>& hypotheses) {
  const auto& allowed = logic_rules(logic);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const RuleInstance& s = trace[i];
    const int step = static_cast<int>(i);
    auto bad = [&](std::string why) { return TraceCheck{false, step, std::move(why)}; };
    if (!in_language(s.lhs, logic) || !in_language(s.rhs, logic)) return bad("formula outside the language");
    const bool listed = std::find(allowed.begin(), allowed.end(), s.rule) != allowed.end();
    if (!listed && s.rule != "hyp") return bad("rule '" + s.rule + "' is not a rule of " + std::string(logic_name(logic)));
    if (static_cast<int>(s.premises.size()) != premise_count(s.rule)) {
      return bad("rule " + s.rule + " takes " + std::to_string(premise_count(s.rule)) + " premises, got " +
                 std::to_string(s.premises.size()));
    }
    std::vector<const RuleInstance*> premises;
    for (int p : s.premises) {
      if (p < 0 || p >= step) return bad("premise " + std::to_string(p) + " does not precede the step");
      premises.push_back(&trace[p]);
    }
    if (std::string why = match(s, premises, hypotheses); !why.empty()) return bad(why);
  }
  return {};
}

bool check_trace_ok(const Trace& trace, LogicId logic) { return check_trace(trace, logic).ok; }

TraceCheck check_proof(const Trace& trace, const Consecution& goal, const std::vector<Consecution>& hypotheses) {
  if (trace.empty()) return {false, -1, "empty trace"};
  TraceCheck c = check_trace(trace, goal.logic, hypotheses);
  if (!c.ok) return c;
  if (trace.back().lhs != goal.lhs || trace.back().rhs != goal.rhs) {
    return {false, static_cast<int>(trace.size()) - 1, "last step does not conclude the goal"};
  }
  return c;
}

std::string serialize_trace(const Trace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& s = trace[i];
    out << s.rule << ": " << render(s.lhs) << " |- " << render(s.rhs);
    for (std::size_t k = 0; k < s.premises.size(); ++k) out << (k == 0 ? " FROM " : ", ") << s.premises[k];
    out << '\n';
  }
  return out.str();
}

Trace parse_trace(std::string_view text, LogicId logic) {
  Trace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("trace line " + std::to_string(lineno) + ": " + why);
    };
    std::string_view rest = line;
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw fail("missing ':' after the rule id");
    std::string rule(rest.substr(0, colon));
    std::vector<int> premises;
    rest.remove_prefix(colon + 1);
    std::string_view body = rest;
    if (auto from = rest.rfind(" FROM "); from != std::string_view::npos) {
      body = rest.substr(0, from);
      std::string_view list = rest.substr(from + 6);
      while (!list.empty()) {
        while (!list.empty() && (list.front() == ' ' || list.front() == ',')) list.remove_prefix(1);
        if (list.empty()) break;
        int v = 0;
        auto [ptr, ec] = std::from_chars(list.data(), list.data() + list.size(), v);
        if (ec != std::errc{}) throw fail("bad premise index");
        list.remove_prefix(static_cast<std::size_t>(ptr - list.data()));
        premises.push_back(v);
      }
    }
    const Consecution c = parse_consecution(body, logic);
    trace.push_back({std::move(rule), c.lhs, c.rhs, std::move(premises)});
  }
  return trace;
}

}  // namespace fml
