// Forward saturation: the least relation closed under the rules of a logic,
// restricted to a finite universe of formulas that grows in stages.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "fml/consequence.hpp"

namespace fml {

namespace {

constexpr std::size_t kRoundSize = 64;

enum Rule : std::int8_t {
  R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11,
  R12, R13, R14, R15, R16, R17, R18, R19, R20,
  DNE, PC, CASES, HYP,
};

std::string rule_id(std::int8_t r) {
  switch (r) {
    case DNE: return "dne";
    case PC: return "pc";
    case CASES: return "cases";
    case HYP: return "hyp";
    default: return std::to_string(r);
  }
}

struct RuleSet {
  bool modal = false, dne = false, pc = false, cases = false;

  explicit RuleSet(LogicId logic) {
    switch (logic) {
      case LogicId::Fundamental: break;
      case LogicId::Ortho: dne = true; break;
      case LogicId::IntuitionisticFragment: pc = cases = true; break;
      case LogicId::Classical: dne = cases = true; break;
      case LogicId::FundamentalModal: modal = true; break;
    }
  }
};

std::uint64_t pair_key(int i, int j) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) | static_cast<std::uint32_t>(j);
}
int key_lhs(std::uint64_t k) { return static_cast<int>(k >> 32); }
int key_rhs(std::uint64_t k) { return static_cast<int>(k & 0xffffffffU); }

// ---------------------------------------------------------------------------
// Universe: subformula-closed list of formulas with structural lookups.

class Universe {
 public:
  int size() const { return static_cast<int>(items_.size()); }
  const Formula& at(int i) const { return items_[i]; }
  const std::vector<Formula>& items() const { return items_; }

  int find(const Formula& f) const {
    auto it = index_.find(f.text());
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const Formula& f) const { return index_.count(f.text()) > 0; }

  // Children must already be present.
  int add(const Formula& f) {
    if (int i = find(f); i >= 0) return i;
    const int i = size();
    items_.push_back(f);
    index_.emplace(f.text(), i);
    kind_.push_back(f.kind());
    int l = -1, r = -1;
    if (f.is_unary()) l = find(f.operand());
    if (f.is_binary()) {
      l = find(f.left());
      r = find(f.right());
    }
    left_.push_back(l);
    right_.push_back(r);
    neg_of_.push_back(-1);
    box_of_.push_back(-1);
    dia_of_.push_back(-1);
    by_left_and_.emplace_back();
    switch (f.kind()) {
      case Connective::Neg: neg_of_[l] = i; break;
      case Connective::Box: box_of_[l] = i; break;
      case Connective::Dia: dia_of_[l] = i; break;
      case Connective::And:
        and_of_[pair_key(l, r)] = i;
        by_left_and_[l].push_back(i);
        break;
      case Connective::Or: or_of_[pair_key(l, r)] = i; break;
      case Connective::Bot: bot_ = i; break;
      case Connective::Top: top_ = i; break;
      default: break;
    }
    return i;
  }

  Connective kind(int i) const { return kind_[i]; }
  int left(int i) const { return left_[i]; }
  int right(int i) const { return right_[i]; }
  int neg_of(int i) const { return i < 0 ? -1 : neg_of_[i]; }
  int box_of(int i) const { return i < 0 ? -1 : box_of_[i]; }
  int dia_of(int i) const { return i < 0 ? -1 : dia_of_[i]; }
  int and_of(int a, int b) const { return lookup(and_of_, a, b); }
  int or_of(int a, int b) const { return lookup(or_of_, a, b); }
  const std::vector<int>& ands_with_left(int a) const { return by_left_and_[a]; }
  int bot() const { return bot_; }
  int top() const { return top_; }

 private:
  static int lookup(const std::unordered_map<std::uint64_t, int>& m, int a, int b) {
    if (a < 0 || b < 0) return -1;
    auto it = m.find(pair_key(a, b));
    return it == m.end() ? -1 : it->second;
  }

  std::vector<Formula> items_;
  std::unordered_map<std::string, int> index_;
  std::vector<Connective> kind_;
  std::vector<int> left_, right_, neg_of_, box_of_, dia_of_;
  std::vector<std::vector<int>> by_left_and_;
  std::unordered_map<std::uint64_t, int> and_of_, or_of_;
  int bot_ = -1, top_ = -1;
};

bool by_order(const Formula& a, const Formula& b) { return FormulaOrder{}(a, b); }

// Produces the universe stage by stage. The sequence of admitted formulas
// does not depend on the cap, so a larger cap always extends a smaller one.
class UniverseBuilder {
 public:
  UniverseBuilder(const Consecution& goal, const std::vector<Consecution>& hyps, std::size_t cap)
      : modal_(is_modal_language(goal.logic)), cap_(cap) {
    FormulaSet seed = subformulas(goal.lhs);
    seed.merge(subformulas(goal.rhs));
    for (const auto& h : hyps) {
      seed.merge(subformulas(h.lhs));
      seed.merge(subformulas(h.rhs));
    }
    if (modal_) {
      seed.insert(Formula::bot());
      seed.insert(Formula::top());
    }
    closure_.assign(seed.begin(), seed.end());
  }

  /// Appends the next stage to u. Returns false when nothing was added.
  bool next(Universe& u) {
    const int before = u.size();
    if (stage_ == 0) {
      if (closure_.size() > cap_) {
        overflow_ = true;
        return false;
      }
      for (const auto& f : closure_) u.add(f);
    } else if (stage_ == 1) {
      std::vector<Formula> cands;
      for (const auto& f : closure_) {
        Formula n = Formula::neg(f);
        cands.push_back(n);
        cands.push_back(Formula::neg(n));
      }
      admit(u, std::move(cands), cands.size());
    } else if (stage_ == 2) {
      // χ∧¬χ, the left side of rule 7, for every χ whose negation is present.
      std::vector<Formula> cands;
      for (int i = 0; i < u.size(); ++i) {
        if (int n = u.neg_of(i); n >= 0) cands.push_back(Formula::conj(u.at(i), u.at(n)));
      }
      admit(u, std::move(cands), cands.size());
    } else {
      admit(u, round_candidates(u), kRoundSize);
    }
    ++stage_;
    return u.size() > before;
  }

  bool overflow() const { return overflow_; }
  bool full(const Universe& u) const { return static_cast<std::size_t>(u.size()) >= cap_; }

 private:
  void admit(Universe& u, std::vector<Formula> cands, std::size_t limit) {
    std::sort(cands.begin(), cands.end(), by_order);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::size_t taken = 0;
    for (const auto& f : cands) {
      if (taken == limit || full(u)) break;
      if (u.contains(f)) continue;
      // Operands are admitted before the compound; stage 1 adds ¬χ before ¬¬χ.
      u.add(f);
      ++taken;
    }
  }

  // Every candidate of the form ¬χ, χ1∧χ2, χ1∨χ2 (and □χ, ◇χ when modal) up
  // to the smallest size bound that guarantees kRoundSize new formulas.
  std::vector<Formula> round_candidates(const Universe& u) const {
    std::vector<int> order(u.size());
    for (int i = 0; i < u.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return by_order(u.at(a), u.at(b)); });
    std::vector<std::size_t> sizes;
    for (int i : order) sizes.push_back(u.at(i).size());
    const std::size_t unary_ops = modal_ ? 3 : 1;
    const std::size_t want = kRoundSize + static_cast<std::size_t>(u.size());
    const std::size_t max_bound = 2 * sizes.back() + 1;

    auto count_up_to = [&](std::size_t bound) {
      std::size_t n = 0;
      for (std::size_t s : sizes) {
        if (s + 1 <= bound) n += unary_ops;
      }
      // Ordered pairs with s1 + s2 + 1 <= bound, for each of the two binary connectives.
      std::size_t j = sizes.size();
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        while (j > 0 && sizes[i] + sizes[j - 1] + 1 > bound) --j;
        n += 2 * j;
      }
      return n;
    };
    std::size_t bound = 2;
    while (bound < max_bound && count_up_to(bound) < want) ++bound;

    std::vector<Formula> cands;
    for (std::size_t a = 0; a < order.size(); ++a) {
      const Formula& x = u.at(order[a]);
      if (x.size() + 1 <= bound) {
        cands.push_back(Formula::neg(x));
        if (modal_) {
          cands.push_back(Formula::box(x));
          cands.push_back(Formula::dia(x));
        }
      }
      for (std::size_t b = 0; b < order.size(); ++b) {
        const Formula& y = u.at(order[b]);
        if (x.size() + y.size() + 1 > bound) break;
        cands.push_back(Formula::conj(x, y));
        cands.push_back(Formula::disj(x, y));
      }
    }
    return cands;
  }

  bool modal_;
  std::size_t cap_;
  std::vector<Formula> closure_;
  int stage_ = 0;
  bool overflow_ = false;
};

// ---------------------------------------------------------------------------

class StepLimit {};

class Engine {
 public:
  Engine(const Universe& u, RuleSet rules, std::size_t cap, std::size_t max_steps)
      : u_(u), rules_(rules), words_((cap + 63) / 64), max_steps_(max_steps) {}

  void set_goal(int l, int r) {
    goal_l_ = l;
    goal_r_ = r;
  }
  bool found() const { return found_; }
  std::size_t derived() const { return just_.size(); }

  void grow() {
    while (static_cast<int>(rows_.size()) < u_.size()) {
      rows_.emplace_back(words_, 0);
      cols_.emplace_back(words_, 0);
    }
  }

  void axioms(const std::vector<Consecution>& hyps) {
    const int n = u_.size();
    const int bot = u_.bot(), top = u_.top();
    for (int i = 0; i < n; ++i) {
      add(i, i, R1);
      const Connective k = u_.kind(i);
      const int l = u_.left(i), r = u_.right(i);
      if (k == Connective::And) {
        add(i, l, R2);
        add(i, r, R3);
        if (u_.kind(r) == Connective::Neg && u_.left(r) == l) {
          for (int x = 0; x < n; ++x) add(i, x, R7);
        }
      }
      if (k == Connective::Or) {
        add(l, i, R4);
        add(r, i, R5);
      }
      if (int nn = u_.neg_of(u_.neg_of(i)); nn >= 0) add(i, nn, R6);
      if (rules_.dne && k == Connective::Neg && u_.kind(l) == Connective::Neg) add(i, u_.left(l), DNE);
      if (!rules_.modal) continue;
      if (bot >= 0) add(bot, i, R12);
      if (top >= 0) add(i, top, R12);
      if (k == Connective::Neg && l == top && bot >= 0) add(i, bot, R13);
      if (k == Connective::And && u_.kind(l) == Connective::Box && u_.kind(r) == Connective::Box) {
        if (int b = u_.box_of(u_.and_of(u_.left(l), u_.left(r))); b >= 0) add(i, b, R14);
      }
      if (k == Connective::Dia && u_.kind(l) == Connective::Or) {
        const int o = u_.or_of(u_.dia_of(u_.left(l)), u_.dia_of(u_.right(l)));
        if (o >= 0) add(i, o, R15);
      }
      if (k == Connective::Dia && u_.kind(l) == Connective::Neg) {
        if (int nb = u_.neg_of(u_.box_of(u_.left(l))); nb >= 0) add(i, nb, R16);
      }
      if (k == Connective::Box && l == top) add(top, i, R17);
      if (k == Connective::Dia && l == bot) add(i, bot, R18);
    }
    for (const auto& h : hyps) add(u_.find(h.lhs), u_.find(h.rhs), HYP);
  }

  // Queue every derived pair again so that rules see formulas admitted since.
  void requeue() {
    work_.clear();
    for (const auto& [key, j] : just_) work_.push_back(key);
    std::sort(work_.begin(), work_.end());
  }

  void run() {
    while (!work_.empty() && !found_) {
      const std::uint64_t key = work_.back();
      work_.pop_back();
      process(key_lhs(key), key_rhs(key));
    }
  }

  Trace trace() const {
    Trace out;
    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::pair<std::uint64_t, bool>> stack{{pair_key(goal_l_, goal_r_), false}};
    while (!stack.empty()) {
      auto [key, expanded] = stack.back();
      stack.pop_back();
      if (index.count(key)) continue;
      const Just& j = just_.at(key);
      if (!expanded) {
        stack.push_back({key, true});
        if (j.p2 != kNone && !index.count(j.p2)) stack.push_back({j.p2, false});
        if (j.p1 != kNone && !index.count(j.p1)) stack.push_back({j.p1, false});
        continue;
      }
      RuleInstance step{rule_id(j.rule), u_.at(key_lhs(key)), u_.at(key_rhs(key)), {}};
      if (j.p1 != kNone) step.premises.push_back(index.at(j.p1));
      if (j.p2 != kNone) step.premises.push_back(index.at(j.p2));
      index[key] = static_cast<int>(out.size());
      out.push_back(std::move(step));
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  struct Just {
    std::int8_t rule;
    std::uint64_t p1, p2;
  };

  bool has(int i, int j) const { return (rows_[i][j >> 6] >> (j & 63)) & 1U; }

  void add(int i, int j, std::int8_t rule, std::uint64_t p1 = kNone, std::uint64_t p2 = kNone) {
    if (i < 0 || j < 0 || has(i, j)) return;
    if (just_.size() >= max_steps_) throw StepLimit{};
    rows_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
    cols_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
    const std::uint64_t key = pair_key(i, j);
    just_.emplace(key, Just{rule, p1, p2});
    work_.push_back(key);
    if (i == goal_l_ && j == goal_r_) found_ = true;
  }

  template <typename F>
  static void for_each_bit(const std::vector<std::uint64_t>& bits, F&& f) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      for (std::uint64_t b = bits[w]; b; b &= b - 1) f(static_cast<int>(w * 64 + std::countr_zero(b)));
    }
  }

  void process(int i, int j) {
    const std::uint64_t ij = pair_key(i, j);
    // 8: transitivity, with the new pair on either side.
    const auto succ_j = rows_[j];
    for_each_bit(succ_j, [&](int k) { add(i, k, R8, ij, pair_key(j, k)); });
    const auto pred_i = cols_[i];
    for_each_bit(pred_i, [&](int h) { add(h, j, R8, pair_key(h, i), ij); });
    // 9: conjunction introduction on the right.
    const auto succ_i = rows_[i];
    for_each_bit(succ_i, [&](int k) {
      add(i, u_.and_of(j, k), R9, ij, pair_key(i, k));
      add(i, u_.and_of(k, j), R9, pair_key(i, k), ij);
    });
    // 10: disjunction elimination on the left.
    const auto pred_j = cols_[j];
    for_each_bit(pred_j, [&](int h) {
      add(u_.or_of(i, h), j, R10, ij, pair_key(h, j));
      add(u_.or_of(h, i), j, R10, pair_key(h, j), ij);
    });
    // 11: contraposition.
    add(u_.neg_of(j), u_.neg_of(i), R11, ij);
    if (rules_.modal) {
      add(u_.box_of(i), u_.box_of(j), R19, ij);
      add(u_.dia_of(i), u_.dia_of(j), R20, ij);
    }
    if (u_.kind(i) != Connective::And) return;
    const int alpha = u_.left(i), phi = u_.right(i);
    if (rules_.pc && u_.kind(j) == Connective::And && u_.left(j) == alpha) {
      const int r = u_.right(j);
      if (u_.kind(r) == Connective::Neg && u_.left(r) == alpha) add(alpha, u_.neg_of(phi), PC, ij);
    }
    if (rules_.cases) {
      for (int k : u_.ands_with_left(alpha)) {
        if (!has(k, j)) continue;
        const int psi = u_.right(k);
        add(u_.and_of(alpha, u_.or_of(phi, psi)), j, CASES, ij, pair_key(k, j));
        add(u_.and_of(alpha, u_.or_of(psi, phi)), j, CASES, pair_key(k, j), ij);
      }
    }
  }

  const Universe& u_;
  RuleSet rules_;
  std::size_t words_;
  std::size_t max_steps_;
  std::vector<std::vector<std::uint64_t>> rows_, cols_;
  std::unordered_map<std::uint64_t, Just> just_;
  std::vector<std::uint64_t> work_;
  int goal_l_ = -1, goal_r_ = -1;
  bool found_ = false;
};

void check_inputs(const Consecution& goal, const std::vector<Consecution>& hyps) {
  check_language(goal.lhs, goal.logic);
  check_language(goal.rhs, goal.logic);
  for (const auto& h : hyps) {
    check_language(h.lhs, goal.logic);
    check_language(h.rhs, goal.logic);
  }
}

}  // namespace

std::vector<Formula> saturation_universe(const Consecution& goal, std::size_t max_universe,
                                         const std::vector<Consecution>& hypotheses) {
  check_inputs(goal, hypotheses);
  Universe u;
  UniverseBuilder builder(goal, hypotheses, max_universe);
  while (!builder.full(u) && builder.next(u)) {
  }
  return u.items();
}

SaturationResult saturate(const Consecution& goal, const SaturationBudget& budget,
                          const std::vector<Consecution>& hypotheses) {
  check_inputs(goal, hypotheses);
  if (budget.max_universe == 0 || budget.max_steps == 0) throw std::invalid_argument("budgets must be positive");
  SaturationResult result;
  Universe u;
  UniverseBuilder builder(goal, hypotheses, budget.max_universe);
  Engine engine(u, RuleSet(goal.logic), budget.max_universe, budget.max_steps);
  try {
    while (!builder.full(u) || result.stats.rounds == 0) {
      if (!builder.next(u)) break;
      ++result.stats.rounds;
      engine.grow();
      if (result.stats.rounds == 1) engine.set_goal(u.find(goal.lhs), u.find(goal.rhs));
      engine.requeue();
      engine.axioms(hypotheses);
      engine.run();
      if (engine.found()) break;
    }
    if (builder.overflow() || (!engine.found() && builder.full(u))) result.stats.limit = "universe";
  } catch (const StepLimit&) {
    result.stats.limit = "steps";
  }
  result.stats.universe = static_cast<std::size_t>(u.size());
  result.stats.derived = engine.derived();
  if (engine.found()) {
    result.proved = true;
    result.stats.limit.clear();
    result.trace = engine.trace();
  }
  return result;
}

}  // namespace fml
