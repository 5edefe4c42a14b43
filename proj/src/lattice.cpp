#include "fml/lattice.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace fml {

namespace {

std::vector<char> order_closure(const LatticeData& d) {
  const int n = static_cast<int>(d.elements.size());
  std::vector<char> le(n * n, 0);
  for (int i = 0; i < n; ++i) le[i * n + i] = 1;
  for (auto [i, j] : d.leq) le[i * n + j] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!le[i * n + k]) continue;
      for (int j = 0; j < n; ++j) {
        if (le[k * n + j]) le[i * n + j] = 1;
      }
    }
  }
  return le;
}

// Greatest element of `cands` under le, or -1.
int greatest(const std::vector<int>& cands, const std::vector<char>& le, int n) {
  for (int g : cands) {
    if (std::all_of(cands.begin(), cands.end(), [&](int c) { return le[c * n + g]; })) return g;
  }
  return -1;
}

int least(const std::vector<int>& cands, const std::vector<char>& le, int n) {
  for (int g : cands) {
    if (std::all_of(cands.begin(), cands.end(), [&](int c) { return le[g * n + c]; })) return g;
  }
  return -1;
}

struct Tables {
  std::vector<char> order;
  std::vector<int> meet, join;
  int bottom = -1, top = -1;
};

// Builds the tables or returns the first defect.
std::optional<std::string> build_tables(const LatticeData& d, Tables& t) {
  const int n = static_cast<int>(d.elements.size());
  if (n == 0) return "lattice has no elements";
  std::set<std::string> seen;
  for (const auto& e : d.elements) {
    if (!seen.insert(e).second) return "duplicate element name '" + e + "'";
  }
  for (auto [i, j] : d.leq) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      return "order pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range";
    }
  }
  auto& le = t.order = order_closure(d);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (le[i * n + j] && le[j * n + i]) {
        return "order is not antisymmetric: " + d.elements[i] + " ≤ " + d.elements[j] + " ≤ " + d.elements[i];
      }
    }
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  t.bottom = least(all, le, n);
  if (t.bottom < 0) return "no bottom element";
  t.top = greatest(all, le, n);
  if (t.top < 0) return "no top element";
  t.meet.assign(n * n, -1);
  t.join.assign(n * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> lower, upper;
      for (int c = 0; c < n; ++c) {
        if (le[c * n + a] && le[c * n + b]) lower.push_back(c);
        if (le[a * n + c] && le[b * n + c]) upper.push_back(c);
      }
      const int m = greatest(lower, le, n);
      if (m < 0) return "no greatest lower bound for (" + d.elements[a] + ", " + d.elements[b] + ")";
      const int j = least(upper, le, n);
      if (j < 0) return "no least upper bound for (" + d.elements[a] + ", " + d.elements[b] + ")";
      t.meet[a * n + b] = m;
      t.join[a * n + b] = j;
    }
  }
  const std::array<std::pair<const char*, const std::vector<int>*>, 3> tables{
      {{"neg", &d.neg}, {"box", &d.box}, {"dia", &d.dia}}};
  for (auto [name, table] : tables) {
    if (table->empty()) continue;
    if (static_cast<int>(table->size()) != n) {
      return std::string(name) + " table has " + std::to_string(table->size()) + " entries, expected " +
             std::to_string(n);
    }
    for (int v : *table) {
      if (v < 0 || v >= n) return std::string(name) + " table entry " + std::to_string(v) + " out of range";
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const LatticeData& data) {
  Tables t;
  return build_tables(data, t);
}

LatticeAlgebra::LatticeAlgebra(LatticeData data) : data_(std::move(data)) {
  Tables t;
  if (auto defect = build_tables(data_, t)) throw InvalidLattice(*defect);
  n_ = static_cast<int>(data_.elements.size());
  order_ = std::move(t.order);
  meet_ = std::move(t.meet);
  join_ = std::move(t.join);
  bottom_ = t.bottom;
  top_ = t.top;
}

int LatticeAlgebra::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i) {
    if (data_.elements[i] == name) return i;
  }
  return -1;
}

int LatticeAlgebra::meet_all(const std::vector<int>& xs) const {
  int m = top_;
  for (int x : xs) m = meet(m, x);
  return m;
}

int LatticeAlgebra::join_all(const std::vector<int>& xs) const {
  int j = bottom_;
  for (int x : xs) j = join(j, x);
  return j;
}

// ---------------------------------------------------------------------------

namespace {

struct PropertyInfo {
  Property p;
  const char* name;
};

constexpr PropertyInfo kProperties[] = {
    {Property::Antitone, "antitone"},
    {Property::NegTopIsBot, "neg_top_is_bot"},
    {Property::DoubleInflationary, "double_inflationary"},
    {Property::DualSelfAdjoint, "dual_self_adjoint"},
    {Property::Semicomplementation, "semicomplementation"},
    {Property::WeakPseudocomplementation, "weak_pseudocomplementation"},
    {Property::Pseudocomplementation, "pseudocomplementation"},
    {Property::Involutive, "involutive"},
    {Property::MonotoneBox, "monotone_box"},
    {Property::MonotoneDia, "monotone_dia"},
    {Property::Multiplicative, "multiplicative"},
    {Property::Additive, "additive"},
    {Property::CompletelyMultiplicative, "completely_multiplicative"},
    {Property::CompletelyAdditive, "completely_additive"},
    {Property::BoxBelowDia, "box_below_dia"},
};

struct AxiomInfo {
  Axiom a;
  const char* name;
  const char* formula;
};

constexpr AxiomInfo kAxioms[] = {
    {Axiom::DiamondNeg, "DiamondNeg", "◇¬a ≤ ¬□a"}, {Axiom::BoxNeg, "BoxNeg", "□¬a ≤ ¬◇a"},
    {Axiom::NegDiamond, "NegDiamond", "¬◇a ≤ □¬a"}, {Axiom::NegBox, "NegBox", "¬□a ≤ ◇¬a"},
    {Axiom::DiaDef, "DiaDef", "◇a = ¬□¬a"},         {Axiom::BoxDef, "BoxDef", "□a = ¬◇¬a"},
};

void require(bool present, const char* op, std::string_view what) {
  if (!present) throw MissingOperation(std::string(what) + " needs the " + op + " table");
}

enum class Op { Neg, Box, Dia };

int apply(const LatticeAlgebra& l, Op op, int x) {
  switch (op) {
    case Op::Neg: return l.neg(x);
    case Op::Box: return l.box(x);
    case Op::Dia: return l.dia(x);
  }
  return x;
}

const char* symbol(Op op) {
  switch (op) {
    case Op::Neg: return "¬";
    case Op::Box: return "□";
    case Op::Dia: return "◇";
  }
  return "";
}

void require_ops(const LatticeAlgebra& l, std::initializer_list<Op> ops, std::string_view what) {
  for (Op op : ops) {
    switch (op) {
      case Op::Neg: require(l.has_neg(), "neg", what); break;
      case Op::Box: require(l.has_box(), "box", what); break;
      case Op::Dia: require(l.has_dia(), "dia", what); break;
    }
  }
}

// Failure test for a property at one witness tuple.
bool fails_at(const LatticeAlgebra& l, Property p, const std::vector<int>& w) {
  auto pair_ok = [&](auto&& pred) { return w.size() == 2 && pred(w[0], w[1]); };
  auto one_ok = [&](auto&& pred) { return w.size() == 1 && pred(w[0]); };
  switch (p) {
    case Property::Antitone:
      return pair_ok([&](int a, int b) { return l.leq(a, b) && !l.leq(l.neg(b), l.neg(a)); });
    case Property::NegTopIsBot: return one_ok([&](int a) { return a == l.top() && l.neg(a) != l.bottom(); });
    case Property::DoubleInflationary: return one_ok([&](int a) { return !l.leq(a, l.neg(l.neg(a))); });
    case Property::DualSelfAdjoint:
      return pair_ok([&](int a, int b) { return l.leq(a, l.neg(b)) && !l.leq(b, l.neg(a)); });
    case Property::Semicomplementation: return one_ok([&](int a) { return l.meet(a, l.neg(a)) != l.bottom(); });
    case Property::WeakPseudocomplementation:
      return fails_at(l, Property::Semicomplementation, w) || fails_at(l, Property::DualSelfAdjoint, w);
    case Property::Pseudocomplementation:
      return fails_at(l, Property::Semicomplementation, w) ||
             pair_ok([&](int a, int b) { return l.meet(a, b) == l.bottom() && !l.leq(b, l.neg(a)); });
    case Property::Involutive: return one_ok([&](int a) { return l.neg(l.neg(a)) != a; });
    case Property::MonotoneBox:
      return pair_ok([&](int a, int b) { return l.leq(a, b) && !l.leq(l.box(a), l.box(b)); });
    case Property::MonotoneDia:
      return pair_ok([&](int a, int b) { return l.leq(a, b) && !l.leq(l.dia(a), l.dia(b)); });
    case Property::Multiplicative:
      return pair_ok([&](int a, int b) { return l.box(l.meet(a, b)) != l.meet(l.box(a), l.box(b)); });
    case Property::Additive:
      return pair_ok([&](int a, int b) { return l.dia(l.join(a, b)) != l.join(l.dia(a), l.dia(b)); });
    case Property::CompletelyMultiplicative:
      return one_ok([&](int a) { return a == l.top() && l.box(a) != l.top(); }) ||
             fails_at(l, Property::Multiplicative, w);
    case Property::CompletelyAdditive:
      return one_ok([&](int a) { return a == l.bottom() && l.dia(a) != l.bottom(); }) ||
             fails_at(l, Property::Additive, w);
    case Property::BoxBelowDia: return one_ok([&](int a) { return !l.leq(l.box(a), l.dia(a)); });
  }
  return false;
}

std::vector<Op> ops_for(Property p) {
  switch (p) {
    case Property::MonotoneBox:
    case Property::Multiplicative:
    case Property::CompletelyMultiplicative: return {Op::Box};
    case Property::MonotoneDia:
    case Property::Additive:
    case Property::CompletelyAdditive: return {Op::Dia};
    case Property::BoxBelowDia: return {Op::Box, Op::Dia};
    default: return {Op::Neg};
  }
}

// Arity of the instances searched, in the order they are tried.
std::vector<int> arities(Property p) {
  switch (p) {
    case Property::NegTopIsBot:
    case Property::DoubleInflationary:
    case Property::Semicomplementation:
    case Property::Involutive:
    case Property::BoxBelowDia: return {1};
    case Property::WeakPseudocomplementation:
    case Property::Pseudocomplementation:
    case Property::CompletelyMultiplicative:
    case Property::CompletelyAdditive: return {1, 2};
    default: return {2};
  }
}

// Both sides of an axiom at element x: lhs = outer1(inner1(x)), rhs = outer2(inner2(x)).
struct AxiomShape {
  Op outer1, inner1, outer2, inner2;
  bool equation;
};

// DiaDef and BoxDef have a three-deep right side; they are handled separately.
AxiomShape shape(Axiom a) {
  switch (a) {
    case Axiom::DiamondNeg: return {Op::Dia, Op::Neg, Op::Neg, Op::Box, false};
    case Axiom::BoxNeg: return {Op::Box, Op::Neg, Op::Neg, Op::Dia, false};
    case Axiom::NegDiamond: return {Op::Neg, Op::Dia, Op::Box, Op::Neg, false};
    case Axiom::NegBox: return {Op::Neg, Op::Box, Op::Dia, Op::Neg, false};
    default: return {Op::Neg, Op::Neg, Op::Neg, Op::Neg, true};
  }
}

bool axiom_fails_at(const LatticeAlgebra& l, Axiom a, int x) {
  if (a == Axiom::DiaDef) return l.dia(x) != l.neg(l.box(l.neg(x)));
  if (a == Axiom::BoxDef) return l.box(x) != l.neg(l.dia(l.neg(x)));
  const AxiomShape s = shape(a);
  return !l.leq(apply(l, s.outer1, apply(l, s.inner1, x)), apply(l, s.outer2, apply(l, s.inner2, x)));
}

std::string axiom_chain(const LatticeAlgebra& l, Axiom a, int x) {
  const std::string& nx = l.name(x);
  if (a == Axiom::DiaDef || a == Axiom::BoxDef) {
    const Op outer = a == Axiom::DiaDef ? Op::Dia : Op::Box;
    const Op inner = a == Axiom::DiaDef ? Op::Box : Op::Dia;
    const int u = l.neg(x), w = apply(l, inner, u), v = l.neg(w);
    return std::string(symbol(outer)) + nx + " = " + l.name(apply(l, outer, x)) + " ≠ " + l.name(v) + " = ¬" +
           l.name(w) + " = ¬" + symbol(inner) + l.name(u) + " = ¬" + symbol(inner) + "¬" + nx;
  }
  const AxiomShape s = shape(a);
  const int i1 = apply(l, s.inner1, x), v1 = apply(l, s.outer1, i1);
  const int i2 = apply(l, s.inner2, x), v2 = apply(l, s.outer2, i2);
  return std::string(symbol(s.outer1)) + symbol(s.inner1) + nx + " = " + symbol(s.outer1) + l.name(i1) + " = " +
         l.name(v1) + " ≰ " + l.name(v2) + " = " + symbol(s.outer2) + l.name(i2) + " = " + symbol(s.outer2) +
         symbol(s.inner2) + nx;
}

}  // namespace

std::string_view property_name(Property p) {
  for (const auto& info : kProperties) {
    if (info.p == p) return info.name;
  }
  return "?";
}

Property parse_property(std::string_view name) {
  for (const auto& info : kProperties) {
    if (info.name == name) return info.p;
  }
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> all = [] {
    std::vector<Property> v;
    for (const auto& info : kProperties) v.push_back(info.p);
    return v;
  }();
  return all;
}

std::string_view axiom_name(Axiom a) {
  for (const auto& info : kAxioms) {
    if (info.a == a) return info.name;
  }
  return "?";
}

std::string_view axiom_formula(Axiom a) {
  for (const auto& info : kAxioms) {
    if (info.a == a) return info.formula;
  }
  return "?";
}

Axiom parse_axiom(std::string_view name) {
  for (const auto& info : kAxioms) {
    if (info.name == name) return info.a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

const std::vector<Axiom>& all_axioms() {
  static const std::vector<Axiom> all = [] {
    std::vector<Axiom> v;
    for (const auto& info : kAxioms) v.push_back(info.a);
    return v;
  }();
  return all;
}

PropertyReport check_property(const LatticeAlgebra& l, Property p) {
  const std::string_view name = property_name(p);
  for (Op op : ops_for(p)) require_ops(l, {op}, name);
  PropertyReport report{std::string(name)};
  const int n = l.size();
  for (int arity : arities(p)) {
    if (arity == 1) {
      for (int a = 0; a < n; ++a) {
        if (fails_at(l, p, {a})) {
          report.holds = false;
          report.witness = {a};
          return report;
        }
      }
    } else {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (fails_at(l, p, {a, b})) {
            report.holds = false;
            report.witness = {a, b};
            return report;
          }
        }
      }
    }
  }
  return report;
}

PropertyReport check_axiom(const LatticeAlgebra& l, Axiom a) {
  const std::string_view name = axiom_name(a);
  require_ops(l, {Op::Neg, Op::Box, Op::Dia}, name);
  PropertyReport report{std::string(name)};
  for (int x = 0; x < l.size(); ++x) {
    if (axiom_fails_at(l, a, x)) {
      report.holds = false;
      report.witness = {x};
      report.chain = axiom_chain(l, a, x);
      break;
    }
  }
  return report;
}

bool witness_fails(const LatticeAlgebra& l, Property p, const std::vector<int>& witness) {
  for (int x : witness) {
    if (x < 0 || x >= l.size()) return false;
  }
  return fails_at(l, p, witness);
}

bool witness_fails(const LatticeAlgebra& l, Axiom a, const std::vector<int>& witness) {
  return witness.size() == 1 && witness[0] >= 0 && witness[0] < l.size() && axiom_fails_at(l, a, witness[0]);
}

bool same_chain(std::string_view a, std::string_view b) {
  auto squash = [](std::string_view s) {
    std::string out;
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
  };
  return squash(a) == squash(b);
}

}  // namespace fml
