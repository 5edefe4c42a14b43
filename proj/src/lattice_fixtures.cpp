#include <stdexcept>

#include "fml/lattice.hpp"

namespace fml {

namespace {

LatticeData diamond() { return {{"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {}, {}, {}}; }

LatticeData diamond_with_top() {
  return {{"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, {}, {}, {}};
}

LatticeData chain3() { return {{"0", "a", "1"}, {{0, 1}, {1, 2}}, {}, {}, {}}; }

// ¬a = the largest x with a ∧ x = 0, taken as the join of all such x; the
// fixtures using this are distributive, so the join is itself disjoint from a.
std::vector<int> pseudocomplement(const LatticeData& d) {
  const LatticeAlgebra l(d);
  std::vector<int> neg(l.size());
  for (int a = 0; a < l.size(); ++a) {
    std::vector<int> disjoint;
    for (int x = 0; x < l.size(); ++x) {
      if (l.meet(a, x) == l.bottom()) disjoint.push_back(x);
    }
    neg[a] = l.join_all(disjoint);
    if (l.meet(a, neg[a]) != l.bottom()) throw std::logic_error("no pseudocomplement for " + l.name(a));
  }
  return neg;
}

LatticeAlgebra with_tables(LatticeData d, std::vector<int> neg, std::vector<int> box, std::vector<int> dia) {
  d.neg = std::move(neg);
  d.box = std::move(box);
  d.dia = std::move(dia);
  return LatticeAlgebra(std::move(d));
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  // Element order 0, a, b, 1.
  const std::vector<int> allind_neg{3, 0, 1, 0};
  out.push_back({"allind_a",
                 "four-element lattice, antitone ¬ with ¬1 = 0, identity □; ◇¬ fails",
                 with_tables(diamond(), allind_neg, {0, 1, 2, 3}, {0, 3, 2, 3}),
                 {false, true, true, true},
                 {{Axiom::DiamondNeg, "◇¬b = ◇a = 1 ≰ a = ¬b = ¬□b"}},
                 {Property::Antitone, Property::NegTopIsBot, Property::Multiplicative, Property::Additive}});
  out.push_back({"allind_b",
                 "four-element lattice, same ¬ as allind_a; □¬ fails",
                 with_tables(diamond(), allind_neg, {0, 3, 0, 3}, {0, 3, 3, 3}),
                 {true, false, true, true},
                 {{Axiom::BoxNeg, "□¬b = □a = 1 ≰ 0 = ¬1 = ¬◇b"}},
                 {Property::Antitone, Property::NegTopIsBot, Property::Multiplicative, Property::Additive}});
  out.push_back({"negdiamond_bool4",
                 "four-element Boolean algebra; ¬◇ fails",
                 with_tables(diamond(), pseudocomplement(diamond()), {0, 0, 0, 3}, {0, 3, 0, 3}),
                 {true, true, false, false},
                 {{Axiom::NegDiamond, "¬◇b = ¬0 = 1 ≰ 0 = □a = □¬b"}},
                 {Property::Pseudocomplementation, Property::Involutive, Property::Multiplicative, Property::Additive,
                  Property::BoxBelowDia}});
  // Element order 0, a, b, c, 1.
  out.push_back({"negdiamond_heyting5",
                 "five-element Heyting algebra; ¬◇ fails, ¬□ holds",
                 with_tables(diamond_with_top(), pseudocomplement(diamond_with_top()), {0, 3, 0, 4, 4},
                             {0, 4, 0, 4, 4}),
                 {true, true, false, true},
                 {{Axiom::NegDiamond, "¬◇b = ¬0 = 1 ≰ c = □a = □¬b"}},
                 {Property::Pseudocomplementation, Property::Multiplicative, Property::Additive,
                  Property::BoxBelowDia}});
  // Element order 0, a, 1.
  out.push_back({"negbox_chain3",
                 "three-element Heyting algebra; ¬□ fails",
                 with_tables(chain3(), pseudocomplement(chain3()), {0, 0, 2}, {0, 2, 2}),
                 {true, true, true, false},
                 {{Axiom::NegBox, "¬□a = ¬0 = 1 ≰ 0 = ◇0 = ◇¬a"}},
                 {Property::Pseudocomplementation, Property::Multiplicative, Property::Additive,
                  Property::BoxBelowDia}});
  return out;
}

const Axiom kFourAxioms[] = {Axiom::DiamondNeg, Axiom::BoxNeg, Axiom::NegDiamond, Axiom::NegBox};

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

std::vector<FixtureCheck> verify_fixtures() {
  std::vector<FixtureCheck> out;
  for (const auto& f : fixtures()) {
    for (int i = 0; i < 4; ++i) {
      const Axiom ax = kFourAxioms[i];
      const PropertyReport r = check_axiom(f.algebra, ax);
      FixtureCheck c{f.name, std::string(axiom_name(ax)) + (f.axioms[i] ? " holds" : " fails")};
      c.ok = r.holds == f.axioms[i];
      if (!c.ok) c.detail = r.holds ? "holds" : r.chain;
      out.push_back(std::move(c));
    }
    for (const auto& [ax, chain] : f.chains) {
      const PropertyReport r = check_axiom(f.algebra, ax);
      FixtureCheck c{f.name, std::string(axiom_name(ax)) + " witness " + chain};
      c.ok = !r.holds && same_chain(r.chain, chain);
      if (!c.ok) c.detail = r.holds ? "holds" : r.chain;
      out.push_back(std::move(c));
    }
    for (Property p : f.properties) {
      const PropertyReport r = check_property(f.algebra, p);
      FixtureCheck c{f.name, std::string(property_name(p))};
      c.ok = r.holds;
      if (!c.ok) {
        for (int w : r.witness) c.detail += (c.detail.empty() ? "" : ", ") + f.algebra.name(w);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace fml
