#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fml {

/// Raw description of a finite bounded lattice with optional unary tables.
/// `leq` lists pairs (i, j) meaning element i ≤ element j; its reflexive and
/// transitive closure is taken, so a Hasse diagram is enough. Empty tables
/// mean the operation is absent.
struct LatticeData {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> leq;
  std::vector<int> neg, box, dia;
};

class InvalidLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// First defect of the data, or nullopt when it describes a bounded lattice
/// with total, in-range tables.
std::optional<std::string> validate(const LatticeData& data);

class LatticeAlgebra {
 public:
  /// Throws InvalidLattice with the validate() defect.
  explicit LatticeAlgebra(LatticeData data);

  int size() const { return n_; }
  const LatticeData& data() const { return data_; }
  const std::string& name(int i) const { return data_.elements[i]; }
  /// Index of the named element, or -1.
  int index_of(std::string_view name) const;

  bool leq(int a, int b) const { return order_[a * n_ + b]; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  /// Meet and join of arbitrary families; the empty family gives top / bottom.
  int meet_all(const std::vector<int>& xs) const;
  int join_all(const std::vector<int>& xs) const;

  bool has_neg() const { return !data_.neg.empty(); }
  bool has_box() const { return !data_.box.empty(); }
  bool has_dia() const { return !data_.dia.empty(); }
  int neg(int a) const { return data_.neg[a]; }
  int box(int a) const { return data_.box[a]; }
  int dia(int a) const { return data_.dia[a]; }

 private:
  LatticeData data_;
  int n_ = 0;
  std::vector<char> order_;
  std::vector<int> meet_, join_;
  int bottom_ = 0, top_ = 0;
};

enum class Property {
  Antitone,
  NegTopIsBot,
  DoubleInflationary,
  DualSelfAdjoint,
  Semicomplementation,
  WeakPseudocomplementation,
  Pseudocomplementation,
  Involutive,
  MonotoneBox,
  MonotoneDia,
  Multiplicative,
  Additive,
  CompletelyMultiplicative,
  CompletelyAdditive,
  /// □a ≤ ◇a for every a.
  BoxBelowDia,
};

enum class Axiom { DiamondNeg, BoxNeg, NegDiamond, NegBox, DiaDef, BoxDef };

std::string_view property_name(Property p);
Property parse_property(std::string_view name);
const std::vector<Property>& all_properties();

std::string_view axiom_name(Axiom a);
/// The inequality or equation, e.g. "◇¬a ≤ ¬□a".
std::string_view axiom_formula(Axiom a);
Axiom parse_axiom(std::string_view name);
const std::vector<Axiom>& all_axioms();

struct PropertyReport {
  std::string name;
  bool holds = true;
  /// Element indices of the failing instance; empty when holds.
  std::vector<int> witness;
  /// For axioms: the failing computation, e.g. "◇¬b = ◇a = 1 ≰ a = ¬b = ¬□b".
  std::string chain;
};

class MissingOperation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exhaustive check. Throws MissingOperation when a needed table is absent.
PropertyReport check_property(const LatticeAlgebra& l, Property p);
PropertyReport check_axiom(const LatticeAlgebra& l, Axiom a);

/// Re-evaluates the property at a report's witness; true when it still fails there.
bool witness_fails(const LatticeAlgebra& l, Property p, const std::vector<int>& witness);
bool witness_fails(const LatticeAlgebra& l, Axiom a, const std::vector<int>& witness);

// ---------------------------------------------------------------------------
// Named algebras: the independence examples for the four negation/modality
// axioms.

struct Fixture {
  std::string name;
  std::string description;
  LatticeAlgebra algebra;
  /// Expected truth of DiamondNeg, BoxNeg, NegDiamond, NegBox.
  std::vector<bool> axioms;
  /// Expected witness chain for each failing axiom, keyed by axiom.
  std::vector<std::pair<Axiom, std::string>> chains;
  /// Properties asserted of the algebra.
  std::vector<Property> properties;
};

const std::vector<Fixture>& fixtures();
/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(std::string_view name);

struct FixtureCheck {
  std::string fixture;
  std::string claim;
  bool ok = true;
  std::string detail;
};

/// Replays every stored expectation of every fixture.
std::vector<FixtureCheck> verify_fixtures();

/// Whitespace-insensitive comparison used for witness chains.
bool same_chain(std::string_view a, std::string_view b);

}  // namespace fml
