#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fml/frames.hpp"
#include "fml/lattice.hpp"

namespace fml {

/// A state (x0, x1) of the pair construction; members satisfy ¬x0 ≤ x1.
struct PairState {
  int fst = 0;
  int snd = 0;
  friend bool operator==(const PairState&, const PairState&) = default;
  friend auto operator<=>(const PairState&, const PairState&) = default;
};

/// A filter F and an ideal I of the lattice, as element bitmasks, with
/// {¬a | a ∈ F} ⊆ I.
struct FilterIdealPair {
  std::uint64_t filter = 0;
  std::uint64_t ideal = 0;
  friend bool operator==(const FilterIdealPair&, const FilterIdealPair&) = default;
};

enum class Flavor { Pairs, Unified, FilterIdeal, UnifiedFilterIdeal };

std::string_view flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);

/// A builder's input failed one of its requirements.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(PropertyReport report, const std::string& what)
      : std::invalid_argument(what), report_(std::move(report)) {}
  const PropertyReport& report() const { return report_; }

 private:
  PropertyReport report_;
};

struct PairsFrame {
  ModalFrame frame;
  std::vector<PairState> states;
  bool unified = false;
};

struct FilterIdealFrame {
  ModalFrame frame;
  std::vector<FilterIdealPair> states;
  bool unified = false;
};

/// X = {(a, b) | ¬a ≤ b}; x ◁ y iff not y0 ≤ x1; xRy iff x0 ≤ □a implies
/// y0 ≤ a; xQy iff ◇a ≤ x1 implies a ≤ y1. Requires ¬ antitone with ¬1 = 0,
/// □ completely multiplicative, ◇ completely additive.
PairsFrame build_pairs_frame(const LatticeAlgebra& l);

/// Same carrier and ◁, with R the conjunction of both clauses above and Q = R.
/// Additionally requires ¬ dual self-adjoint and ◇¬a ≤ ¬□a.
PairsFrame build_unified_frame(const LatticeAlgebra& l);

/// Carrier of filter-ideal pairs; (F, I) ◁ (F', I') iff I ∩ F' = ∅;
/// R: □a ∈ F implies a ∈ F'; Q: ◇a ∈ I implies a ∈ I' (conjoined into R = Q
/// when unified). Lattices up to 16 elements.
FilterIdealFrame build_filter_ideal_frame(const LatticeAlgebra& l, bool unified);

/// Every filter and every ideal of a finite lattice is principal: for each
/// state, the generators (min F, max I), or nullopt when one is not principal.
std::optional<PairState> principal_generators(const LatticeAlgebra& l, const FilterIdealPair& p);

std::string describe(const LatticeAlgebra& l, const PairState& x);
std::string describe(const LatticeAlgebra& l, const FilterIdealPair& x);

struct SeparationReport {
  bool holds = true;
  /// 1 or 2: the clause that fails.
  int clause = 0;
  /// Clause 1: elements (a, b). Clause 2: elements (b) and the index in P of (c, d).
  std::vector<int> witness;
};

/// The separation condition on a set of pairs: (1) a ≰ b gives (c, d) in P
/// with c ≤ a, c ≰ b; (2) for (c, d) in P with c ≰ b there is (c', d') ◁ (c, d)
/// in P whose every ◁-successor (c'', d'') in P has c'' ≰ b.
SeparationReport check_separating(const LatticeAlgebra& l, const std::vector<PairState>& pairs);

struct OperationCheck {
  std::string op;
  bool preserved = true;
  /// Lattice elements at which the image of the operation differs.
  std::vector<int> witness;
};

struct MorphismReport {
  /// Image of each lattice element: f(a) = {x | x0 ≤ a}, or {(F, I) | a ∈ F}.
  std::vector<StateSet> image;
  bool into_fixpoints = true;
  bool injective = true;
  bool surjective = true;
  /// Element pair with equal images when not injective.
  std::vector<int> injectivity_witness;
  /// A fixpoint outside the image when not surjective.
  std::optional<StateSet> missing_fixpoint;
  /// meet, join, bottom, top, neg, box, dia (the last three when the tables exist).
  std::vector<OperationCheck> preserves;
  int fixpoint_count = 0;

  bool isomorphism() const;
};

MorphismReport canonical_embedding(const LatticeAlgebra& l, const PairsFrame& rep);
MorphismReport canonical_embedding(const LatticeAlgebra& l, const FilterIdealFrame& rep);

enum class WitnessMap { Rho, Sigma, Tau };

std::string_view witness_map_name(WitnessMap m);

/// ρ(x) = (m, ¬m), σ(x) = (1, ⋁{b | ◇b ≤ x1}), τ(x) = (m, ⋁{b | ◇b ≤ x1} ∨ ¬m)
/// where m = ⋀{b | x0 ≤ □b}.
PairState witness_map(const LatticeAlgebra& l, const PairState& x, WitnessMap which);

struct WitnessMapFailure {
  WitnessMap map;
  /// "member", "related", "box" or "dia".
  std::string property;
  PairState state;
  /// The element a of the failing implication, -1 when not applicable.
  int element = -1;
};

/// Checks, for every state of the representation, that the image is a state,
/// that it is related to x (R for ρ and τ, Q for σ), and that the box/dia
/// implications hold for every element. Returns all failures.
std::vector<WitnessMapFailure> check_witness_maps(const LatticeAlgebra& l, const PairsFrame& rep);

}  // namespace fml
