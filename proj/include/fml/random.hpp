#pragma once

#include <random>
#include <string>
#include <vector>

#include "fml/formula.hpp"
#include "fml/frames.hpp"
#include "fml/lattice.hpp"

namespace fml {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::vector<std::string> atoms{"p", "q", "r"};
  int max_depth = 3;
  /// Allows [], <>, _|_ and T.
  bool modal = false;
};

/// Leaves are atoms (and constants when modal); inner nodes pick a
/// connective uniformly.
Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Relational frame on n states, each pair in ◁ with probability `density`.
ModalFrame random_frame(Rng& rng, int n, double density);

/// Modal frame with independent ◁, R and Q; Q := R when unified.
ModalFrame random_modal_frame(Rng& rng, int n, double density, double modal_density, bool unified);

/// A member of the class with at most max_states states.
ModalFrame random_class_frame(Rng& rng, FrameClass c, int max_states);

/// Each atom receives a uniformly chosen fixpoint of the algebra.
Valuation random_valuation(Rng& rng, const FixpointAlgebra& algebra, const std::vector<std::string>& atoms);

/// Random model of the class: frame from random_class_frame, valuation from random_valuation.
Model random_class_model(Rng& rng, FrameClass c, int max_states, const std::vector<std::string>& atoms);

/// Intersection-closed family of random subsets of a ground set of `ground`
/// points, ordered by inclusion. Elements are named 0, 1 and e1, e2, ...
LatticeData random_lattice(Rng& rng, int ground, int max_elements);

/// Uniform random table of a unary map on n elements.
std::vector<int> random_map(Rng& rng, int n);

/// Monotone map chosen element by element along a linear extension of the
/// order, each value uniform among those above the values already forced.
std::vector<int> random_monotone_map(Rng& rng, const LatticeAlgebra& l);
/// Same construction into the dual order.
std::vector<int> random_antitone_map(Rng& rng, const LatticeAlgebra& l);
/// A uniformly chosen antitone involution, or an empty table when the lattice
/// has none. Lattices up to 8 elements.
std::vector<int> random_antitone_involution(Rng& rng, const LatticeAlgebra& l);

}  // namespace fml
