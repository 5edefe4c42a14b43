#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fml/formula.hpp"
#include "fml/state_set.hpp"

namespace fml {

using Edge = std::pair<int, int>;

/// Finite frame (X, open, R, Q). `open` is the relation written x ◁ y ("x is
/// open to y"); R interprets [] and Q interprets <>. A relational frame is a
/// ModalFrame with is_modal() false and empty R, Q.
class ModalFrame {
 public:
  ModalFrame() = default;

  static ModalFrame relational(int n, const std::vector<Edge>& open);
  static ModalFrame modal(int n, const std::vector<Edge>& open, const std::vector<Edge>& r,
                          const std::vector<Edge>& q);
  /// Q := R.
  static ModalFrame unified(int n, const std::vector<Edge>& open, const std::vector<Edge>& r);
  /// From successor rows; rows must have exactly n entries (r/q rows may be empty when !modal).
  static ModalFrame from_rows(int n, std::vector<StateSet> open_rows, std::vector<StateSet> r_rows,
                              std::vector<StateSet> q_rows, bool modal);

  int size() const { return n_; }
  bool is_modal() const { return modal_; }
  StateSet carrier() const { return StateSet::all(n_); }

  bool open(int x, int y) const { return open_succ_[x].contains(y); }
  bool r(int x, int y) const { return modal_ && r_succ_[x].contains(y); }
  bool q(int x, int y) const { return modal_ && q_succ_[x].contains(y); }

  /// {y | x ◁ y}
  StateSet open_succ(int x) const { return open_succ_[x]; }
  /// {y | y ◁ x}
  StateSet open_pred(int x) const { return open_pred_[x]; }
  StateSet r_succ(int x) const { return modal_ ? r_succ_[x] : StateSet{}; }
  StateSet q_succ(int x) const { return modal_ ? q_succ_[x] : StateSet{}; }

  std::vector<Edge> open_edges() const;
  std::vector<Edge> r_edges() const;
  std::vector<Edge> q_edges() const;

  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  const std::string& name(int x) const { return names_[x]; }

  friend bool operator==(const ModalFrame& a, const ModalFrame& b) {
    return a.n_ == b.n_ && a.modal_ == b.modal_ && a.open_succ_ == b.open_succ_ &&
           a.r_succ_ == b.r_succ_ && a.q_succ_ == b.q_succ_;
  }

 private:
  int n_ = 0;
  bool modal_ = false;
  std::vector<StateSet> open_succ_, open_pred_, r_succ_, q_succ_;
  std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Operations on subsets of the carrier.

/// c(A) = {x | for all y ◁ x there is z with y ◁ z and z in A}.
StateSet closure(const ModalFrame& frame, StateSet a);
/// ¬(A) = {x | no y ◁ x lies in A}.
StateSet neg_op(const ModalFrame& frame, StateSet a);
/// [](A) = {x | R(x) ⊆ A}.
StateSet box_op(const ModalFrame& frame, StateSet a);
/// <>(A) = {x | for all x' ◁ x there are y' in Q(x') and y with y' ◁ y, y in A}.
StateSet dia_op(const ModalFrame& frame, StateSet a);
/// Join in the fixpoint lattice: closure of the union.
StateSet join_op(const ModalFrame& frame, StateSet a, StateSet b);

bool is_fixpoint(const ModalFrame& frame, StateSet a);
/// A state with no ◁-predecessor.
bool is_absurd(const ModalFrame& frame, int x);
/// z pre-refines x: every w ◁ z also has w ◁ x.
bool pre_refines(const ModalFrame& frame, int z, int x);

// ---------------------------------------------------------------------------
// First-order frame conditions.

enum class FrameCondition {
  PseudoReflexive,
  PseudoSymmetric,
  ModalFrame,
  Additive,
  Negative,
  Unified,
  Reflexive,
  Symmetric,
};

std::string_view condition_name(FrameCondition c);
FrameCondition parse_condition(std::string_view name);
/// The six conditions with first-order definitions (excludes plain reflexive/symmetric).
const std::vector<FrameCondition>& standard_conditions();

struct ConditionReport {
  FrameCondition condition;
  bool holds = true;
  /// The violating tuple: (x) for pseudo-reflexivity and reflexivity, (x, y)
  /// for pseudo-symmetry, symmetry and unification, (x, y, z) for the modal,
  /// additive and negative conditions.
  std::vector<int> witness;
};

ConditionReport check_condition(const ModalFrame& frame, FrameCondition cond);
bool satisfies(const ModalFrame& frame, FrameCondition cond);

// ---------------------------------------------------------------------------
// Fixpoint lattice.

/// The complete lattice of c-fixpoints of a frame, with ¬, [] and <>.
class FixpointAlgebra {
 public:
  FixpointAlgebra(ModalFrame frame, std::vector<StateSet> fixpoints);

  const ModalFrame& frame() const { return frame_; }
  /// Fixpoints ordered by (cardinality, bit pattern); front() is c(∅), back() is X.
  const std::vector<StateSet>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  /// Position in elements(), or -1 for a set that is not a fixpoint.
  int index_of(StateSet a) const;
  bool contains(StateSet a) const { return index_of(a) >= 0; }

  StateSet bottom() const { return elements_.front(); }
  StateSet top() const { return elements_.back(); }
  StateSet meet(StateSet a, StateSet b) const { return a & b; }
  StateSet join(StateSet a, StateSet b) const { return join_op(frame_, a, b); }
  StateSet neg(StateSet a) const { return neg_op(frame_, a); }
  StateSet box(StateSet a) const { return box_op(frame_, a); }
  StateSet dia(StateSet a) const { return dia_op(frame_, a); }

 private:
  ModalFrame frame_;
  std::vector<StateSet> elements_;
  std::map<std::uint64_t, int> index_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FixpointOptions {
  /// Carrier bound for the subset-filtering route.
  int max_states = 14;
  /// Bound on the number of fixpoints produced by the generator route.
  std::size_t max_fixpoints = std::size_t{1} << 16;
};

/// All fixpoints, generated as intersections of the sets X \ succ(y); exact
/// for any carrier up to kMaxStates. Throws CapExceeded past max_fixpoints.
FixpointAlgebra fixpoints(const ModalFrame& frame, const FixpointOptions& options = {});

/// Reference route: filter all 2^|X| subsets by c(A) == A. Throws
/// CapExceeded when |X| > max_states.
std::vector<StateSet> fixpoints_by_subsets_serial(const ModalFrame& frame, int max_states = 14);
/// Same result as the serial route, with the subset loop split across OpenMP threads.
std::vector<StateSet> fixpoints_by_subsets(const ModalFrame& frame, int max_states = 14);

// ---------------------------------------------------------------------------
// Models and forcing.

using Valuation = std::map<std::string, StateSet>;

struct Model {
  ModalFrame frame;
  Valuation valuation;
};

struct CounterModel {
  ModalFrame frame;
  Valuation valuation;
  int witness = 0;
};

class UnboundAtom : public std::out_of_range {
 public:
  explicit UnboundAtom(const std::string& atom)
      : std::out_of_range("valuation does not bind atom '" + atom + "'") {}
};

/// Pointwise forcing by direct quantification over the frame.
bool forces(const Model& model, int x, const Formula& f);
/// Set of states forcing f, computed with the set operations above.
StateSet denotation(const Model& model, const Formula& f);

/// Every state forcing lhs forces rhs; returns the first state that fails, if any.
std::optional<int> find_failure(const Model& model, const Formula& lhs, const Formula& rhs);

// ---------------------------------------------------------------------------
// Countermodel search.

enum class FrameClass {
  /// Relational frames, no conditions.
  Any,
  /// Pseudo-reflexive and pseudo-symmetric relational frames.
  Fundamental,
  /// Reflexive and symmetric relational frames.
  Ortho,
  /// Frames where ◁ is the identity: the classical two-valued case.
  Classical,
  /// Unified, additive modal frames with ◁ pseudo-reflexive and pseudo-symmetric.
  FundamentalModal,
};

std::string_view frame_class_name(FrameClass c);
bool in_class(const ModalFrame& frame, FrameClass c);

/// Largest size whose raw relation space (2^bits) is enumerated exhaustively.
int max_enumerable_states(FrameClass c);

/// Every frame of exactly n states in the class, one per isomorphism class for
/// n <= 6, ordered by canonical code. Cached; safe to call concurrently.
const std::vector<ModalFrame>& class_frames(FrameClass c, int n);

struct SearchOptions {
  int max_states = 4;
  /// Extra candidate frames tried after the enumerated ones; frames outside the
  /// class are skipped.
  std::vector<ModalFrame> seeds;
  bool parallel = true;
};

struct SearchStats {
  std::size_t frames_examined = 0;
  std::size_t valuations_examined = 0;
  /// Sizes up to max_states that were too large to enumerate.
  std::vector<int> sizes_skipped;
};

struct SearchResult {
  std::optional<CounterModel> model;
  SearchStats stats;
};

/// Looks for a frame in the class, a fixpoint valuation and a state forcing
/// lhs but not rhs. Candidates are tried by increasing size, then canonical
/// order, then seeds; the first hit in that order is returned whether or not
/// the search runs in parallel.
SearchResult countermodel_search(const Formula& lhs, const Formula& rhs, FrameClass c,
                                 const SearchOptions& options);
SearchResult countermodel_search_serial(const Formula& lhs, const Formula& rhs, FrameClass c,
                                        const SearchOptions& options);

}  // namespace fml
