#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "fml/frames.hpp"

namespace fml {

namespace {

std::vector<StateSet> rows_from_edges(int n, const std::vector<Edge>& edges, const char* what) {
  std::vector<StateSet> rows(n);
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= n || y >= n) {
      throw std::invalid_argument(std::string(what) + " edge (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") out of range");
    }
    rows[x].insert(y);
  }
  return rows;
}

std::vector<Edge> edges_from_rows(const std::vector<StateSet>& rows) {
  std::vector<Edge> out;
  for (int x = 0; x < static_cast<int>(rows.size()); ++x) {
    for (int y : rows[x].members()) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace

ModalFrame ModalFrame::from_rows(int n, std::vector<StateSet> open_rows, std::vector<StateSet> r_rows,
                                 std::vector<StateSet> q_rows, bool modal) {
  if (n < 0 || n > kMaxStates) {
    throw std::invalid_argument("frame size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxStates) + "]");
  }
  const StateSet all = StateSet::all(n);
  auto check = [&](std::vector<StateSet>& rows, const char* what, bool required) {
    if (!required && rows.empty()) {
      rows.assign(n, StateSet{});
      return;
    }
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument(std::string(what) + " rows mismatch");
    for (auto row : rows) {
      if (!row.subset_of(all)) throw std::invalid_argument(std::string(what) + " row out of range");
    }
  };
  check(open_rows, "open", true);
  check(r_rows, "R", false);
  check(q_rows, "Q", false);

  ModalFrame f;
  f.n_ = n;
  f.modal_ = modal;
  f.open_succ_ = std::move(open_rows);
  f.open_pred_.assign(n, StateSet{});
  for (int x = 0; x < n; ++x) {
    for (int y : f.open_succ_[x].members()) f.open_pred_[y].insert(x);
  }
  f.r_succ_ = modal ? std::move(r_rows) : std::vector<StateSet>(n);
  f.q_succ_ = modal ? std::move(q_rows) : std::vector<StateSet>(n);
  f.names_.reserve(n);
  for (int x = 0; x < n; ++x) f.names_.push_back("s" + std::to_string(x));
  return f;
}

ModalFrame ModalFrame::relational(int n, const std::vector<Edge>& open) {
  return from_rows(n, rows_from_edges(n, open, "open"), {}, {}, false);
}

ModalFrame ModalFrame::modal(int n, const std::vector<Edge>& open, const std::vector<Edge>& r,
                             const std::vector<Edge>& q) {
  return from_rows(n, rows_from_edges(n, open, "open"), rows_from_edges(n, r, "R"),
                   rows_from_edges(n, q, "Q"), true);
}

ModalFrame ModalFrame::unified(int n, const std::vector<Edge>& open, const std::vector<Edge>& r) {
  return modal(n, open, r, r);
}

std::vector<Edge> ModalFrame::open_edges() const { return edges_from_rows(open_succ_); }
std::vector<Edge> ModalFrame::r_edges() const { return modal_ ? edges_from_rows(r_succ_) : std::vector<Edge>{}; }
std::vector<Edge> ModalFrame::q_edges() const { return modal_ ? edges_from_rows(q_succ_) : std::vector<Edge>{}; }

void ModalFrame::set_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != n_) throw std::invalid_argument("state name count mismatch");
  names_ = std::move(names);
}

// ---------------------------------------------------------------------------

namespace {

/// {y | y ◁ z for some z in A}: the states with an open successor in A.
StateSet open_to_some(const ModalFrame& frame, StateSet a) {
  StateSet w;
  for (int y = 0; y < frame.size(); ++y) {
    if (frame.open_succ(y).intersects(a)) w.insert(y);
  }
  return w;
}

/// {x | every y ◁ x lies in W}
StateSet preds_within(const ModalFrame& frame, StateSet w) {
  StateSet out;
  for (int x = 0; x < frame.size(); ++x) {
    if (frame.open_pred(x).subset_of(w)) out.insert(x);
  }
  return out;
}

}  // namespace

StateSet closure(const ModalFrame& frame, StateSet a) { return preds_within(frame, open_to_some(frame, a)); }

StateSet neg_op(const ModalFrame& frame, StateSet a) {
  StateSet out;
  for (int x = 0; x < frame.size(); ++x) {
    if (!frame.open_pred(x).intersects(a)) out.insert(x);
  }
  return out;
}

StateSet box_op(const ModalFrame& frame, StateSet a) {
  StateSet out;
  for (int x = 0; x < frame.size(); ++x) {
    if (frame.r_succ(x).subset_of(a)) out.insert(x);
  }
  return out;
}

StateSet dia_op(const ModalFrame& frame, StateSet a) {
  const StateSet w = open_to_some(frame, a);
  StateSet v;  // x' with some y' in Q(x') open to a member of A
  for (int x = 0; x < frame.size(); ++x) {
    if (frame.q_succ(x).intersects(w)) v.insert(x);
  }
  return preds_within(frame, v);
}

StateSet join_op(const ModalFrame& frame, StateSet a, StateSet b) { return closure(frame, a | b); }

bool is_fixpoint(const ModalFrame& frame, StateSet a) { return closure(frame, a) == a; }

bool is_absurd(const ModalFrame& frame, int x) { return frame.open_pred(x).empty(); }

bool pre_refines(const ModalFrame& frame, int z, int x) {
  return frame.open_pred(z).subset_of(frame.open_pred(x));
}

// ---------------------------------------------------------------------------

std::string_view condition_name(FrameCondition c) {
  switch (c) {
    case FrameCondition::PseudoReflexive: return "pseudo_reflexive";
    case FrameCondition::PseudoSymmetric: return "pseudo_symmetric";
    case FrameCondition::ModalFrame: return "modal_frame";
    case FrameCondition::Additive: return "additive";
    case FrameCondition::Negative: return "negative";
    case FrameCondition::Unified: return "unified";
    case FrameCondition::Reflexive: return "reflexive";
    case FrameCondition::Symmetric: return "symmetric";
  }
  return "?";
}

FrameCondition parse_condition(std::string_view name) {
  for (auto c : {FrameCondition::PseudoReflexive, FrameCondition::PseudoSymmetric, FrameCondition::ModalFrame,
                 FrameCondition::Additive, FrameCondition::Negative, FrameCondition::Unified,
                 FrameCondition::Reflexive, FrameCondition::Symmetric}) {
    if (condition_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown frame condition '" + std::string(name) + "'");
}

const std::vector<FrameCondition>& standard_conditions() {
  static const std::vector<FrameCondition> all = {
      FrameCondition::PseudoReflexive, FrameCondition::PseudoSymmetric, FrameCondition::ModalFrame,
      FrameCondition::Additive,        FrameCondition::Negative,        FrameCondition::Unified};
  return all;
}

namespace {

bool exists_in(StateSet s, auto&& pred) {
  for (int v : s.members()) {
    if (pred(v)) return true;
  }
  return false;
}

bool forall_in(StateSet s, auto&& pred) {
  for (int v : s.members()) {
    if (!pred(v)) return false;
  }
  return true;
}

}  // namespace

ConditionReport check_condition(const ModalFrame& f, FrameCondition cond) {
  ConditionReport rep{cond, true, {}};
  const int n = f.size();
  auto fail = [&](std::vector<int> w) {
    rep.holds = false;
    rep.witness = std::move(w);
    return rep;
  };

  switch (cond) {
    case FrameCondition::Reflexive:
      for (int x = 0; x < n; ++x) {
        if (!f.open(x, x)) return fail({x});
      }
      return rep;

    case FrameCondition::Symmetric:
      for (int x = 0; x < n; ++x) {
        for (int y : f.open_succ(x).members()) {
          if (!f.open(y, x)) return fail({x, y});
        }
      }
      return rep;

    case FrameCondition::PseudoReflexive:
      for (int x = 0; x < n; ++x) {
        if (is_absurd(f, x)) continue;
        if (!exists_in(f.open_pred(x), [&](int z) { return pre_refines(f, z, x); })) return fail({x});
      }
      return rep;

    case FrameCondition::PseudoSymmetric:
      for (int x = 0; x < n; ++x) {
        for (int y : f.open_pred(x).members()) {
          if (!exists_in(f.open_pred(y), [&](int z) { return pre_refines(f, z, x); })) return fail({x, y});
        }
      }
      return rep;

    case FrameCondition::ModalFrame:
      // x R y, z ◁ y  =>  ∃x' ◁ x ∀x'' with x' ◁ x'' ∃y'': x'' R y'' and z ◁ y''
      for (int x = 0; x < n; ++x) {
        for (int y : f.r_succ(x).members()) {
          for (int z : f.open_pred(y).members()) {
            const bool ok = exists_in(f.open_pred(x), [&](int xp) {
              return forall_in(f.open_succ(xp),
                               [&](int xpp) { return f.r_succ(xpp).intersects(f.open_succ(z)); });
            });
            if (!ok) return fail({x, y, z});
          }
        }
      }
      return rep;

    case FrameCondition::Additive:
      // x Q y, y ◁ z  =>  ∃x' with x ◁ x' ∀x'' ◁ x' ∃y'': x'' Q y'' and y'' ◁ z
      for (int x = 0; x < n; ++x) {
        for (int y : f.q_succ(x).members()) {
          for (int z : f.open_succ(y).members()) {
            const bool ok = exists_in(f.open_succ(x), [&](int xp) {
              return forall_in(f.open_pred(xp),
                               [&](int xpp) { return f.q_succ(xpp).intersects(f.open_pred(z)); });
            });
            if (!ok) return fail({x, y, z});
          }
        }
      }
      return rep;

    case FrameCondition::Negative:
      // x R y, z ◁ y  =>  ∃x' ◁ x ∀x'' ◁ x' ∃y'': x'' Q y'' and y'' ◁ z
      for (int x = 0; x < n; ++x) {
        for (int y : f.r_succ(x).members()) {
          for (int z : f.open_pred(y).members()) {
            const bool ok = exists_in(f.open_pred(x), [&](int xp) {
              return forall_in(f.open_pred(xp),
                               [&](int xpp) { return f.q_succ(xpp).intersects(f.open_pred(z)); });
            });
            if (!ok) return fail({x, y, z});
          }
        }
      }
      return rep;

    case FrameCondition::Unified:
      for (int x = 0; x < n; ++x) {
        const StateSet diff = (f.r_succ(x) - f.q_succ(x)) | (f.q_succ(x) - f.r_succ(x));
        if (!diff.empty()) return fail({x, diff.first()});
      }
      return rep;
  }
  return rep;
}

bool satisfies(const ModalFrame& frame, FrameCondition cond) { return check_condition(frame, cond).holds; }

// ---------------------------------------------------------------------------

namespace {

bool fixpoint_order(StateSet a, StateSet b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits() < b.bits();
}

}  // namespace

FixpointAlgebra::FixpointAlgebra(ModalFrame frame, std::vector<StateSet> fixpoints)
    : frame_(std::move(frame)), elements_(std::move(fixpoints)) {
  std::sort(elements_.begin(), elements_.end(), fixpoint_order);
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty()) throw std::invalid_argument("fixpoint algebra needs at least X");
  for (int i = 0; i < size(); ++i) index_[elements_[i].bits()] = i;
}

int FixpointAlgebra::index_of(StateSet a) const {
  auto it = index_.find(a.bits());
  return it == index_.end() ? -1 : it->second;
}

FixpointAlgebra fixpoints(const ModalFrame& frame, const FixpointOptions& options) {
  const StateSet all = frame.carrier();
  std::vector<StateSet> found{all};
  std::unordered_set<std::uint64_t> seen{all.bits()};
  for (int y = 0; y < frame.size(); ++y) {
    const StateSet gen = all - frame.open_succ(y);
    const std::size_t existing = found.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const StateSet s = found[i] & gen;
      if (seen.insert(s.bits()).second) {
        found.push_back(s);
        if (found.size() > options.max_fixpoints) {
          throw CapExceeded("frame has more than " + std::to_string(options.max_fixpoints) + " fixpoints");
        }
      }
    }
  }
  return FixpointAlgebra(frame, std::move(found));
}

// ---------------------------------------------------------------------------

namespace {

bool forces_at(const Model& m, int x, const Formula& f) {
  const ModalFrame& fr = m.frame;
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = m.valuation.find(f.name());
      if (it == m.valuation.end()) throw UnboundAtom(f.name());
      return it->second.contains(x);
    }
    case Connective::Top: return true;
    case Connective::Bot: return is_absurd(fr, x);
    case Connective::And: return forces_at(m, x, f.left()) && forces_at(m, x, f.right());
    case Connective::Or:
      // ∀y ◁ x ∃z with y ◁ z: z forces one disjunct
      return forall_in(fr.open_pred(x), [&](int y) {
        return exists_in(fr.open_succ(y), [&](int z) {
          return forces_at(m, z, f.left()) || forces_at(m, z, f.right());
        });
      });
    case Connective::Neg:
      return forall_in(fr.open_pred(x), [&](int y) { return !forces_at(m, y, f.operand()); });
    case Connective::Box:
      return forall_in(fr.r_succ(x), [&](int y) { return forces_at(m, y, f.operand()); });
    case Connective::Dia:
      // ∀x' ◁ x ∃y' in Q(x') ∃y with y' ◁ y: y forces the operand
      return forall_in(fr.open_pred(x), [&](int xp) {
        return exists_in(fr.q_succ(xp), [&](int yp) {
          return exists_in(fr.open_succ(yp), [&](int y) { return forces_at(m, y, f.operand()); });
        });
      });
  }
  return false;
}

}  // namespace

bool forces(const Model& model, int x, const Formula& f) {
  if (x < 0 || x >= model.frame.size()) throw std::out_of_range("state index out of range");
  return forces_at(model, x, f);
}

StateSet denotation(const Model& model, const Formula& f) {
  const ModalFrame& fr = model.frame;
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = model.valuation.find(f.name());
      if (it == model.valuation.end()) throw UnboundAtom(f.name());
      return it->second;
    }
    case Connective::Top: return fr.carrier();
    case Connective::Bot: return closure(fr, StateSet{});
    case Connective::And: return denotation(model, f.left()) & denotation(model, f.right());
    case Connective::Or: return join_op(fr, denotation(model, f.left()), denotation(model, f.right()));
    case Connective::Neg: return neg_op(fr, denotation(model, f.operand()));
    case Connective::Box: return box_op(fr, denotation(model, f.operand()));
    case Connective::Dia: return dia_op(fr, denotation(model, f.operand()));
  }
  return {};
}

std::optional<int> find_failure(const Model& model, const Formula& lhs, const Formula& rhs) {
  const StateSet bad = denotation(model, lhs) - denotation(model, rhs);
  if (bad.empty()) return std::nullopt;
  return bad.first();
}

}  // namespace fml
