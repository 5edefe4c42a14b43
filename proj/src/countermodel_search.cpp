#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fml/frames.hpp"

namespace fml {

std::string_view frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::Any: return "any";
    case FrameClass::Fundamental: return "fundamental";
    case FrameClass::Ortho: return "ortho";
    case FrameClass::Classical: return "classical";
    case FrameClass::FundamentalModal: return "fundamental-modal";
  }
  return "?";
}

bool in_class(const ModalFrame& frame, FrameClass c) {
  switch (c) {
    case FrameClass::Any: return true;
    case FrameClass::Fundamental:
      return satisfies(frame, FrameCondition::PseudoReflexive) && satisfies(frame, FrameCondition::PseudoSymmetric);
    case FrameClass::Ortho:
      return satisfies(frame, FrameCondition::Reflexive) && satisfies(frame, FrameCondition::Symmetric);
    case FrameClass::Classical:
      for (int x = 0; x < frame.size(); ++x) {
        if (frame.open_succ(x) != StateSet::single(x)) return false;
      }
      return true;
    case FrameClass::FundamentalModal:
      return frame.is_modal() && satisfies(frame, FrameCondition::Unified) &&
             satisfies(frame, FrameCondition::ModalFrame) && satisfies(frame, FrameCondition::Additive) &&
             satisfies(frame, FrameCondition::PseudoReflexive) && satisfies(frame, FrameCondition::PseudoSymmetric);
  }
  return false;
}

namespace {

constexpr int kMaxRelationBits = 20;

int relation_bits(FrameClass c, int n) {
  switch (c) {
    case FrameClass::Any:
    case FrameClass::Fundamental: return n * n;
    case FrameClass::Ortho: return n * (n - 1) / 2;
    case FrameClass::Classical: return 0;
    case FrameClass::FundamentalModal: return 2 * n * n;
  }
  return 0;
}

}  // namespace

int max_enumerable_states(FrameClass c) {
  if (c == FrameClass::Classical) return kMaxStates;
  int n = 1;
  while (relation_bits(c, n + 1) <= kMaxRelationBits) ++n;
  return n;
}

namespace {

// ---------------------------------------------------------------------------
// Enumeration of class members up to isomorphism.

using Rows = std::vector<std::uint64_t>;

Rows rows_from_code(std::uint64_t code, int n) {
  Rows rows(n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int x = 0; x < n; ++x) rows[x] = (code >> (x * n)) & mask;
  return rows;
}

std::uint64_t code_from_rows(const Rows& rows, int n) {
  std::uint64_t code = 0;
  for (int x = 0; x < n; ++x) code |= rows[x] << (x * n);
  return code;
}

std::uint64_t permute_set(std::uint64_t s, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (; s; s &= s - 1) out |= std::uint64_t{1} << perm[std::countr_zero(s)];
  return out;
}

std::uint64_t permuted_code(const Rows& rows, const std::vector<int>& perm) {
  const int n = static_cast<int>(rows.size());
  Rows out(n);
  for (int x = 0; x < n; ++x) out[perm[x]] = permute_set(rows[x], perm);
  return code_from_rows(out, n);
}

const std::vector<std::vector<int>>& permutations(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard lock(mu);
  auto& perms = cache[n];
  if (perms.empty()) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return perms;
}

constexpr int kCanonicalLimit = 6;

/// True when no relabelling yields a lexicographically smaller (open, r) code.
bool is_canonical(const Rows& open, const Rows* r, int n) {
  if (n > kCanonicalLimit) return true;
  const std::uint64_t open_code = code_from_rows(open, n);
  const std::uint64_t r_code = r ? code_from_rows(*r, n) : 0;
  for (const auto& perm : permutations(n)) {
    const std::uint64_t po = permuted_code(open, perm);
    if (po < open_code) return false;
    if (po == open_code && r && permuted_code(*r, perm) < r_code) return false;
  }
  return true;
}

std::vector<StateSet> to_sets(const Rows& rows) {
  std::vector<StateSet> out;
  out.reserve(rows.size());
  for (auto r : rows) out.emplace_back(r);
  return out;
}

std::vector<ModalFrame> enumerate_class(FrameClass c, int n) {
  std::vector<ModalFrame> out;
  if (n < 1) return out;
  if (c == FrameClass::Classical) {
    Rows id(n);
    for (int x = 0; x < n; ++x) id[x] = std::uint64_t{1} << x;
    out.push_back(ModalFrame::from_rows(n, to_sets(id), {}, {}, false));
    return out;
  }
  if (relation_bits(c, n) > kMaxRelationBits) return out;

  auto relational = [&](const Rows& rows) { return ModalFrame::from_rows(n, to_sets(rows), {}, {}, false); };

  if (c == FrameClass::Ortho) {
    std::vector<Edge> slots;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) slots.emplace_back(x, y);
    }
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
      Rows rows(n);
      for (int x = 0; x < n; ++x) rows[x] = std::uint64_t{1} << x;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((code >> i) & 1U) {
          rows[slots[i].first] |= std::uint64_t{1} << slots[i].second;
          rows[slots[i].second] |= std::uint64_t{1} << slots[i].first;
        }
      }
      if (is_canonical(rows, nullptr, n)) out.push_back(relational(rows));
    }
  } else {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    std::vector<Rows> opens;
    for (std::uint64_t code = 0; code < total; ++code) {
      Rows rows = rows_from_code(code, n);
      ModalFrame f = relational(rows);
      if (c != FrameClass::Any && !in_class(f, FrameClass::Fundamental)) continue;
      if (c == FrameClass::FundamentalModal) {
        opens.push_back(std::move(rows));
      } else if (is_canonical(rows, nullptr, n)) {
        out.push_back(std::move(f));
      }
    }
    if (c == FrameClass::FundamentalModal) {
      for (const Rows& open : opens) {
        for (std::uint64_t rcode = 0; rcode < total; ++rcode) {
          Rows r = rows_from_code(rcode, n);
          ModalFrame f = ModalFrame::from_rows(n, to_sets(open), to_sets(r), to_sets(r), true);
          if (!satisfies(f, FrameCondition::ModalFrame) || !satisfies(f, FrameCondition::Additive)) continue;
          if (is_canonical(open, &r, n)) out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<ModalFrame>& class_frames(FrameClass c, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<ModalFrame>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{static_cast<int>(c), n}];
  if (!slot) slot = std::make_unique<std::vector<ModalFrame>>(enumerate_class(c, n));
  return *slot;
}

namespace {

// ---------------------------------------------------------------------------
// Search kernels. A candidate frame is compiled into the finite algebra of its
// fixpoints (operation tables over fixpoint indices); formulas are evaluated
// over those tables for every valuation of the goal's atoms.

struct AlgebraTables {
  const ModalFrame* frame = nullptr;
  int size = 0;
  std::vector<StateSet> elements;
  std::vector<int> meet, join;  // size * size
  std::vector<int> neg, box, dia;
  std::vector<std::uint8_t> leq;  // size * size
  int bottom = 0, top = 0;
};

AlgebraTables compile_algebra(const ModalFrame& frame) {
  const FixpointAlgebra alg = fixpoints(frame);
  AlgebraTables t;
  t.frame = &frame;
  t.size = alg.size();
  t.elements = alg.elements();
  auto idx = [&](StateSet s) {
    const int i = alg.index_of(s);
    if (i < 0) throw std::logic_error("operation left the fixpoint lattice; frame outside the search class");
    return i;
  };
  const int m = t.size;
  t.meet.resize(m * m);
  t.join.resize(m * m);
  t.leq.resize(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.meet[i * m + j] = idx(alg.meet(t.elements[i], t.elements[j]));
      t.join[i * m + j] = idx(alg.join(t.elements[i], t.elements[j]));
      t.leq[i * m + j] = t.elements[i].subset_of(t.elements[j]);
    }
    t.neg.push_back(idx(alg.neg(t.elements[i])));
    if (frame.is_modal()) {
      t.box.push_back(idx(alg.box(t.elements[i])));
      t.dia.push_back(idx(alg.dia(t.elements[i])));
    }
  }
  t.bottom = idx(alg.bottom());
  t.top = idx(alg.top());
  return t;
}

/// lhs and rhs flattened into shared post-order instructions.
struct Program {
  struct Op {
    Connective kind;
    int a = -1, b = -1;
    int atom = -1;
  };
  std::vector<Op> ops;
  std::vector<std::string> atom_names;
  int lhs = -1, rhs = -1;
  bool modal = false;

  Program(const Formula& l, const Formula& r) {
    auto names = atoms(l);
    names.merge(atoms(r));
    atom_names.assign(names.begin(), names.end());
    lhs = emit(l);
    rhs = emit(r);
  }

 private:
  std::map<std::string, int> memo_;

  int emit(const Formula& f) {
    if (auto it = memo_.find(f.text()); it != memo_.end()) return it->second;
    Op op{f.kind()};
    switch (f.kind()) {
      case Connective::Atom:
        op.atom = static_cast<int>(std::lower_bound(atom_names.begin(), atom_names.end(), f.name()) -
                                   atom_names.begin());
        break;
      case Connective::Neg: op.a = emit(f.operand()); break;
      case Connective::Box:
      case Connective::Dia:
        modal = true;
        op.a = emit(f.operand());
        break;
      case Connective::And:
      case Connective::Or:
        op.a = emit(f.left());
        op.b = emit(f.right());
        break;
      default: break;
    }
    ops.push_back(op);
    return memo_[f.text()] = static_cast<int>(ops.size()) - 1;
  }
};

struct FrameHit {
  Valuation valuation;
  int witness = 0;
  std::size_t valuations = 0;
};

/// First valuation (odometer order, first atom slowest) refuting the goal on this frame.
std::optional<FrameHit> search_frame(const ModalFrame& frame, const Program& prog, std::size_t& examined) {
  if (prog.modal && !frame.is_modal()) return std::nullopt;
  const AlgebraTables t = compile_algebra(frame);
  const int k = static_cast<int>(prog.atom_names.size());
  const int m = t.size;
  std::vector<int> choice(k, 0), value(prog.ops.size());
  while (true) {
    ++examined;
    for (std::size_t i = 0; i < prog.ops.size(); ++i) {
      const auto& op = prog.ops[i];
      switch (op.kind) {
        case Connective::Atom: value[i] = choice[op.atom]; break;
        case Connective::Bot: value[i] = t.bottom; break;
        case Connective::Top: value[i] = t.top; break;
        case Connective::Neg: value[i] = t.neg[value[op.a]]; break;
        case Connective::Box: value[i] = t.box[value[op.a]]; break;
        case Connective::Dia: value[i] = t.dia[value[op.a]]; break;
        case Connective::And: value[i] = t.meet[value[op.a] * m + value[op.b]]; break;
        case Connective::Or: value[i] = t.join[value[op.a] * m + value[op.b]]; break;
      }
    }
    const int l = value[prog.lhs], r = value[prog.rhs];
    if (!t.leq[l * m + r]) {
      FrameHit hit;
      for (int a = 0; a < k; ++a) hit.valuation[prog.atom_names[a]] = t.elements[choice[a]];
      hit.witness = (t.elements[l] - t.elements[r]).first();
      return hit;
    }
    int pos = k - 1;
    while (pos >= 0 && ++choice[pos] == m) choice[pos--] = 0;
    if (pos < 0) return std::nullopt;
  }
}

std::vector<const ModalFrame*> candidates(FrameClass c, const SearchOptions& options, SearchStats& stats) {
  std::vector<const ModalFrame*> out;
  const int limit = max_enumerable_states(c);
  for (int n = 1; n <= options.max_states; ++n) {
    if (n > limit) {
      stats.sizes_skipped.push_back(n);
      continue;
    }
    // The classical class needs only the one-point frame: every two-valued
    // countermodel lives on a single state.
    if (c == FrameClass::Classical && n > 1) break;
    for (const auto& f : class_frames(c, n)) out.push_back(&f);
  }
  for (const auto& s : options.seeds) {
    if (in_class(s, c)) out.push_back(&s);
  }
  return out;
}

}  // namespace

SearchResult countermodel_search_serial(const Formula& lhs, const Formula& rhs, FrameClass c,
                                        const SearchOptions& options) {
  if (options.max_states < 1) throw std::invalid_argument("max_states must be at least 1");
  SearchResult result;
  const Program prog(lhs, rhs);
  for (const ModalFrame* f : candidates(c, options, result.stats)) {
    ++result.stats.frames_examined;
    if (auto hit = search_frame(*f, prog, result.stats.valuations_examined)) {
      result.model = CounterModel{*f, std::move(hit->valuation), hit->witness};
      return result;
    }
  }
  return result;
}

SearchResult countermodel_search(const Formula& lhs, const Formula& rhs, FrameClass c,
                                 const SearchOptions& options) {
  if (!options.parallel) return countermodel_search_serial(lhs, rhs, c, options);
  if (options.max_states < 1) throw std::invalid_argument("max_states must be at least 1");
  SearchResult result;
  const Program prog(lhs, rhs);
  const auto cands = candidates(c, options, result.stats);
  const auto count = static_cast<std::int64_t>(cands.size());

  std::atomic<std::int64_t> best{count};
  std::vector<std::optional<FrameHit>> hits(cands.size());
  std::size_t frames = 0, valuations = 0;

#pragma omp parallel for schedule(dynamic, 4) reduction(+ : frames, valuations)
  for (std::int64_t i = 0; i < count; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    ++frames;
    std::size_t examined = 0;
    hits[i] = search_frame(*cands[i], prog, examined);
    valuations += examined;
    if (hits[i]) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  result.stats.frames_examined = frames;
  result.stats.valuations_examined = valuations;
  const std::int64_t winner = best.load();
  if (winner < count) {
    auto& hit = *hits[winner];
    result.model = CounterModel{*cands[winner], std::move(hit.valuation), hit.witness};
  }
  return result;
}

}  // namespace fml
