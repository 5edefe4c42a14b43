#include "fml/representation.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace fml {

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Pairs: return "pairs";
    case Flavor::Unified: return "unified";
    case Flavor::FilterIdeal: return "filter-ideal";
    case Flavor::UnifiedFilterIdeal: return "unified-filter-ideal";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  for (Flavor f : {Flavor::Pairs, Flavor::Unified, Flavor::FilterIdeal, Flavor::UnifiedFilterIdeal}) {
    if (flavor_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown flavor '" + std::string(name) + "'");
}

namespace {

void require(const LatticeAlgebra& l, Property p, std::string_view builder) {
  PropertyReport r = check_property(l, p);
  if (r.holds) return;
  std::string what = std::string(builder) + ": " + r.name + " fails";
  if (!r.witness.empty()) {
    what += " at";
    for (int w : r.witness) what += " " + l.name(w);
  }
  throw PreconditionError(std::move(r), what);
}

void require(const LatticeAlgebra& l, Axiom a, std::string_view builder) {
  PropertyReport r = check_axiom(l, a);
  if (r.holds) return;
  throw PreconditionError(r, std::string(builder) + ": " + r.name + " fails: " + r.chain);
}

void require_tables(const LatticeAlgebra& l, std::string_view builder) {
  if (!l.has_neg() || !l.has_box() || !l.has_dia()) {
    throw MissingOperation(std::string(builder) + " needs neg, box and dia tables");
  }
}

bool r_pairs(const LatticeAlgebra& l, const PairState& x, const PairState& y) {
  for (int a = 0; a < l.size(); ++a) {
    if (l.leq(x.fst, l.box(a)) && !l.leq(y.fst, a)) return false;
  }
  return true;
}

bool q_pairs(const LatticeAlgebra& l, const PairState& x, const PairState& y) {
  for (int a = 0; a < l.size(); ++a) {
    if (l.leq(l.dia(a), x.snd) && !l.leq(a, y.snd)) return false;
  }
  return true;
}

std::vector<PairState> pair_carrier(const LatticeAlgebra& l) {
  std::vector<PairState> xs;
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(l.neg(a), b)) xs.push_back({a, b});
    }
  }
  if (static_cast<int>(xs.size()) > kMaxStates) {
    throw std::invalid_argument("representation would have " + std::to_string(xs.size()) + " states, limit is " +
                                std::to_string(kMaxStates));
  }
  return xs;
}

PairsFrame pairs_frame(const LatticeAlgebra& l, bool unified) {
  PairsFrame rep;
  rep.unified = unified;
  rep.states = pair_carrier(l);
  const int n = static_cast<int>(rep.states.size());
  std::vector<StateSet> open(n), r(n), q(n);
  for (int i = 0; i < n; ++i) {
    const PairState& x = rep.states[i];
    for (int j = 0; j < n; ++j) {
      const PairState& y = rep.states[j];
      if (!l.leq(y.fst, x.snd)) open[i].insert(j);
      const bool rr = r_pairs(l, x, y), qq = q_pairs(l, x, y);
      if (unified ? rr && qq : rr) r[i].insert(j);
      if (unified ? rr && qq : qq) q[i].insert(j);
    }
  }
  rep.frame = ModalFrame::from_rows(n, open, r, q, true);
  std::vector<std::string> names;
  for (const auto& x : rep.states) names.push_back(describe(l, x));
  rep.frame.set_names(std::move(names));
  return rep;
}

}  // namespace

PairsFrame build_pairs_frame(const LatticeAlgebra& l) {
  constexpr std::string_view who = "pairs construction";
  require_tables(l, who);
  require(l, Property::Antitone, who);
  require(l, Property::NegTopIsBot, who);
  require(l, Property::CompletelyMultiplicative, who);
  require(l, Property::CompletelyAdditive, who);
  return pairs_frame(l, false);
}

PairsFrame build_unified_frame(const LatticeAlgebra& l) {
  constexpr std::string_view who = "unified construction";
  require_tables(l, who);
  require(l, Property::DualSelfAdjoint, who);
  require(l, Property::NegTopIsBot, who);
  require(l, Property::CompletelyMultiplicative, who);
  require(l, Property::CompletelyAdditive, who);
  require(l, Axiom::DiamondNeg, who);
  return pairs_frame(l, true);
}

// ---------------------------------------------------------------------------

namespace {

bool has(std::uint64_t set, int x) { return (set >> x) & 1U; }

constexpr int kMaxFilterIdealElements = 16;

bool is_filter(const LatticeAlgebra& l, std::uint64_t s) {
  if (s == 0) return false;
  for (int a = 0; a < l.size(); ++a) {
    if (!has(s, a)) continue;
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(a, b) && !has(s, b)) return false;
      if (has(s, b) && !has(s, l.meet(a, b))) return false;
    }
  }
  return true;
}

bool is_ideal(const LatticeAlgebra& l, std::uint64_t s) {
  if (s == 0) return false;
  for (int a = 0; a < l.size(); ++a) {
    if (!has(s, a)) continue;
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(b, a) && !has(s, b)) return false;
      if (has(s, b) && !has(s, l.join(a, b))) return false;
    }
  }
  return true;
}

}  // namespace

FilterIdealFrame build_filter_ideal_frame(const LatticeAlgebra& l, bool unified) {
  const std::string who = unified ? "unified filter-ideal construction" : "filter-ideal construction";
  require_tables(l, who);
  require(l, unified ? Property::DualSelfAdjoint : Property::Antitone, who);
  require(l, Property::NegTopIsBot, who);
  require(l, Property::Multiplicative, who);
  require(l, Property::Additive, who);
  if (unified) require(l, Axiom::DiamondNeg, who);
  if (l.size() > kMaxFilterIdealElements) {
    throw std::invalid_argument(who + " enumerates subsets; limited to " + std::to_string(kMaxFilterIdealElements) +
                                " elements");
  }

  std::vector<std::uint64_t> filters, ideals;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << l.size()); ++s) {
    if (is_filter(l, s)) filters.push_back(s);
    if (is_ideal(l, s)) ideals.push_back(s);
  }
  FilterIdealFrame rep;
  rep.unified = unified;
  for (auto f : filters) {
    std::uint64_t negs = 0;
    for (int a = 0; a < l.size(); ++a) {
      if (has(f, a)) negs |= std::uint64_t{1} << l.neg(a);
    }
    for (auto i : ideals) {
      if ((negs & ~i) == 0) rep.states.push_back({f, i});
    }
  }
  if (static_cast<int>(rep.states.size()) > kMaxStates) {
    throw std::invalid_argument("representation would have " + std::to_string(rep.states.size()) +
                                " states, limit is " + std::to_string(kMaxStates));
  }
  // Principal pairs are listed in the order of their generators so that the
  // carrier lines up with the pairs construction.
  std::stable_sort(rep.states.begin(), rep.states.end(), [&](const auto& x, const auto& y) {
    auto gx = principal_generators(l, x), gy = principal_generators(l, y);
    if (gx && gy) return *gx < *gy;
    return gx.has_value() && !gy.has_value();
  });

  auto r_rel = [&](const FilterIdealPair& x, const FilterIdealPair& y) {
    for (int a = 0; a < l.size(); ++a) {
      if (has(x.filter, l.box(a)) && !has(y.filter, a)) return false;
    }
    return true;
  };
  auto q_rel = [&](const FilterIdealPair& x, const FilterIdealPair& y) {
    for (int a = 0; a < l.size(); ++a) {
      if (has(x.ideal, l.dia(a)) && !has(y.ideal, a)) return false;
    }
    return true;
  };
  const int n = static_cast<int>(rep.states.size());
  std::vector<StateSet> open(n), r(n), q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& x = rep.states[i];
      const auto& y = rep.states[j];
      if ((x.ideal & y.filter) == 0) open[i].insert(j);
      const bool rr = r_rel(x, y), qq = q_rel(x, y);
      if (unified ? rr && qq : rr) r[i].insert(j);
      if (unified ? rr && qq : qq) q[i].insert(j);
    }
  }
  rep.frame = ModalFrame::from_rows(n, open, r, q, true);
  std::vector<std::string> names;
  for (const auto& x : rep.states) names.push_back(describe(l, x));
  rep.frame.set_names(std::move(names));
  return rep;
}

std::optional<PairState> principal_generators(const LatticeAlgebra& l, const FilterIdealPair& p) {
  int f = -1, i = -1;
  for (int a = 0; a < l.size(); ++a) {
    std::uint64_t up = 0, down = 0;
    for (int b = 0; b < l.size(); ++b) {
      if (l.leq(a, b)) up |= std::uint64_t{1} << b;
      if (l.leq(b, a)) down |= std::uint64_t{1} << b;
    }
    if (up == p.filter) f = a;
    if (down == p.ideal) i = a;
  }
  if (f < 0 || i < 0) return std::nullopt;
  return PairState{f, i};
}

std::string describe(const LatticeAlgebra& l, const PairState& x) {
  return "(" + l.name(x.fst) + "," + l.name(x.snd) + ")";
}

std::string describe(const LatticeAlgebra& l, const FilterIdealPair& x) {
  if (auto g = principal_generators(l, x)) return "(↑" + l.name(g->fst) + ",↓" + l.name(g->snd) + ")";
  auto list = [&](std::uint64_t s) {
    std::string out = "{";
    for (int a = 0; a < l.size(); ++a) {
      if (has(s, a)) out += (out.size() > 1 ? "," : "") + l.name(a);
    }
    return out + "}";
  };
  return "(" + list(x.filter) + "," + list(x.ideal) + ")";
}

// ---------------------------------------------------------------------------

SeparationReport check_separating(const LatticeAlgebra& l, const std::vector<PairState>& pairs) {
  SeparationReport report;
  const int n = l.size();
  const int m = static_cast<int>(pairs.size());
  auto opens = [&](int i, int j) { return !l.leq(pairs[j].fst, pairs[i].snd); };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.leq(a, b)) continue;
      const bool found = std::any_of(pairs.begin(), pairs.end(),
                                     [&](const PairState& p) { return l.leq(p.fst, a) && !l.leq(p.fst, b); });
      if (!found) return {false, 1, {a, b}};
    }
  }
  for (int b = 0; b < n; ++b) {
    for (int j = 0; j < m; ++j) {
      if (l.leq(pairs[j].fst, b)) continue;
      bool found = false;
      for (int k = 0; k < m && !found; ++k) {
        if (!opens(k, j)) continue;
        bool all = true;
        for (int s = 0; s < m && all; ++s) {
          if (opens(k, s) && l.leq(pairs[s].fst, b)) all = false;
        }
        found = all;
      }
      if (!found) return {false, 2, {b, j}};
    }
  }
  return report;
}

bool MorphismReport::isomorphism() const {
  if (!into_fixpoints || !injective || !surjective) return false;
  return std::all_of(preserves.begin(), preserves.end(), [](const auto& c) { return c.preserved; });
}

namespace {

MorphismReport embedding_report(const LatticeAlgebra& l, const ModalFrame& frame, std::vector<StateSet> image) {
  MorphismReport report;
  report.image = std::move(image);
  const FixpointAlgebra alg = fixpoints(frame);
  report.fixpoint_count = alg.size();
  const int n = l.size();
  const auto& img = report.image;

  for (int a = 0; a < n; ++a) {
    if (!alg.contains(img[a])) report.into_fixpoints = false;
  }
  for (int a = 0; a < n && report.injective; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (img[a] == img[b]) {
        report.injective = false;
        report.injectivity_witness = {a, b};
        break;
      }
    }
  }
  for (StateSet fp : alg.elements()) {
    if (std::find(img.begin(), img.end(), fp) == img.end()) {
      report.surjective = false;
      report.missing_fixpoint = fp;
      break;
    }
  }

  auto binary = [&](const char* name, auto lattice_op, auto set_op) {
    OperationCheck c{name};
    for (int a = 0; a < n && c.preserved; ++a) {
      for (int b = 0; b < n; ++b) {
        if (img[lattice_op(a, b)] != set_op(img[a], img[b])) {
          c.preserved = false;
          c.witness = {a, b};
          break;
        }
      }
    }
    report.preserves.push_back(std::move(c));
  };
  auto unary = [&](const char* name, auto lattice_op, auto set_op) {
    OperationCheck c{name};
    for (int a = 0; a < n; ++a) {
      if (img[lattice_op(a)] != set_op(img[a])) {
        c.preserved = false;
        c.witness = {a};
        break;
      }
    }
    report.preserves.push_back(std::move(c));
  };

  auto constant = [&](const char* name, int element, StateSet expected) {
    const bool ok = img[element] == expected;
    report.preserves.push_back({name, ok, ok ? std::vector<int>{} : std::vector<int>{element}});
  };

  binary("meet", [&](int a, int b) { return l.meet(a, b); }, [&](StateSet x, StateSet y) { return x & y; });
  binary("join", [&](int a, int b) { return l.join(a, b); },
         [&](StateSet x, StateSet y) { return join_op(frame, x, y); });
  constant("bottom", l.bottom(), closure(frame, StateSet{}));
  constant("top", l.top(), frame.carrier());
  if (l.has_neg()) unary("neg", [&](int a) { return l.neg(a); }, [&](StateSet x) { return neg_op(frame, x); });
  if (l.has_box()) unary("box", [&](int a) { return l.box(a); }, [&](StateSet x) { return box_op(frame, x); });
  if (l.has_dia()) unary("dia", [&](int a) { return l.dia(a); }, [&](StateSet x) { return dia_op(frame, x); });
  return report;
}

}  // namespace

MorphismReport canonical_embedding(const LatticeAlgebra& l, const PairsFrame& rep) {
  std::vector<StateSet> image(l.size());
  for (int a = 0; a < l.size(); ++a) {
    for (int i = 0; i < static_cast<int>(rep.states.size()); ++i) {
      if (l.leq(rep.states[i].fst, a)) image[a].insert(i);
    }
  }
  return embedding_report(l, rep.frame, std::move(image));
}

MorphismReport canonical_embedding(const LatticeAlgebra& l, const FilterIdealFrame& rep) {
  std::vector<StateSet> image(l.size());
  for (int a = 0; a < l.size(); ++a) {
    for (int i = 0; i < static_cast<int>(rep.states.size()); ++i) {
      if (has(rep.states[i].filter, a)) image[a].insert(i);
    }
  }
  return embedding_report(l, rep.frame, std::move(image));
}

// ---------------------------------------------------------------------------

std::string_view witness_map_name(WitnessMap m) {
  switch (m) {
    case WitnessMap::Rho: return "rho";
    case WitnessMap::Sigma: return "sigma";
    case WitnessMap::Tau: return "tau";
  }
  return "?";
}

namespace {

int box_core(const LatticeAlgebra& l, const PairState& x) {
  std::vector<int> bs;
  for (int b = 0; b < l.size(); ++b) {
    if (l.leq(x.fst, l.box(b))) bs.push_back(b);
  }
  return l.meet_all(bs);
}

int dia_core(const LatticeAlgebra& l, const PairState& x) {
  std::vector<int> bs;
  for (int b = 0; b < l.size(); ++b) {
    if (l.leq(l.dia(b), x.snd)) bs.push_back(b);
  }
  return l.join_all(bs);
}

}  // namespace

PairState witness_map(const LatticeAlgebra& l, const PairState& x, WitnessMap which) {
  switch (which) {
    case WitnessMap::Rho: {
      const int m = box_core(l, x);
      return {m, l.neg(m)};
    }
    case WitnessMap::Sigma: return {l.top(), dia_core(l, x)};
    case WitnessMap::Tau: {
      const int m = box_core(l, x);
      return {m, l.join(dia_core(l, x), l.neg(m))};
    }
  }
  return x;
}

std::vector<WitnessMapFailure> check_witness_maps(const LatticeAlgebra& l, const PairsFrame& rep) {
  std::vector<WitnessMapFailure> out;
  std::map<PairState, int> index;
  for (int i = 0; i < static_cast<int>(rep.states.size()); ++i) index[rep.states[i]] = i;

  const std::vector<WitnessMap> maps =
      rep.unified ? std::vector<WitnessMap>{WitnessMap::Tau} : std::vector<WitnessMap>{WitnessMap::Rho, WitnessMap::Sigma};
  for (int i = 0; i < static_cast<int>(rep.states.size()); ++i) {
    const PairState& x = rep.states[i];
    for (WitnessMap m : maps) {
      const PairState y = witness_map(l, x, m);
      auto it = index.find(y);
      if (it == index.end()) {
        out.push_back({m, "member", x});
        continue;
      }
      const bool related = m == WitnessMap::Sigma ? rep.frame.q(i, it->second) : rep.frame.r(i, it->second);
      if (!related) out.push_back({m, "related", x});
      for (int a = 0; a < l.size(); ++a) {
        if (m != WitnessMap::Sigma && !l.leq(x.fst, l.box(a)) && l.leq(y.fst, a)) {
          out.push_back({m, "box", x, a});
        }
        if (m != WitnessMap::Rho && !l.leq(l.dia(a), x.snd) && l.leq(a, y.snd)) {
          out.push_back({m, "dia", x, a});
        }
      }
    }
  }
  return out;
}

}  // namespace fml
