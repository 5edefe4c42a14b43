// Acceptance suite: one PASS/FAIL line per criterion. Reference values are
// recomputed here by brute force (tests/support/oracles.hpp) or typed in
// by hand, never read back from the library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fml/consequence.hpp"
#include "fml/random.hpp"
#include "fml/representation.hpp"
#include "support/oracles.hpp"

using namespace fml;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failures {
  std::vector<std::string> items;
  void add(const std::string& s) {
    if (items.size() < 5) items.push_back(s);
    ++count;
  }
  int count = 0;
  bool empty() const { return count == 0; }
  std::string text() const {
    std::string out = std::to_string(count) + " failures";
    for (const auto& s : items) out += "; " + s;
    return out;
  }
};

// ---------------------------------------------------------------------------
// 1. fixture tables

struct Table {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> neg, box, dia;
  std::vector<bool> pattern;  // DiamondNeg, BoxNeg, NegDiamond, NegBox
  Axiom chain_axiom;
  std::string chain;
};

std::vector<Table> expected_tables() {
  const std::vector<std::string> m2{"0", "a", "b", "1"};
  const std::vector<std::pair<std::string, std::string>> m2_covers{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}};
  const std::map<std::string, std::string> allind_neg{{"1", "0"}, {"a", "0"}, {"b", "a"}, {"0", "1"}};
  return {
      {"allind_a", m2, m2_covers, allind_neg,
       {{"1", "1"}, {"a", "a"}, {"b", "b"}, {"0", "0"}},
       {{"1", "1"}, {"a", "1"}, {"b", "b"}, {"0", "0"}},
       {false, true, true, true}, Axiom::DiamondNeg, "◇¬b = ◇a = 1 ≰ a = ¬b = ¬□b"},
      {"allind_b", m2, m2_covers, allind_neg,
       {{"1", "1"}, {"a", "1"}, {"b", "0"}, {"0", "0"}},
       {{"1", "1"}, {"a", "1"}, {"b", "1"}, {"0", "0"}},
       {true, false, true, true}, Axiom::BoxNeg, "□¬b = □a = 1 ≰ 0 = ¬1 = ¬◇b"},
      {"negdiamond_bool4", m2, m2_covers,
       {{"1", "0"}, {"a", "b"}, {"b", "a"}, {"0", "1"}},
       {{"1", "1"}, {"a", "0"}, {"b", "0"}, {"0", "0"}},
       {{"1", "1"}, {"a", "1"}, {"b", "0"}, {"0", "0"}},
       {true, true, false, false}, Axiom::NegDiamond, "¬◇b = ¬0 = 1 ≰ 0 = □a = □¬b"},
      {"negdiamond_heyting5", {"0", "a", "b", "c", "1"},
       {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}},
       {{"1", "0"}, {"c", "0"}, {"a", "b"}, {"b", "a"}, {"0", "1"}},
       {{"1", "1"}, {"c", "1"}, {"a", "c"}, {"b", "0"}, {"0", "0"}},
       {{"1", "1"}, {"c", "1"}, {"a", "1"}, {"b", "0"}, {"0", "0"}},
       {true, true, false, true}, Axiom::NegDiamond, "¬◇b = ¬0 = 1 ≰ c = □a = □¬b"},
      {"negbox_chain3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}},
       {{"0", "1"}, {"a", "0"}, {"1", "0"}},
       {{"1", "1"}, {"a", "0"}, {"0", "0"}},
       {{"1", "1"}, {"a", "1"}, {"0", "0"}},
       {true, true, true, false}, Axiom::NegBox, "¬□a = ¬0 = 1 ≰ 0 = ◇0 = ◇¬a"},
  };
}

// The four inequalities evaluated directly on a table.
std::vector<bool> table_pattern(const Table& t) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < t.elements.size(); ++i) idx[t.elements[i]] = static_cast<int>(i);
  LatticeData raw{t.elements, {}, {}, {}, {}};
  for (const auto& [a, b] : t.covers) raw.leq.emplace_back(idx[a], idx[b]);
  const auto le = oracle::order_of(raw);
  auto leq = [&](const std::string& a, const std::string& b) { return bool(le[idx[a]][idx[b]]); };
  std::vector<bool> out(4, true);
  for (const auto& a : t.elements) {
    const auto& n = t.neg;
    out[0] = out[0] && leq(t.dia.at(n.at(a)), n.at(t.box.at(a)));
    out[1] = out[1] && leq(t.box.at(n.at(a)), n.at(t.dia.at(a)));
    out[2] = out[2] && leq(n.at(t.dia.at(a)), t.box.at(n.at(a)));
    out[3] = out[3] && leq(n.at(t.box.at(a)), t.dia.at(n.at(a)));
  }
  return out;
}

Outcome fixture_tables() {
  Failures f;
  int values = 0;
  const std::vector<Axiom> four{Axiom::DiamondNeg, Axiom::BoxNeg, Axiom::NegDiamond, Axiom::NegBox};
  for (const Table& t : expected_tables()) {
    const LatticeAlgebra& l = fixture(t.name).algebra;
    if (l.data().elements.size() != t.elements.size()) f.add(t.name + " carrier");
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < t.elements.size(); ++i) idx[t.elements[i]] = static_cast<int>(i);
    LatticeData raw{t.elements, {}, {}, {}, {}};
    for (const auto& [a, b] : t.covers) raw.leq.emplace_back(idx[a], idx[b]);
    const auto le = oracle::order_of(raw);
    for (const auto& a : t.elements) {
      const int la = l.index_of(a);
      if (la < 0) {
        f.add(t.name + " lacks " + a);
        continue;
      }
      if (l.name(l.neg(la)) != t.neg.at(a)) f.add(t.name + " ¬" + a);
      if (l.name(l.box(la)) != t.box.at(a)) f.add(t.name + " □" + a);
      if (l.name(l.dia(la)) != t.dia.at(a)) f.add(t.name + " ◇" + a);
      for (const auto& b : t.elements) {
        if (l.leq(la, l.index_of(b)) != le[idx[a]][idx[b]]) f.add(t.name + " order " + a + " " + b);
      }
    }
    const std::vector<bool> direct = table_pattern(t);
    for (int i = 0; i < 4; ++i) {
      ++values;
      const bool lib = check_axiom(l, four[i]).holds;
      if (lib != t.pattern[i] || direct[i] != t.pattern[i]) {
        f.add(t.name + " " + std::string(axiom_name(four[i])));
      }
    }
    const std::string got = check_axiom(l, t.chain_axiom).chain;
    if (!same_chain(got, t.chain)) f.add(t.name + " chain '" + got + "'");
  }
  return {f.empty(), f.empty() ? "5 fixtures, " + std::to_string(values) + " axiom values, 5 witness chains"
                               : f.text()};
}

// ---------------------------------------------------------------------------
// 2. representation

using oracle::Set;

// All intersections of the sets {x | not y ◁ x}, together with X. Each
// fixpoint is the intersection of these over the states not open to it.
std::vector<Set> fixpoints_by_generators(const oracle::Frame& f) {
  std::set<Set> fam{Set(f.n, true)};
  for (int y = 0; y < f.n; ++y) {
    Set m(f.n);
    for (int x = 0; x < f.n; ++x) m[x] = !f.open[y][x];
    std::set<Set> next = fam;
    for (const auto& a : fam) next.insert(oracle::set_and(a, m));
    fam = std::move(next);
  }
  return {fam.begin(), fam.end()};
}

std::vector<Set> oracle_fixpoints(const oracle::Frame& f) {
  return f.n <= 12 ? oracle::fixpoints(f) : fixpoints_by_generators(f);
}

bool brute_dsa(const LatticeAlgebra& l, const oracle::Rel& le) {
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b) {
      if (le[a][l.neg(b)] && !le[b][l.neg(a)]) return false;
    }
  return true;
}

// Checks the frame built on `states` against the defining clauses and the
// image map against the oracle's fixpoint lattice.
void check_pairs_frame(const std::string& tag, const LatticeAlgebra& l, const PairsFrame& rep, bool unified,
                       Failures& f) {
  const LatticeData& d = l.data();
  const auto le = oracle::order_of(d);
  const int n = l.size();
  std::set<PairState> expect;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (le[d.neg[a]][b]) expect.insert({a, b});
    }
  if (std::set<PairState>(rep.states.begin(), rep.states.end()) != expect || rep.states.size() != expect.size()) {
    f.add(tag + " carrier");
    return;
  }
  const oracle::Frame o = oracle::from(rep.frame);
  const int m = o.n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const PairState x = rep.states[i], y = rep.states[j];
      if (o.open[i][j] != !le[y.fst][x.snd]) f.add(tag + " open");
      bool r = true, q = true;
      for (int a = 0; a < n; ++a) {
        if (le[x.fst][d.box[a]] && !le[y.fst][a]) r = false;
        if (le[d.dia[a]][x.snd] && !le[a][y.snd]) q = false;
      }
      if (unified) r = q = r && q;
      if (o.r[i][j] != r) f.add(tag + " R");
      if (o.q[i][j] != q) f.add(tag + " Q");
    }
  const std::vector<Set> fix = oracle_fixpoints(o);
  std::vector<Set> image(n, Set(m));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i) image[a][i] = le[rep.states[i].fst][a];
  std::set<Set> distinct(image.begin(), image.end());
  if (distinct.size() != static_cast<std::size_t>(n)) f.add(tag + " not injective");
  if (std::set<Set>(fix.begin(), fix.end()) != distinct) f.add(tag + " image is not the fixpoint lattice");
  for (const auto& s : fix) {
    if (oracle::closure(o, s) != s) f.add(tag + " generator route gave a non-fixpoint");
  }
  if (image[oracle::bottom(le)] != oracle::closure(o, Set(m))) f.add(tag + " bottom");
  if (image[oracle::top(le)] != Set(m, true)) f.add(tag + " top");
  for (int a = 0; a < n; ++a) {
    if (image[d.neg[a]] != oracle::neg(o, image[a])) f.add(tag + " neg");
    if (image[d.box[a]] != oracle::box(o, image[a])) f.add(tag + " box");
    if (image[d.dia[a]] != oracle::dia(o, image[a])) f.add(tag + " dia");
    for (int b = 0; b < n; ++b) {
      if (image[oracle::meet(le, a, b)] != oracle::set_and(image[a], image[b])) f.add(tag + " meet");
      if (image[oracle::join(le, a, b)] != oracle::closure(o, oracle::set_or(image[a], image[b]))) f.add(tag + " join");
    }
  }
  const MorphismReport lib = canonical_embedding(l, rep);
  if (!lib.isomorphism()) f.add(tag + " library embedding");
  if (!oracle::modal_frame(o)) f.add(tag + " modal condition");
  if (!oracle::additive(o)) f.add(tag + " additive condition");
}

Outcome representation() {
  Failures f;
  int unified = 0;
  for (const auto& fx : fixtures()) {
    const LatticeAlgebra& l = fx.algebra;
    const auto le = oracle::order_of(l.data());
    check_pairs_frame(fx.name, l, build_pairs_frame(l), false, f);
    bool dn = true, nd = true, semi = true;
    for (int a = 0; a < l.size(); ++a) {
      dn = dn && le[l.dia(l.neg(a))][l.neg(l.box(a))];
      nd = nd && le[l.neg(l.dia(a))][l.box(l.neg(a))];
      semi = semi && oracle::meet(le, a, l.neg(a)) == oracle::bottom(le);
    }
    if (!(brute_dsa(l, le) && dn)) {
      bool rejected = false;
      try {
        build_unified_frame(l);
      } catch (const PreconditionError&) {
        rejected = true;
      }
      if (!rejected) f.add(fx.name + " unified builder accepted");
      continue;
    }
    ++unified;
    const PairsFrame rep = build_unified_frame(l);
    check_pairs_frame(fx.name + " unified", l, rep, true, f);
    const oracle::Frame o = oracle::from(rep.frame);
    if (!oracle::pseudo_symmetric(o)) f.add(fx.name + " pseudo-symmetry");
    if (semi && !oracle::pseudo_reflexive(o)) f.add(fx.name + " pseudo-reflexivity");
    if (nd && !oracle::negative(o)) f.add(fx.name + " negative");
  }
  return {f.empty(), f.empty() ? "5 pairs frames, " + std::to_string(unified) + " unified frames" : f.text()};
}

// ---------------------------------------------------------------------------
// 3. closure and correspondence

Outcome correspondence() {
  Failures f;
  Rng rng(1001);
  int frames = 0, pr[2] = {0, 0}, ps[2] = {0, 0};
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + i % 5;
    const ModalFrame frame = random_frame(rng, n, 0.15 + 0.7 * ((i / 5) % 8) / 7.0);
    const oracle::Frame o = oracle::from(frame);
    ++frames;
    const std::string tag = "frame " + std::to_string(i);
    const Set empty(n), full(n, true);
    const Set bottom = oracle::closure(o, empty);
    std::vector<Set> all;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) all.push_back(oracle::subset_from_bits(n, bits));
    for (const auto& a : all) {
      const Set ca = oracle::closure(o, a);
      if (oracle::to_set(n, closure(frame, oracle::from_set(a))) != ca) f.add(tag + " closure differs");
      if (!oracle::subset(a, ca)) f.add(tag + " not extensive");
      if (oracle::closure(o, ca) != ca) f.add(tag + " not idempotent");
      const Set na = oracle::neg(o, a);
      if (oracle::to_set(n, neg_op(frame, oracle::from_set(a))) != na) f.add(tag + " negation differs");
      if (oracle::closure(o, na) != na) f.add(tag + " ¬A not a fixpoint");
      for (const auto& b : all) {
        if (oracle::subset(a, b) && !oracle::subset(ca, oracle::closure(o, b))) f.add(tag + " not monotone");
        if (oracle::subset(a, b) && !oracle::subset(oracle::neg(o, b), na)) f.add(tag + " ¬ not antitone");
        if (oracle::neg(o, oracle::set_or(a, b)) != oracle::set_and(na, oracle::neg(o, b))) f.add(tag + " ¬ of union");
      }
    }
    if (oracle::neg(o, full) != bottom) f.add(tag + " ¬X is not c(∅)");
    const std::vector<Set> fix = oracle::fixpoints(o);
    const FixpointAlgebra alg = fixpoints(frame);
    std::set<Set> lib;
    for (auto s : alg.elements()) lib.insert(oracle::to_set(n, s));
    if (lib != std::set<Set>(fix.begin(), fix.end())) f.add(tag + " fixpoints differ");
    if (oracle::to_set(n, alg.bottom()) != bottom || oracle::to_set(n, alg.top()) != full) f.add(tag + " bounds");
    bool refl = true, sym = true;
    for (const auto& a : fix) {
      if (!oracle::subset(bottom, a)) f.add(tag + " c(∅) not least");
      const Set na = oracle::neg(o, a);
      refl = refl && oracle::subset(oracle::set_and(a, na), bottom);
      sym = sym && oracle::subset(a, oracle::neg(o, na));
      for (const auto& b : fix) {
        const Set meet = oracle::set_and(a, b);
        const Set join = oracle::closure(o, oracle::set_or(a, b));
        if (oracle::closure(o, meet) != meet) f.add(tag + " meet not a fixpoint");
        if (oracle::to_set(n, alg.join(oracle::from_set(a), oracle::from_set(b))) != join) f.add(tag + " join differs");
        if (!oracle::subset(a, join) || !oracle::subset(b, join)) f.add(tag + " join not an upper bound");
        for (const auto& c : fix) {
          if (oracle::subset(a, c) && oracle::subset(b, c) && !oracle::subset(join, c)) f.add(tag + " join not least");
        }
      }
    }
    const bool lib_pr = satisfies(frame, FrameCondition::PseudoReflexive);
    const bool lib_ps = satisfies(frame, FrameCondition::PseudoSymmetric);
    if (oracle::pseudo_reflexive(o) != refl || lib_pr != refl) f.add(tag + " pseudo-reflexivity correspondence");
    if (oracle::pseudo_symmetric(o) != sym || lib_ps != sym) f.add(tag + " pseudo-symmetry correspondence");
    ++pr[refl];
    ++ps[sym];
  }
  if (pr[0] == 0 || pr[1] == 0 || ps[0] == 0 || ps[1] == 0) f.add("a correspondence side was never exercised");
  std::ostringstream os;
  os << frames << " frames; pseudo-reflexive " << pr[1] << "/" << frames << ", pseudo-symmetric " << ps[1] << "/"
     << frames;
  return {f.empty(), f.empty() ? os.str() : f.text()};
}

// ---------------------------------------------------------------------------
// 4. modal operations

ModalFrame sub_relation_frame(Rng& rng, int n) {
  std::bernoulli_distribution open(0.5), edge(0.4), keep(0.6);
  std::vector<Edge> o, r, q;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (open(rng)) o.emplace_back(x, y);
      if (edge(rng)) {
        r.emplace_back(x, y);
        if (keep(rng)) q.emplace_back(x, y);
      }
    }
  return ModalFrame::modal(n, o, r, q);
}

// Subfamilies of the fixpoints: all of them when few, otherwise a sample.
std::vector<std::vector<int>> families(Rng& rng, int count) {
  std::vector<std::vector<int>> out;
  if (count <= 8) {
    for (std::uint32_t bits = 0; bits < (1U << count); ++bits) {
      std::vector<int> fam;
      for (int i = 0; i < count; ++i) {
        if ((bits >> i) & 1U) fam.push_back(i);
      }
      out.push_back(fam);
    }
    return out;
  }
  out.push_back({});
  std::bernoulli_distribution take(0.3);
  for (int k = 0; k < 300; ++k) {
    std::vector<int> fam;
    for (int i = 0; i < count; ++i) {
      if (take(rng)) fam.push_back(i);
    }
    out.push_back(fam);
  }
  return out;
}

Outcome modal_operations() {
  Failures f;
  Rng rng(2002);
  int frames = 0, modal = 0, additive = 0, sub = 0, negative = 0;
  for (int i = 0; i < 480; ++i) {
    const int n = 1 + i % 4;
    ModalFrame frame;
    switch (i % 4) {
      case 0: frame = random_modal_frame(rng, n, 0.5, 0.35, false); break;
      case 1: frame = random_modal_frame(rng, n, 0.6, 0.35, true); break;
      case 2: frame = sub_relation_frame(rng, n); break;
      default: frame = random_class_frame(rng, FrameClass::FundamentalModal, 4); break;
    }
    ++frames;
    const oracle::Frame o = oracle::from(frame);
    const int m = o.n;
    const std::string tag = "frame " + std::to_string(i);
    const bool is_modal = oracle::modal_frame(o), is_add = oracle::additive(o), is_neg = oracle::negative(o);
    bool q_in_r = true;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) q_in_r = q_in_r && (!o.q[x][y] || o.r[x][y]);
    if (satisfies(frame, FrameCondition::ModalFrame) != is_modal) f.add(tag + " modal condition differs");
    if (satisfies(frame, FrameCondition::Additive) != is_add) f.add(tag + " additive condition differs");
    if (satisfies(frame, FrameCondition::Negative) != is_neg) f.add(tag + " negative condition differs");
    modal += is_modal;
    additive += is_add;
    sub += q_in_r;
    negative += is_neg;
    const std::vector<Set> fix = oracle::fixpoints(o);
    const Set full(m, true), bottom = oracle::closure(o, Set(m));
    for (const auto& a : fix) {
      const Set da = oracle::dia(o, a);
      if (oracle::closure(o, da) != da) f.add(tag + " ◇A not a fixpoint");
      if (oracle::to_set(m, dia_op(frame, oracle::from_set(a))) != da) f.add(tag + " ◇ differs");
      if (oracle::to_set(m, box_op(frame, oracle::from_set(a))) != oracle::box(o, a)) f.add(tag + " □ differs");
      if (is_modal && oracle::closure(o, oracle::box(o, a)) != oracle::box(o, a)) f.add(tag + " □A not a fixpoint");
      if (q_in_r && !oracle::subset(oracle::dia(o, oracle::neg(o, a)), oracle::neg(o, oracle::box(o, a)))) {
        f.add(tag + " ◇¬A ⊄ ¬□A");
      }
      if (is_neg && !oracle::subset(oracle::neg(o, oracle::dia(o, a)), oracle::box(o, oracle::neg(o, a)))) {
        f.add(tag + " ¬◇A ⊄ □¬A");
      }
    }
    if (!is_modal && !is_add) continue;
    for (const auto& fam : families(rng, static_cast<int>(fix.size()))) {
      Set meet = full, boxes = full, joined(m), dias(m);
      for (int k : fam) {
        meet = oracle::set_and(meet, fix[k]);
        boxes = oracle::set_and(boxes, oracle::box(o, fix[k]));
        joined = oracle::set_or(joined, fix[k]);
        dias = oracle::set_or(dias, oracle::dia(o, fix[k]));
      }
      if (is_modal && oracle::box(o, meet) != boxes) f.add(tag + " □ misses a meet");
      if (is_add && oracle::dia(o, oracle::closure(o, joined)) != oracle::closure(o, dias)) {
        f.add(tag + " ◇ misses a join");
      }
    }
    if (is_add && oracle::dia(o, bottom) != bottom) f.add(tag + " ◇c(∅) ≠ c(∅)");
  }
  if (modal < 50 || additive < 50 || sub < 50 || negative < 50) f.add("too few frames for some condition");
  std::ostringstream os;
  os << frames << " frames; modal " << modal << ", additive " << additive << ", Q⊆R " << sub << ", negative "
     << negative;
  return {f.empty(), f.empty() ? os.str() : f.text()};
}

// ---------------------------------------------------------------------------
// 5. prover and refuter coherence

bool oracle_in_class(const oracle::Frame& o, FrameClass c) {
  switch (c) {
    case FrameClass::Fundamental: return oracle::pseudo_reflexive(o) && oracle::pseudo_symmetric(o);
    case FrameClass::Ortho:
      for (int x = 0; x < o.n; ++x)
        for (int y = 0; y < o.n; ++y) {
          if (!o.open[x][x] || o.open[x][y] != o.open[y][x]) return false;
        }
      return true;
    case FrameClass::FundamentalModal:
      return o.r == o.q && oracle::modal_frame(o) && oracle::additive(o) && oracle::pseudo_reflexive(o) &&
             oracle::pseudo_symmetric(o);
    default: return false;
  }
}

// The countermodel is in the class, its valuation is by fixpoints and the
// witness separates the two sides.
bool countermodel_ok(const Refuted& r, const Consecution& g, FrameClass c) {
  const oracle::Frame o = oracle::from(r.model.frame);
  if (r.frame_class != c || !oracle_in_class(o, c)) return false;
  const oracle::Val v = oracle::to_val(o.n, r.model.valuation);
  for (const auto& [atom, s] : v) {
    if (oracle::closure(o, s) != s) return false;
  }
  return oracle::forces(o, v, r.model.witness, g.lhs) && !oracle::forces(o, v, r.model.witness, g.rhs);
}

Outcome coherence() {
  Failures f;
  std::ostringstream os;
  Rng rng(3003);
  for (LogicId logic : {LogicId::Fundamental, LogicId::Ortho, LogicId::FundamentalModal}) {
    const bool modal = logic == LogicId::FundamentalModal;
    const FrameClass cls = *refutation_class(logic);
    const FormulaShape shape{{"p", "q", "r"}, 3, modal};
    int proved = 0, refuted = 0, unknown = 0;
    for (int i = 0; i < 2000; ++i) {
      const Consecution g{random_formula(rng, shape), random_formula(rng, shape), logic};
      const Verdict v = decide(g);
      const std::string tag = std::string(logic_name(logic)) + " " + render(g);
      if (const auto* p = std::get_if<Proved>(&v)) {
        ++proved;
        if (!check_proof(p->trace, g).ok) f.add(tag + ": bad proof");
        for (int k = 0; k < 50; ++k) {
          const Model m = random_class_model(rng, cls, modal ? 4 : 5, {"p", "q", "r"});
          const oracle::Frame o = oracle::from(m.frame);
          if (!oracle::valid_in(o, oracle::to_val(o.n, m.valuation), g.lhs, g.rhs)) {
            f.add(tag + ": proved but fails in a model");
            break;
          }
        }
      } else if (const auto* r = std::get_if<Refuted>(&v)) {
        ++refuted;
        if (!countermodel_ok(*r, g, cls)) f.add(tag + ": bad countermodel");
        if (saturate(g, {64, 200000}).proved) f.add(tag + ": refuted but provable");
      } else {
        ++unknown;
      }
    }
    os << logic_name(logic) << " " << proved << "/" << refuted << "/" << unknown << " ";
  }
  return {f.empty(), f.empty() ? "proved/refuted/unknown: " + os.str() : f.text()};
}

// ---------------------------------------------------------------------------
// 6. classical reduction

Outcome classical_reduction() {
  Failures f;
  Rng rng(4004);
  const FormulaShape shape{{"p", "q"}, 2, false};
  int proved = 0, refuted = 0, unknown = 0;
  auto reduce = [](const Formula& phi, const Formula& psi) {
    return decide(Consecution{classical_premise(phi, psi), psi, LogicId::Fundamental});
  };
  for (int i = 0; i < 100; ++i) {
    const Formula phi = random_formula(rng, shape), psi = random_formula(rng, shape);
    const bool valid = oracle::classically_valid(phi, psi);
    const Verdict v = reduce(phi, psi);
    const std::string tag = render(phi) + " |- " + render(psi);
    if (std::holds_alternative<Proved>(v)) {
      ++proved;
      if (!valid) f.add(tag + ": proved but classically invalid");
    } else if (std::holds_alternative<Refuted>(v)) {
      ++refuted;
      if (valid) f.add(tag + ": refuted but classically valid");
    } else {
      ++unknown;
    }
  }
  const std::vector<std::pair<const char*, const char*>> curated{
      {"p", "p"},           {"p", "p | q"},       {"p | q", "p"},           {"~~p", "p"},
      {"p", "~~p"},         {"p & q", "q"},       {"q", "p & q"},           {"~(p & q)", "~p | ~q"},
      {"~p | ~q", "~(p & q)"}, {"~(p | q)", "~p & ~q"}, {"~p & ~q", "~(p | q)"}, {"p & ~p", "q"},
      {"p", "q | ~q"},      {"p | ~p", "q"},      {"p & (q | ~q)", "p"},    {"p | q", "q | p"},
      {"(p | q) & ~p", "q"}, {"~p", "~(p & q)"},  {"~~(p & q)", "q"},       {"p | q", "p & q"}};
  int agreed = 0;
  for (const auto& [a, b] : curated) {
    const Formula phi = parse(a), psi = parse(b);
    const Verdict v = reduce(phi, psi);
    const bool valid = oracle::classically_valid(phi, psi);
    const bool ok = valid ? std::holds_alternative<Proved>(v) : std::holds_alternative<Refuted>(v);
    if (ok) {
      ++agreed;
    } else {
      f.add(std::string("curated ") + a + " |- " + b + ": " + std::string(verdict_name(v)));
    }
  }
  std::ostringstream os;
  os << "random proved/refuted/unknown " << proved << "/" << refuted << "/" << unknown << "; curated " << agreed
     << "/" << curated.size() << " decided and matching";
  return {f.empty(), f.empty() ? os.str() : f.text()};
}

// ---------------------------------------------------------------------------
// 7. translation

Outcome translation() {
  Failures f;
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"p", "p | q"},          {"p | q", "p"},            {"~~p", "p"},
      {"p", "~~p"},            {"p & (q | r)", "p & q | p & r"}, {"~(p & q)", "~p | ~q"},
      {"~p & ~q", "~(p | q)"}, {"p & ~p", "q"},           {"p", "q | ~q"},
      {"p | ~p", "q | ~q"},    {"q", "p"},                {"p & q", "q & p"},
      {"~(p | q)", "~p"},      {"(p | q) & ~p", "q"},     {"p | q & r", "(p | q) & (p | r)"}};
  int both = 0, agree = 0;
  for (const auto& [a, b] : pairs) {
    const Formula phi = parse(a), psi = parse(b);
    const Verdict o = decide(Consecution{phi, psi, LogicId::Ortho});
    const Verdict g = decide(Consecution{godel_gentzen(phi), godel_gentzen(psi), LogicId::Fundamental});
    if (std::holds_alternative<Unknown>(o) || std::holds_alternative<Unknown>(g)) continue;
    ++both;
    if (o.index() == g.index()) {
      ++agree;
    } else {
      f.add(std::string(a) + " |- " + b + ": " + std::string(verdict_name(o)) + " vs " + std::string(verdict_name(g)));
    }
  }
  std::ostringstream os;
  os << pairs.size() << " pairs, " << both << " with both verdicts definite, " << agree << " agreeing";
  return {f.empty(), f.empty() ? os.str() : f.text()};
}

// ---------------------------------------------------------------------------
// 8. soundness of the modal calculus

struct Schema {
  std::string rule;
  std::vector<std::pair<Formula, Formula>> premises;
  Formula lhs, rhs;
};

std::vector<Schema> schemas(const Formula& a, const Formula& b, const Formula& c) {
  using F = Formula;
  return {
      {"1", {}, a, a},
      {"2", {}, F::conj(a, b), a},
      {"3", {}, F::conj(a, b), b},
      {"4", {}, a, F::disj(a, b)},
      {"5", {}, b, F::disj(a, b)},
      {"6", {}, a, F::neg(F::neg(a))},
      {"7", {}, F::conj(a, F::neg(a)), b},
      {"8", {{a, b}, {b, c}}, a, c},
      {"9", {{a, b}, {a, c}}, a, F::conj(b, c)},
      {"10", {{a, c}, {b, c}}, F::disj(a, b), c},
      {"11", {{a, b}}, F::neg(b), F::neg(a)},
      {"12", {}, F::bot(), a},
      {"12", {}, a, F::top()},
      {"13", {}, F::neg(F::top()), F::bot()},
      {"14", {}, F::conj(F::box(a), F::box(b)), F::box(F::conj(a, b))},
      {"15", {}, F::dia(F::disj(a, b)), F::disj(F::dia(a), F::dia(b))},
      {"16", {}, F::dia(F::neg(a)), F::neg(F::box(a))},
      {"17", {}, F::top(), F::box(F::top())},
      {"18", {}, F::dia(F::bot()), F::bot()},
      {"19", {{a, b}}, F::box(a), F::box(b)},
      {"20", {{a, b}}, F::dia(a), F::dia(b)},
  };
}

// Instances of the premise rules whose premises hold in every model.
std::vector<Schema> entailed_instances(const Formula& a, const Formula& b, const Formula& c) {
  using F = Formula;
  const Formula ab = F::disj(a, b);
  return {
      {"8", {{a, ab}, {ab, F::disj(ab, c)}}, a, F::disj(ab, c)},
      {"9", {{a, ab}, {a, F::disj(a, c)}}, a, F::conj(ab, F::disj(a, c))},
      {"10", {{F::conj(a, c), c}, {F::conj(b, c), c}}, F::disj(F::conj(a, c), F::conj(b, c)), c},
      {"11", {{F::conj(a, b), a}}, F::neg(a), F::neg(F::conj(a, b))},
      {"19", {{F::conj(a, b), a}}, F::box(F::conj(a, b)), F::box(a)},
      {"20", {{a, ab}}, F::dia(a), F::dia(ab)},
  };
}

Outcome soundness() {
  Failures f;
  Rng rng(5005);
  const FormulaShape shape{{"p", "q"}, 2, true};
  std::map<std::string, int> checked, premised;
  int frames = 0;
  for (int i = 0; i < 200; ++i) {
    const ModalFrame frame = random_class_frame(rng, FrameClass::FundamentalModal, 4);
    const oracle::Frame o = oracle::from(frame);
    if (!oracle_in_class(o, FrameClass::FundamentalModal)) {
      f.add("frame " + std::to_string(i) + " outside the class");
      continue;
    }
    ++frames;
    const FixpointAlgebra alg = fixpoints(frame);
    for (int k = 0; k < 5; ++k) {
      const oracle::Val v = oracle::to_val(o.n, random_valuation(rng, alg, {"p", "q"}));
      for (const auto& [atom, s] : v) {
        if (oracle::closure(o, s) != s) f.add("valuation is not by fixpoints");
      }
      const Formula a = random_formula(rng, shape), b = random_formula(rng, shape), c = random_formula(rng, shape);
      auto run = [&](const std::vector<Schema>& list) {
        for (const Schema& s : list) {
          bool premises = true;
          for (const auto& [l, r] : s.premises) premises = premises && oracle::valid_in(o, v, l, r);
          if (!premises) continue;
          ++checked[s.rule];
          if (!s.premises.empty()) ++premised[s.rule];
          if (!oracle::valid_in(o, v, s.lhs, s.rhs)) {
            f.add("rule " + s.rule + " fails: " + render(s.lhs) + " |- " + render(s.rhs));
          }
        }
      };
      run(schemas(a, b, c));
      run(entailed_instances(a, b, c));
    }
  }
  for (const char* r : {"8", "9", "10", "11", "19", "20"}) {
    if (premised[r] == 0) f.add(std::string("rule ") + r + " never had true premises");
  }
  int total = 0;
  for (const auto& [rule, n] : checked) total += n;
  std::ostringstream os;
  os << frames << " frames, " << total << " rule instances with true premises, 20 schemas";
  return {f.empty() && checked.size() == 20, f.empty() ? os.str() : f.text()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fixture axiom tables", fixture_tables},
      {"representation isomorphism", representation},
      {"closure and correspondence", correspondence},
      {"modal operations", modal_operations},
      {"prover/refuter coherence", coherence},
      {"classical reduction", classical_reduction},
      {"g-translation", translation},
      {"soundness of the modal rules", soundness},
  };
  const double limits[] = {1, 60, 0, 0, 0, 0, 0, 0};
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0 && secs > limits[i]) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(limits[i])) + " s limit";
    }
    failed += !r.pass;
    std::printf("%s %zu %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
