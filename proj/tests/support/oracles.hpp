#pragma once

// Brute-force reference semantics. Everything here works on plain boolean
// matrices and vectors and quantifies literally over states, so it shares no
// code with the library's bitset kernels.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fml/formula.hpp"
#include "fml/frames.hpp"
#include "fml/lattice.hpp"

namespace oracle {

using Set = std::vector<bool>;
using Rel = std::vector<std::vector<bool>>;

struct Frame {
  int n = 0;
  Rel open, r, q;  // open[x][y] means x ◁ y
};

inline Frame from(const fml::ModalFrame& f) {
  Frame o;
  o.n = f.size();
  o.open.assign(o.n, std::vector<bool>(o.n));
  o.r = o.q = o.open;
  for (int x = 0; x < o.n; ++x) {
    for (int y = 0; y < o.n; ++y) {
      o.open[x][y] = f.open(x, y);
      o.r[x][y] = f.r(x, y);
      o.q[x][y] = f.q(x, y);
    }
  }
  return o;
}

inline Set to_set(int n, fml::StateSet s) {
  Set out(n);
  for (int x = 0; x < n; ++x) out[x] = s.contains(x);
  return out;
}

inline fml::StateSet from_set(const Set& s) {
  fml::StateSet out;
  for (int x = 0; x < static_cast<int>(s.size()); ++x) {
    if (s[x]) out.insert(x);
  }
  return out;
}

inline Set closure(const Frame& f, const Set& a) {
  Set out(f.n);
  for (int x = 0; x < f.n; ++x) {
    bool all = true;
    for (int y = 0; y < f.n; ++y) {
      if (!f.open[y][x]) continue;
      bool some = false;
      for (int z = 0; z < f.n; ++z) some = some || (f.open[y][z] && a[z]);
      all = all && some;
    }
    out[x] = all;
  }
  return out;
}

inline Set neg(const Frame& f, const Set& a) {
  Set out(f.n);
  for (int x = 0; x < f.n; ++x) {
    bool none = true;
    for (int y = 0; y < f.n; ++y) none = none && !(f.open[y][x] && a[y]);
    out[x] = none;
  }
  return out;
}

inline Set box(const Frame& f, const Set& a) {
  Set out(f.n);
  for (int x = 0; x < f.n; ++x) {
    bool all = true;
    for (int y = 0; y < f.n; ++y) all = all && (!f.r[x][y] || a[y]);
    out[x] = all;
  }
  return out;
}

inline Set dia(const Frame& f, const Set& a) {
  Set out(f.n);
  for (int x = 0; x < f.n; ++x) {
    bool all = true;
    for (int x1 = 0; x1 < f.n; ++x1) {
      if (!f.open[x1][x]) continue;
      bool some = false;
      for (int y1 = 0; y1 < f.n; ++y1) {
        if (!f.q[x1][y1]) continue;
        for (int y = 0; y < f.n; ++y) some = some || (f.open[y1][y] && a[y]);
      }
      all = all && some;
    }
    out[x] = all;
  }
  return out;
}

inline Set set_and(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline Set set_or(const Set& a, const Set& b) {
  Set out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

inline Set subset_from_bits(int n, std::uint64_t bits) {
  Set s(n);
  for (int x = 0; x < n; ++x) s[x] = (bits >> x) & 1U;
  return s;
}

inline std::vector<Set> fixpoints(const Frame& f) {
  std::vector<Set> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.n); ++bits) {
    Set a = subset_from_bits(f.n, bits);
    if (closure(f, a) == a) out.push_back(a);
  }
  return out;
}

// First-order conditions, written straight from their definitions.

inline bool pre_refines(const Frame& f, int z, int x) {
  for (int w = 0; w < f.n; ++w) {
    if (f.open[w][z] && !f.open[w][x]) return false;
  }
  return true;
}

inline bool pseudo_reflexive(const Frame& f) {
  for (int x = 0; x < f.n; ++x) {
    bool nonabsurd = false;
    for (int y = 0; y < f.n; ++y) nonabsurd = nonabsurd || f.open[y][x];
    if (!nonabsurd) continue;
    bool found = false;
    for (int z = 0; z < f.n; ++z) found = found || (f.open[z][x] && pre_refines(f, z, x));
    if (!found) return false;
  }
  return true;
}

inline bool pseudo_symmetric(const Frame& f) {
  for (int x = 0; x < f.n; ++x) {
    for (int y = 0; y < f.n; ++y) {
      if (!f.open[y][x]) continue;
      bool found = false;
      for (int z = 0; z < f.n; ++z) found = found || (f.open[z][y] && pre_refines(f, z, x));
      if (!found) return false;
    }
  }
  return true;
}

// xRy ▷ z  ⇒  ∃x' ◁ x ∀x'' ▷ x' ∃y'': x'' R y'' ▷ z
inline bool modal_frame(const Frame& f) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        if (!(f.r[x][y] && f.open[z][y])) continue;
        bool ok = false;
        for (int x1 = 0; x1 < f.n && !ok; ++x1) {
          if (!f.open[x1][x]) continue;
          bool all = true;
          for (int x2 = 0; x2 < f.n && all; ++x2) {
            if (!f.open[x1][x2]) continue;
            bool some = false;
            for (int y2 = 0; y2 < f.n; ++y2) some = some || (f.r[x2][y2] && f.open[z][y2]);
            all = some;
          }
          ok = all;
        }
        if (!ok) return false;
      }
  return true;
}

// xQy ◁ z  ⇒  ∃x' ▷ x ∀x'' ◁ x' ∃y'': x'' Q y'' ◁ z
inline bool additive(const Frame& f) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        if (!(f.q[x][y] && f.open[y][z])) continue;
        bool ok = false;
        for (int x1 = 0; x1 < f.n && !ok; ++x1) {
          if (!f.open[x][x1]) continue;
          bool all = true;
          for (int x2 = 0; x2 < f.n && all; ++x2) {
            if (!f.open[x2][x1]) continue;
            bool some = false;
            for (int y2 = 0; y2 < f.n; ++y2) some = some || (f.q[x2][y2] && f.open[y2][z]);
            all = some;
          }
          ok = all;
        }
        if (!ok) return false;
      }
  return true;
}

// xRy ▷ z  ⇒  ∃x' ◁ x ∀x'' ◁ x' ∃y'': x'' Q y'' ◁ z
inline bool negative(const Frame& f) {
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      for (int z = 0; z < f.n; ++z) {
        if (!(f.r[x][y] && f.open[z][y])) continue;
        bool ok = false;
        for (int x1 = 0; x1 < f.n && !ok; ++x1) {
          if (!f.open[x1][x]) continue;
          bool all = true;
          for (int x2 = 0; x2 < f.n && all; ++x2) {
            if (!f.open[x2][x1]) continue;
            bool some = false;
            for (int y2 = 0; y2 < f.n; ++y2) some = some || (f.q[x2][y2] && f.open[y2][z]);
            all = some;
          }
          ok = all;
        }
        if (!ok) return false;
      }
  return true;
}

inline bool absurd(const Frame& f, int x) {
  for (int y = 0; y < f.n; ++y) {
    if (f.open[y][x]) return false;
  }
  return true;
}

using Val = std::map<std::string, Set>;

// Pointwise forcing by structural recursion on the formula.
inline bool forces(const Frame& f, const Val& v, int x, const fml::Formula& phi) {
  using fml::Connective;
  auto sat = [&](const fml::Formula& g) {
    Set s(f.n);
    for (int y = 0; y < f.n; ++y) s[y] = forces(f, v, y, g);
    return s;
  };
  switch (phi.kind()) {
    case Connective::Atom: return v.at(phi.name())[x];
    case Connective::Top: return true;
    case Connective::Bot: return absurd(f, x);
    case Connective::And: return forces(f, v, x, phi.left()) && forces(f, v, x, phi.right());
    case Connective::Or: return closure(f, set_or(sat(phi.left()), sat(phi.right())))[x];
    case Connective::Neg: return neg(f, sat(phi.operand()))[x];
    case Connective::Box: return box(f, sat(phi.operand()))[x];
    case Connective::Dia: return dia(f, sat(phi.operand()))[x];
  }
  return false;
}

inline bool valid_in(const Frame& f, const Val& v, const fml::Formula& lhs, const fml::Formula& rhs) {
  for (int x = 0; x < f.n; ++x) {
    if (forces(f, v, x, lhs) && !forces(f, v, x, rhs)) return false;
  }
  return true;
}

inline Val to_val(int n, const fml::Valuation& v) {
  Val out;
  for (const auto& [k, s] : v) out[k] = to_set(n, s);
  return out;
}

// Two-valued truth tables.
inline bool eval(const fml::Formula& phi, const std::map<std::string, bool>& v) {
  using fml::Connective;
  switch (phi.kind()) {
    case Connective::Atom: return v.at(phi.name());
    case Connective::Neg: return !eval(phi.operand(), v);
    case Connective::And: return eval(phi.left(), v) && eval(phi.right(), v);
    case Connective::Or: return eval(phi.left(), v) || eval(phi.right(), v);
    default: return false;
  }
}

inline bool classically_valid(const fml::Formula& lhs, const fml::Formula& rhs) {
  auto names = fml::atoms(lhs);
  names.merge(fml::atoms(rhs));
  const std::vector<std::string> vars(names.begin(), names.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << vars.size()); ++bits) {
    std::map<std::string, bool> v;
    for (std::size_t i = 0; i < vars.size(); ++i) v[vars[i]] = (bits >> i) & 1U;
    if (eval(lhs, v) && !eval(rhs, v)) return false;
  }
  return true;
}

// Lattice order straight from the raw description: reflexive-transitive
// closure of the listed pairs by Warshall's algorithm.
inline Rel order_of(const fml::LatticeData& d) {
  const int n = static_cast<int>(d.elements.size());
  Rel le(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : d.leq) le[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) le[i][j] = le[i][j] || (le[i][k] && le[k][j]);
  return le;
}

inline int meet(const Rel& le, int a, int b) {
  const int n = static_cast<int>(le.size());
  for (int c = 0; c < n; ++c) {
    if (!le[c][a] || !le[c][b]) continue;
    bool greatest = true;
    for (int d = 0; d < n; ++d) greatest = greatest && (!(le[d][a] && le[d][b]) || le[d][c]);
    if (greatest) return c;
  }
  return -1;
}

inline int join(const Rel& le, int a, int b) {
  const int n = static_cast<int>(le.size());
  for (int c = 0; c < n; ++c) {
    if (!le[a][c] || !le[b][c]) continue;
    bool least = true;
    for (int d = 0; d < n; ++d) least = least && (!(le[a][d] && le[b][d]) || le[c][d]);
    if (least) return c;
  }
  return -1;
}

inline int bottom(const Rel& le) {
  for (int c = 0; c < static_cast<int>(le.size()); ++c) {
    bool ok = true;
    for (int d = 0; d < static_cast<int>(le.size()); ++d) ok = ok && le[c][d];
    if (ok) return c;
  }
  return -1;
}

inline int top(const Rel& le) {
  for (int c = 0; c < static_cast<int>(le.size()); ++c) {
    bool ok = true;
    for (int d = 0; d < static_cast<int>(le.size()); ++d) ok = ok && le[d][c];
    if (ok) return c;
  }
  return -1;
}

}  // namespace oracle
