#include "fml/random.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace fml {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Edge> random_edges(Rng& rng, int n, double density) {
  std::vector<Edge> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (coin(rng, density)) out.emplace_back(x, y);
    }
  }
  return out;
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

// Indices of the elements in an order compatible with ≤.
std::vector<int> linear_extension(const LatticeAlgebra& l) {
  std::vector<int> order(static_cast<std::size_t>(l.size()));
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](int a) {
    int k = 0;
    for (int b = 0; b < l.size(); ++b) k += l.leq(b, a);
    return k;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below(a) < below(b); });
  return order;
}

std::vector<int> random_order_map(Rng& rng, const LatticeAlgebra& l, bool dual) {
  const int n = l.size();
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  auto le = [&](int a, int b) { return dual ? l.leq(b, a) : l.leq(a, b); };
  for (int a : linear_extension(l)) {
    std::vector<int> options;
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int b = 0; b < n && ok; ++b) {
        if (b != a && f[b] >= 0 && l.leq(b, a)) ok = le(f[b], v);
      }
      if (ok) options.push_back(v);
    }
    f[a] = pick(rng, options);
  }
  return f;
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  const auto leaf = [&]() -> Formula {
    if (shape.modal && coin(rng, 0.15)) return coin(rng, 0.5) ? Formula::bot() : Formula::top();
    return Formula::atom(pick(rng, shape.atoms));
  };
  if (shape.max_depth <= 0 || coin(rng, 0.25)) return leaf();
  FormulaShape inner = shape;
  inner.max_depth = shape.max_depth - 1;
  const int choice = uniform(rng, 0, shape.modal ? 4 : 2);
  switch (choice) {
    case 0: return Formula::neg(random_formula(rng, inner));
    case 1: {
      Formula l = random_formula(rng, inner);
      return Formula::conj(std::move(l), random_formula(rng, inner));
    }
    case 2: {
      Formula l = random_formula(rng, inner);
      return Formula::disj(std::move(l), random_formula(rng, inner));
    }
    case 3: return Formula::box(random_formula(rng, inner));
    default: return Formula::dia(random_formula(rng, inner));
  }
}

ModalFrame random_frame(Rng& rng, int n, double density) {
  return ModalFrame::relational(n, random_edges(rng, n, density));
}

ModalFrame random_modal_frame(Rng& rng, int n, double density, double modal_density, bool unified) {
  auto open = random_edges(rng, n, density);
  auto r = random_edges(rng, n, modal_density);
  if (unified) return ModalFrame::unified(n, open, r);
  auto q = random_edges(rng, n, modal_density);
  return ModalFrame::modal(n, open, r, q);
}

ModalFrame random_class_frame(Rng& rng, FrameClass c, int max_states) {
  max_states = std::max(1, max_states);
  switch (c) {
    case FrameClass::Any: {
      std::uniform_real_distribution<double> d(0.1, 0.9);
      return random_frame(rng, uniform(rng, 1, max_states), d(rng));
    }
    case FrameClass::Classical: {
      const int n = uniform(rng, 1, max_states);
      std::vector<Edge> id;
      for (int x = 0; x < n; ++x) id.emplace_back(x, x);
      return ModalFrame::relational(n, id);
    }
    case FrameClass::Ortho: {
      const int n = uniform(rng, 1, max_states);
      std::vector<Edge> e;
      for (int x = 0; x < n; ++x) {
        e.emplace_back(x, x);
        for (int y = x + 1; y < n; ++y) {
          if (coin(rng, 0.4)) {
            e.emplace_back(x, y);
            e.emplace_back(y, x);
          }
        }
      }
      return ModalFrame::relational(n, e);
    }
    case FrameClass::Fundamental:
    case FrameClass::FundamentalModal: {
      const bool modal = c == FrameClass::FundamentalModal;
      const int n = uniform(rng, 1, max_states);
      std::uniform_real_distribution<double> d(0.3, 0.9);
      for (int attempt = 0; attempt < 4000; ++attempt) {
        ModalFrame f = modal ? random_modal_frame(rng, n, d(rng), 0.35, true) : random_frame(rng, n, d(rng));
        if (in_class(f, c)) return f;
      }
      const int m = std::min(n, max_enumerable_states(c));
      return pick(rng, class_frames(c, uniform(rng, 1, m)));
    }
  }
  return ModalFrame::relational(1, {{0, 0}});
}

Valuation random_valuation(Rng& rng, const FixpointAlgebra& algebra, const std::vector<std::string>& atoms) {
  Valuation v;
  for (const auto& a : atoms) v[a] = pick(rng, algebra.elements());
  return v;
}

Model random_class_model(Rng& rng, FrameClass c, int max_states, const std::vector<std::string>& atoms) {
  ModalFrame frame = random_class_frame(rng, c, max_states);
  const FixpointAlgebra alg = fixpoints(frame);
  Valuation v = random_valuation(rng, alg, atoms);
  return Model{std::move(frame), std::move(v)};
}

LatticeData random_lattice(Rng& rng, int ground, int max_elements) {
  ground = std::clamp(ground, 1, 6);
  const std::uint32_t full = (1U << ground) - 1;
  for (;;) {
    std::vector<std::uint32_t> family{full};
    const int draws = uniform(rng, 1, 2 * ground);
    for (int i = 0; i < draws; ++i) family.push_back(static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(full))));
    for (bool grew = true; grew;) {
      grew = false;
      const std::size_t m = family.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
          const std::uint32_t s = family[i] & family[j];
          if (std::find(family.begin(), family.end(), s) == family.end()) {
            family.push_back(s);
            grew = true;
          }
        }
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    const int n = static_cast<int>(family.size());
    if (n < 2 || n > max_elements) continue;
    std::stable_sort(family.begin(), family.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    LatticeData d;
    for (int i = 0; i < n; ++i) {
      d.elements.push_back(i == 0 ? "0" : i == n - 1 ? "1" : "e" + std::to_string(i));
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if ((family[i] & ~family[j]) == 0) d.leq.emplace_back(i, j);
      }
    }
    return d;
  }
}

std::vector<int> random_map(Rng& rng, int n) {
  std::vector<int> f(static_cast<std::size_t>(n));
  for (auto& v : f) v = uniform(rng, 0, n - 1);
  return f;
}

std::vector<int> random_monotone_map(Rng& rng, const LatticeAlgebra& l) { return random_order_map(rng, l, false); }

std::vector<int> random_antitone_map(Rng& rng, const LatticeAlgebra& l) { return random_order_map(rng, l, true); }

std::vector<int> random_antitone_involution(Rng& rng, const LatticeAlgebra& l) {
  const int n = l.size();
  if (n > 8) throw std::invalid_argument("antitone involutions are enumerated up to 8 elements");
  std::vector<std::vector<int>> found;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = perm[perm[a]] == a;
      for (int b = 0; b < n && ok; ++b) {
        if (l.leq(a, b)) ok = l.leq(perm[b], perm[a]);
      }
    }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (found.empty()) return {};
  return pick(rng, found);
}

}  // namespace fml
