// Subset-filtering fixpoint enumeration: the serial loop is the reference the
// OpenMP kernel is tested against.

#include <cstdint>
#include <vector>

#include "fml/frames.hpp"

namespace fml {

namespace {

void check_cap(const ModalFrame& frame, int max_states) {
  if (frame.size() > max_states) {
    throw CapExceeded("subset enumeration limited to " + std::to_string(max_states) + " states, frame has " +
                      std::to_string(frame.size()));
  }
}

struct Adjacency {
  std::vector<std::uint64_t> succ, pred;

  explicit Adjacency(const ModalFrame& f) : succ(f.size()), pred(f.size()) {
    for (int x = 0; x < f.size(); ++x) {
      succ[x] = f.open_succ(x).bits();
      pred[x] = f.open_pred(x).bits();
    }
  }

  bool closed(std::uint64_t a) const {
    const int n = static_cast<int>(succ.size());
    std::uint64_t w = 0;
    for (int y = 0; y < n; ++y) {
      if (succ[y] & a) w |= std::uint64_t{1} << y;
    }
    std::uint64_t c = 0;
    for (int x = 0; x < n; ++x) {
      if ((pred[x] & ~w) == 0) c |= std::uint64_t{1} << x;
    }
    return c == a;
  }
};

}  // namespace

std::vector<StateSet> fixpoints_by_subsets_serial(const ModalFrame& frame, int max_states) {
  check_cap(frame, max_states);
  const Adjacency adj(frame);
  const std::uint64_t total = std::uint64_t{1} << frame.size();
  std::vector<StateSet> out;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (adj.closed(a)) out.emplace_back(a);
  }
  return out;
}

std::vector<StateSet> fixpoints_by_subsets(const ModalFrame& frame, int max_states) {
  check_cap(frame, max_states);
  const Adjacency adj(frame);
  const std::int64_t total = std::int64_t{1} << frame.size();
  std::vector<std::uint8_t> flag(static_cast<std::size_t>(total), 0);

#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < total; ++a) {
    flag[a] = adj.closed(static_cast<std::uint64_t>(a)) ? 1 : 0;
  }

  std::vector<StateSet> out;
  for (std::int64_t a = 0; a < total; ++a) {
    if (flag[a]) out.emplace_back(static_cast<std::uint64_t>(a));
  }
  return out;
}

}  // namespace fml
