#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fml {

/// Maximum carrier size of a frame; StateSet is a single 64-bit mask.
inline constexpr int kMaxStates = 64;

/// Subset of a frame's carrier, one bit per state.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet all(int n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr StateSet single(int x) { return StateSet(std::uint64_t{1} << x); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(StateSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(StateSet o) const { return (bits_ & o.bits_) != 0; }
  int count() const { return std::popcount(bits_); }
  /// Lowest member, or -1 when empty.
  int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

  void insert(int x) { bits_ |= std::uint64_t{1} << x; }
  void erase(int x) { bits_ &= ~(std::uint64_t{1} << x); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr StateSet operator&(StateSet o) const { return StateSet(bits_ & o.bits_); }
  constexpr StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr StateSet operator-(StateSet o) const { return StateSet(bits_ & ~o.bits_); }
  StateSet& operator&=(StateSet o) { bits_ &= o.bits_; return *this; }
  StateSet& operator|=(StateSet o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const StateSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace fml
