#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ringlab {

/// Index of an element inside a finite ring, group, or module.
using Elem = std::uint16_t;

/// Subset of {0, ..., universe-1}, bit-backed with an element count.
class ElemSet {
public:
  ElemSet() = default;

  explicit ElemSet(int universe)
      : universe_(universe), bits_((static_cast<size_t>(universe) + 63) / 64, 0) {}

  static ElemSet of(int universe, std::initializer_list<int> xs) {
    ElemSet s(universe);
    for (int x : xs) s.insert(static_cast<Elem>(x));
    return s;
  }

  static ElemSet full(int universe) {
    ElemSet s(universe);
    for (int x = 0; x < universe; ++x) s.insert(static_cast<Elem>(x));
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Elem e) const {
    return (bits_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(Elem e) {
    std::uint64_t& word = bits_[static_cast<size_t>(e) >> 6];
    const std::uint64_t mask = std::uint64_t{1} << (e & 63);
    if (!(word & mask)) {
      word |= mask;
      ++count_;
    }
  }

  /// Members in ascending order.
  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(count_));
    for (int e = 0; e < universe_; ++e)
      if (contains(static_cast<Elem>(e))) out.push_back(static_cast<Elem>(e));
    return out;
  }

  bool is_subset_of(const ElemSet& other) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~other.bits_[i]) return false;
    return true;
  }

  ElemSet intersect(const ElemSet& other) const {
    ElemSet out(universe_);
    for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & other.bits_[i];
    out.count_ = 0;
    for (std::uint64_t w : out.bits_) out.count_ += __builtin_popcountll(w);
    return out;
  }

  bool operator==(const ElemSet& other) const {
    return universe_ == other.universe_ && bits_ == other.bits_;
  }
  bool operator!=(const ElemSet& other) const { return !(*this == other); }

  /// Stable key for de-duplication in lattice enumeration.
  const std::vector<std::uint64_t>& words() const { return bits_; }

private:
  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ringlab
