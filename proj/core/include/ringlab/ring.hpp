#pragma once

#include <string>
#include <vector>

#include "ringlab/elem_set.hpp"

namespace ringlab {

/// Raw material for a table-backed ring.
struct RingData {
  int order = 0;
  std::vector<Elem> add;  // order x order, row-major
  std::vector<Elem> mul;  // order x order, row-major
  Elem zero = 0;
  Elem one = 0;
  std::string label;
  std::vector<std::string> element_names;  // optional; defaults to indices
};

/// Finite associative unital ring on element indices 0..order-1.
///
/// Values are immutable after construction and safe to share across
/// threads; every operation is a pure table read.
class FiniteRing {
public:
  enum class Validate { On, Off };

  FiniteRing() = default;

  /// Builds a ring from tables. Structural problems (bad table sizes,
  /// out-of-range entries, a missing additive inverse, zero==one at
  /// order > 1) are always rejected; the exhaustive O(order^3) axiom scan
  /// runs only with Validate::On and can be re-run later via revalidate().
  static FiniteRing make(RingData data, Validate validate = Validate::On);

  int order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const { return add_[static_cast<size_t>(a) * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::string& element_name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& element_names() const { return names_; }

  bool is_commutative() const;

  /// Exhaustive axiom check; throws Error(AxiomViolation) naming the
  /// failing axiom and a witness pair/triple.
  void revalidate() const;

  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  bool same_tables(const FiniteRing& other) const {
    return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ &&
           add_ == other.add_ && mul_ == other.mul_;
  }

private:
  int order_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  Elem zero_ = 0, one_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

/// Z/nZ with the usual tables. Label "Zn".
FiniteRing zmod_ring(int n);

/// Field with q elements for q in {2,3,4,5,7,8,9}. Label "Fq".
FiniteRing galois_field(int q);

/// The one-element ring (zero == one). Label "0".
FiniteRing zero_ring();

}  // namespace ringlab
