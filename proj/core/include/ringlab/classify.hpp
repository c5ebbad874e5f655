#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/config.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

/// The distinguished subsets of one ring, computed once and shared by all
/// predicates. Pure data; safe to reuse across threads.
struct SubsetProfile {
  UnitTable unit_table;
  ElemSet units;
  ElemSet idempotents;
  ElemSet nilpotents;
  ElemSet jacobson;
  ElemSet delta;
  ElemSet center_set;

  static SubsetProfile compute(const FiniteRing& ring);
};

enum class WitnessKind { Delta, Jacobson, Nilpotent, Unit };

/// a = idempotent + part with part drawn from the set named by `kind`.
struct DecompositionWitness {
  Elem element = 0;
  Elem idempotent = 0;
  Elem part = 0;
  WitnessKind kind = WitnessKind::Delta;
  bool commutes = false;
};

/// S-Delta-C element scan: per element, the first commuting
/// idempotent-plus-delta witness in ascending idempotent order.
struct SdcScan {
  bool all = false;                                         // ring-level flag
  ElemSet elements;                                         // elements admitting a witness
  std::vector<std::optional<DecompositionWitness>> witness; // per element
};

SdcScan sdc_elements(const FiniteRing& ring, const SubsetProfile& p);

bool is_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_strongly_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_strongly_delta_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_nil_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_strongly_nil_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_strongly_j_clean(const FiniteRing& ring, const SubsetProfile& p);

/// Exactly one idempotent e with a - e a unit (resp. in Delta), for every a.
bool is_uniquely_clean(const FiniteRing& ring, const SubsetProfile& p);
bool is_uniquely_delta_clean(const FiniteRing& ring, const SubsetProfile& p);

/// 1 + Delta(R) = U(R) as sets.
bool is_delta_u(const FiniteRing& ring, const SubsetProfile& p);

bool is_boolean(const FiniteRing& ring);
bool is_reduced(const SubsetProfile& p);
bool is_abelian(const FiniteRing& ring, const SubsetProfile& p);

/// Nonzero ring whose non-units are closed under addition (equivalent to
/// locality for finite rings). The one-element ring is not local.
bool is_local(const FiniteRing& ring, const SubsetProfile& p);
bool is_semisimple(const FiniteRing& ring, const SubsetProfile& p);
bool is_division(const FiniteRing& ring, const SubsetProfile& p);
bool is_dedekind_finite(const FiniteRing& ring);

/// Nil(R) equals the lower nilradical (= J(R) for finite rings).
bool is_2_primal(const SubsetProfile& p);

/// Every maximal ideal of the given side is two-sided. nullopt when the
/// lattice enumeration exceeds the budget.
std::optional<bool> is_quasi_duo(const FiniteRing& ring, Side side, int budget);

/// For every a in U(R), b in J(R): x -> ax - xb and x -> bx - xa are
/// surjective. Throws Error(NotLocal) unless the ring is local.
bool is_bleached_local(const FiniteRing& ring, const SubsetProfile& p);

/// R/J(R) has exactly two elements (hence is the two-element field).
bool residue_is_f2(const FiniteRing& ring, const SubsetProfile& p);

/// Plain predicate values for one ring; tri-state flags are nullopt when
/// skipped (budget exceeded, or bleached on a non-local ring).
struct Classification {
  bool commutative = false;
  bool boolean_ring = false;
  bool reduced = false;
  bool abelian = false;
  bool local = false;
  bool semisimple = false;
  bool division = false;
  bool clean = false;
  bool strongly_clean = false;
  bool nil_clean = false;
  bool strongly_nil_clean = false;
  bool strongly_j_clean = false;
  bool strongly_delta_clean = false;
  bool uniquely_clean = false;
  bool uniquely_delta_clean = false;
  bool delta_u = false;
  bool dedekind_finite = false;
  bool two_primal = false;
  bool residue_f2 = false;
  bool delta_equals_jacobson = false;
  std::optional<bool> quasi_duo_right;
  std::optional<bool> quasi_duo_left;
  std::optional<bool> bleached;
};

Classification compute_classification(const FiniteRing& ring, const SubsetProfile& p,
                                      const Config& cfg);

/// Stable flag order used by reports, the JSON schema, and `search`.
const std::vector<std::string>& flag_names();

struct FlagValue {
  std::string name;
  std::optional<bool> value;      // nullopt = skipped
  std::string skip_reason;
  std::int64_t micros = 0;
};

/// One flag by name (names from flag_names()); throws
/// Error(UnknownProperty) otherwise.
std::optional<bool> flag_by_name(const Classification& c, const std::string& name);

struct ClassifyOptions {
  bool witnesses = false;
  int ideal_budget = 4096;
};

struct ClassificationReport {
  std::string label;
  int order = 0;
  int units_size = 0, idempotents_size = 0, nilpotents_size = 0;
  int jacobson_size = 0, delta_size = 0, center_size = 0;
  std::vector<FlagValue> flags;
  Classification values;
  std::vector<std::optional<DecompositionWitness>> witnesses;  // if requested
};

/// Runs every predicate, honoring budgets; skipped flags carry a reason
/// instead of aborting the report.
ClassificationReport classify(const FiniteRing& ring, const SubsetProfile& p,
                              const Config& cfg, const ClassifyOptions& opts = {});

}  // namespace ringlab
