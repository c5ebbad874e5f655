#include "ringlab/classify.hpp"

#include <chrono>
#include <functional>

#include "ringlab/error.hpp"

namespace ringlab {

SubsetProfile SubsetProfile::compute(const FiniteRing& ring) {
  SubsetProfile p;
  p.unit_table = ringlab::units(ring);
  p.units = p.unit_table.units;
  p.idempotents = ringlab::idempotents(ring);
  p.nilpotents = ringlab::nilpotents(ring);
  p.jacobson = jacobson_radical(ring, p.unit_table);
  p.delta = delta_set(ring, p.unit_table);
  p.center_set = ringlab::center(ring);
  return p;
}

namespace {

// First commuting witness a = e + part with part in `parts`, idempotents
// scanned in ascending order.
std::optional<DecompositionWitness> find_witness(const FiniteRing& ring, const SubsetProfile& p,
                                                 Elem a, const ElemSet& parts, WitnessKind kind,
                                                 bool require_commute) {
  for (Elem e : p.idempotents.elements()) {
    const Elem d = ring.sub(a, e);
    if (!parts.contains(d)) continue;
    const bool commutes = ring.mul(e, d) == ring.mul(d, e);
    if (require_commute && !commutes) continue;
    return DecompositionWitness{a, e, d, kind, commutes};
  }
  return std::nullopt;
}

bool all_elements_decompose(const FiniteRing& ring, const SubsetProfile& p, const ElemSet& parts,
                            WitnessKind kind, bool require_commute) {
  for (int a = 0; a < ring.order(); ++a)
    if (!find_witness(ring, p, static_cast<Elem>(a), parts, kind, require_commute)) return false;
  return true;
}

// Number of idempotents e with a - e in `parts` (representation count;
// commuting is not part of the uniqueness notions).
int representation_count(const FiniteRing& ring, const SubsetProfile& p, Elem a,
                         const ElemSet& parts) {
  int count = 0;
  for (Elem e : p.idempotents.elements())
    if (parts.contains(ring.sub(a, e))) ++count;
  return count;
}

}  // namespace

SdcScan sdc_elements(const FiniteRing& ring, const SubsetProfile& p) {
  SdcScan scan;
  scan.elements = ElemSet(ring.order());
  scan.witness.resize(static_cast<size_t>(ring.order()));
  scan.all = true;
  for (int a = 0; a < ring.order(); ++a) {
    auto w = find_witness(ring, p, static_cast<Elem>(a), p.delta, WitnessKind::Delta, true);
    if (w)
      scan.elements.insert(static_cast<Elem>(a));
    else
      scan.all = false;
    scan.witness[static_cast<size_t>(a)] = w;
  }
  return scan;
}

bool is_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.units, WitnessKind::Unit, false);
}

bool is_strongly_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.units, WitnessKind::Unit, true);
}

bool is_strongly_delta_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.delta, WitnessKind::Delta, true);
}

bool is_nil_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.nilpotents, WitnessKind::Nilpotent, false);
}

bool is_strongly_nil_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.nilpotents, WitnessKind::Nilpotent, true);
}

bool is_strongly_j_clean(const FiniteRing& ring, const SubsetProfile& p) {
  return all_elements_decompose(ring, p, p.jacobson, WitnessKind::Jacobson, true);
}

bool is_uniquely_clean(const FiniteRing& ring, const SubsetProfile& p) {
  for (int a = 0; a < ring.order(); ++a)
    if (representation_count(ring, p, static_cast<Elem>(a), p.units) != 1) return false;
  return true;
}

bool is_uniquely_delta_clean(const FiniteRing& ring, const SubsetProfile& p) {
  for (int a = 0; a < ring.order(); ++a)
    if (representation_count(ring, p, static_cast<Elem>(a), p.delta) != 1) return false;
  return true;
}

bool is_delta_u(const FiniteRing& ring, const SubsetProfile& p) {
  ElemSet shifted(ring.order());
  for (Elem d : p.delta.elements()) shifted.insert(ring.add(ring.one(), d));
  return shifted == p.units;
}

bool is_boolean(const FiniteRing& ring) {
  for (int a = 0; a < ring.order(); ++a)
    if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(a)) != static_cast<Elem>(a))
      return false;
  return true;
}

bool is_reduced(const SubsetProfile& p) { return p.nilpotents.size() == 1; }

bool is_abelian(const FiniteRing& ring, const SubsetProfile& p) {
  (void)ring;
  return p.idempotents.is_subset_of(p.center_set);
}

bool is_local(const FiniteRing& ring, const SubsetProfile& p) {
  if (ring.order() < 2) return false;
  std::vector<Elem> nonunits;
  for (int a = 0; a < ring.order(); ++a)
    if (!p.units.contains(static_cast<Elem>(a))) nonunits.push_back(static_cast<Elem>(a));
  for (Elem x : nonunits)
    for (Elem y : nonunits)
      if (p.units.contains(ring.add(x, y))) return false;
  return true;
}

bool is_semisimple(const FiniteRing& ring, const SubsetProfile& p) {
  (void)ring;
  return p.jacobson.size() == 1;
}

bool is_division(const FiniteRing& ring, const SubsetProfile& p) {
  return ring.order() >= 2 && p.units.size() == ring.order() - 1;
}

bool is_dedekind_finite(const FiniteRing& ring) {
  for (int a = 0; a < ring.order(); ++a)
    for (int b = 0; b < ring.order(); ++b)
      if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == ring.one() &&
          ring.mul(static_cast<Elem>(b), static_cast<Elem>(a)) != ring.one())
        return false;
  return true;
}

bool is_2_primal(const SubsetProfile& p) { return p.nilpotents == p.jacobson; }

std::optional<bool> is_quasi_duo(const FiniteRing& ring, Side side, int budget) {
  try {
    const IdealLattice lat = ideal_lattice(ring, side, budget);
    for (int idx : lat.maximal)
      if (!is_two_sided_ideal(ring, lat.ideals[static_cast<size_t>(idx)])) return false;
    return true;
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) return std::nullopt;
    throw;
  }
}

bool is_bleached_local(const FiniteRing& ring, const SubsetProfile& p) {
  if (!is_local(ring, p))
    raise(ErrorKind::NotLocal, "'" + ring.label() + "' is not local");
  const int n = ring.order();
  for (Elem a : p.units.elements())
    for (Elem b : p.jacobson.elements()) {
      ElemSet image_ab(n), image_ba(n);
      for (int x = 0; x < n; ++x) {
        const Elem xe = static_cast<Elem>(x);
        image_ab.insert(ring.sub(ring.mul(a, xe), ring.mul(xe, b)));
        image_ba.insert(ring.sub(ring.mul(b, xe), ring.mul(xe, a)));
      }
      if (image_ab.size() != n || image_ba.size() != n) return false;
    }
  return true;
}

bool residue_is_f2(const FiniteRing& ring, const SubsetProfile& p) {
  return ring.order() == 2 * p.jacobson.size();
}

Classification compute_classification(const FiniteRing& ring, const SubsetProfile& p,
                                      const Config& cfg) {
  Classification c;
  c.commutative = ring.is_commutative();
  c.boolean_ring = is_boolean(ring);
  c.reduced = is_reduced(p);
  c.abelian = is_abelian(ring, p);
  c.local = is_local(ring, p);
  c.semisimple = is_semisimple(ring, p);
  c.division = is_division(ring, p);
  c.clean = is_clean(ring, p);
  c.strongly_clean = is_strongly_clean(ring, p);
  c.nil_clean = is_nil_clean(ring, p);
  c.strongly_nil_clean = is_strongly_nil_clean(ring, p);
  c.strongly_j_clean = is_strongly_j_clean(ring, p);
  c.strongly_delta_clean = is_strongly_delta_clean(ring, p);
  c.uniquely_clean = is_uniquely_clean(ring, p);
  c.uniquely_delta_clean = is_uniquely_delta_clean(ring, p);
  c.delta_u = is_delta_u(ring, p);
  c.dedekind_finite = is_dedekind_finite(ring);
  c.two_primal = is_2_primal(p);
  c.residue_f2 = residue_is_f2(ring, p);
  c.delta_equals_jacobson = p.delta == p.jacobson;
  c.quasi_duo_right = is_quasi_duo(ring, Side::Right, cfg.ideal_budget);
  c.quasi_duo_left = is_quasi_duo(ring, Side::Left, cfg.ideal_budget);
  c.bleached = c.local ? std::optional<bool>(is_bleached_local(ring, p)) : std::nullopt;
  return c;
}

const std::vector<std::string>& flag_names() {
  static const std::vector<std::string> names = {
      "commutative",        "boolean",
      "reduced",            "abelian",
      "local",              "semisimple",
      "division",           "clean",
      "strongly_clean",     "nil_clean",
      "strongly_nil_clean", "strongly_j_clean",
      "strongly_delta_clean", "uniquely_clean",
      "uniquely_delta_clean", "delta_u",
      "dedekind_finite",    "two_primal",
      "quasi_duo_right",    "quasi_duo_left",
      "bleached",           "residue_f2",
      "delta_equals_jacobson",
  };
  return names;
}

std::optional<bool> flag_by_name(const Classification& c, const std::string& name) {
  if (name == "commutative") return c.commutative;
  if (name == "boolean") return c.boolean_ring;
  if (name == "reduced") return c.reduced;
  if (name == "abelian") return c.abelian;
  if (name == "local") return c.local;
  if (name == "semisimple") return c.semisimple;
  if (name == "division") return c.division;
  if (name == "clean") return c.clean;
  if (name == "strongly_clean") return c.strongly_clean;
  if (name == "nil_clean") return c.nil_clean;
  if (name == "strongly_nil_clean") return c.strongly_nil_clean;
  if (name == "strongly_j_clean") return c.strongly_j_clean;
  if (name == "strongly_delta_clean") return c.strongly_delta_clean;
  if (name == "uniquely_clean") return c.uniquely_clean;
  if (name == "uniquely_delta_clean") return c.uniquely_delta_clean;
  if (name == "delta_u") return c.delta_u;
  if (name == "dedekind_finite") return c.dedekind_finite;
  if (name == "two_primal") return c.two_primal;
  if (name == "quasi_duo_right") return c.quasi_duo_right;
  if (name == "quasi_duo_left") return c.quasi_duo_left;
  if (name == "bleached") return c.bleached;
  if (name == "residue_f2") return c.residue_f2;
  if (name == "delta_equals_jacobson") return c.delta_equals_jacobson;
  std::string known;
  for (const std::string& n : flag_names()) known += (known.empty() ? "" : ", ") + n;
  raise(ErrorKind::UnknownProperty, "unknown property '" + name + "' (known: " + known + ")");
}

ClassificationReport classify(const FiniteRing& ring, const SubsetProfile& p, const Config& cfg,
                              const ClassifyOptions& opts) {
  ClassificationReport report;
  report.label = ring.label();
  report.order = ring.order();
  report.units_size = p.units.size();
  report.idempotents_size = p.idempotents.size();
  report.nilpotents_size = p.nilpotents.size();
  report.jacobson_size = p.jacobson.size();
  report.delta_size = p.delta.size();
  report.center_size = p.center_set.size();

  Config effective = cfg;
  effective.ideal_budget = opts.ideal_budget;

  using Clock = std::chrono::steady_clock;
  const auto timed = [&](const std::function<std::optional<bool>()>& fn, FlagValue& out) {
    const auto start = Clock::now();
    out.value = fn();
    out.micros =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
  };

  Classification& c = report.values;
  for (const std::string& name : flag_names()) {
    FlagValue fv;
    fv.name = name;
    timed(
        [&]() -> std::optional<bool> {
          if (name == "commutative") return c.commutative = ring.is_commutative();
          if (name == "boolean") return c.boolean_ring = is_boolean(ring);
          if (name == "reduced") return c.reduced = is_reduced(p);
          if (name == "abelian") return c.abelian = is_abelian(ring, p);
          if (name == "local") return c.local = is_local(ring, p);
          if (name == "semisimple") return c.semisimple = is_semisimple(ring, p);
          if (name == "division") return c.division = is_division(ring, p);
          if (name == "clean") return c.clean = is_clean(ring, p);
          if (name == "strongly_clean") return c.strongly_clean = is_strongly_clean(ring, p);
          if (name == "nil_clean") return c.nil_clean = is_nil_clean(ring, p);
          if (name == "strongly_nil_clean")
            return c.strongly_nil_clean = is_strongly_nil_clean(ring, p);
          if (name == "strongly_j_clean") return c.strongly_j_clean = is_strongly_j_clean(ring, p);
          if (name == "strongly_delta_clean")
            return c.strongly_delta_clean = is_strongly_delta_clean(ring, p);
          if (name == "uniquely_clean") return c.uniquely_clean = is_uniquely_clean(ring, p);
          if (name == "uniquely_delta_clean")
            return c.uniquely_delta_clean = is_uniquely_delta_clean(ring, p);
          if (name == "delta_u") return c.delta_u = is_delta_u(ring, p);
          if (name == "dedekind_finite") return c.dedekind_finite = is_dedekind_finite(ring);
          if (name == "two_primal") return c.two_primal = is_2_primal(p);
          if (name == "quasi_duo_right")
            return c.quasi_duo_right = is_quasi_duo(ring, Side::Right, effective.ideal_budget);
          if (name == "quasi_duo_left")
            return c.quasi_duo_left = is_quasi_duo(ring, Side::Left, effective.ideal_budget);
          if (name == "bleached") {
            c.bleached = is_local(ring, p) ? std::optional<bool>(is_bleached_local(ring, p))
                                           : std::nullopt;
            return c.bleached;
          }
          if (name == "residue_f2") return c.residue_f2 = residue_is_f2(ring, p);
          if (name == "delta_equals_jacobson")
            return c.delta_equals_jacobson = (p.delta == p.jacobson);
          raise(ErrorKind::UnknownProperty, "unregistered flag '" + name + "'");
        },
        fv);
    if (!fv.value) {
      fv.skip_reason = (name == "bleached") ? "not local" : "ideal budget exceeded";
    }
    report.flags.push_back(std::move(fv));
  }

  if (opts.witnesses) report.witnesses = sdc_elements(ring, p).witness;
  return report;
}

}  // namespace ringlab
