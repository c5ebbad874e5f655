#include "ringlab/theorems.hpp"

#include <atomic>
#include <functional>
#include <thread>
#include <utility>

#include "ringlab/constructions.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

bool glob_match(std::string_view pattern, std::string_view text) {
  size_t p = 0, t = 0;
  size_t star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

namespace {

// Outcome of one check on one corpus ring. `applicable` lets a check bow
// out late (e.g. an ideal-lattice budget overrun) without failing.
struct CheckOutcome {
  bool applicable = true;
  std::optional<std::string> failure;

  static CheckOutcome ok() { return {}; }
  static CheckOutcome skip() { return {false, std::nullopt}; }
  static CheckOutcome fail(std::string witness) { return {true, std::move(witness)}; }
};

struct Case {
  std::string id;
  std::string statement;
  std::function<bool(const CorpusEntry&, const Corpus&)> in_scope;
  std::function<CheckOutcome(const CorpusEntry&, const Corpus&)> check;
};

std::string describe_elem(const FiniteRing& ring, Elem x) {
  return ring.element_name(x) + "(#" + std::to_string(x) + ")";
}

std::string memberships(const CorpusEntry& entry, Elem x) {
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  const SubsetProfile& p = entry.profile;
  return std::string("U=") + yn(p.units.contains(x)) + " Id=" + yn(p.idempotents.contains(x)) +
         " Nil=" + yn(p.nilpotents.contains(x)) + " J=" + yn(p.jacobson.contains(x)) +
         " Delta=" + yn(p.delta.contains(x));
}

std::string fail_text(const CorpusEntry& entry, const std::string& violated,
                      std::vector<std::pair<std::string, Elem>> elems = {}) {
  std::string out = "ring=" + entry.label + "; violated: " + violated;
  if (!elems.empty()) {
    out += "; elements:";
    for (const auto& [role, x] : elems) out += " " + role + "=" + describe_elem(entry.ring, x);
    out += "; memberships:";
    for (const auto& [role, x] : elems) out += " " + role + "[" + memberships(entry, x) + "]";
  }
  return out;
}

std::string onoff(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// shared sub-computations

bool sdc_of(const FiniteRing& ring) {
  return is_strongly_delta_clean(ring, SubsetProfile::compute(ring));
}

ElemSet closure_under_add(const FiniteRing& ring, ElemSet s) {
  bool changed = true;
  while (changed) {
    changed = false;
    const auto members = s.elements();
    for (Elem x : members)
      for (Elem y : members) {
        const Elem sum = ring.add(x, y);
        if (!s.contains(sum)) {
          s.insert(sum);
          changed = true;
        }
      }
  }
  return s;
}

// A set ideal I (given as a set) is nilpotent iff the chain I, I^2, ...
// reaches {0}; the chain strictly descends for finite rings.
bool set_ideal_nilpotent(const FiniteRing& ring, const ElemSet& ideal) {
  ElemSet power = ideal;
  for (int step = 0; step < ring.order() + 1; ++step) {
    if (power.size() == 1 && power.contains(ring.zero())) return true;
    ElemSet next(ring.order());
    next.insert(ring.zero());
    for (Elem x : power.elements())
      for (Elem j : ideal.elements()) next.insert(ring.mul(x, j));
    next = closure_under_add(ring, next);
    if (next == power) return false;
    power = next;
  }
  return false;
}

std::optional<IdealLattice> try_lattice(const FiniteRing& ring, Side side, int budget) {
  try {
    return ideal_lattice(ring, side, budget);
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::BudgetExceeded) return std::nullopt;
    throw;
  }
}

bool morita_traces_in_radicals(const MoritaRing& mr) {
  const MoritaContext& c = mr.ctx;
  const ElemSet ja = jacobson_radical(c.a_ring);
  const ElemSet jb = jacobson_radical(c.b_ring);
  for (Elem v : c.phi)
    if (!ja.contains(v)) return false;
  for (Elem v : c.psi)
    if (!jb.contains(v)) return false;
  return true;
}

// Surjectivity of x -> a.x - x.b on an (A,B)-bimodule.
bool twist_surjective(const Bimodule& m, Elem a, Elem b) {
  ElemSet image(m.order);
  for (int x = 0; x < m.order; ++x) {
    const Elem xe = static_cast<Elem>(x);
    image.insert(m.sub_op(m.lact(a, xe), m.ract(xe, b)));
  }
  return image.size() == m.order;
}

// Surjectivity of y -> y.a - b.y on a (B,A)-bimodule.
bool twist_surjective_rev(const Bimodule& n, Elem a, Elem b) {
  ElemSet image(n.order);
  for (int y = 0; y < n.order; ++y) {
    const Elem ye = static_cast<Elem>(y);
    image.insert(n.sub_op(n.ract(ye, a), n.lact(b, ye)));
  }
  return image.size() == n.order;
}

int triangular_cells(int n) { return n * (n + 1) / 2; }

bool triangular_feasible(const FiniteRing& base, int n, const Config& cfg) {
  long long order = 1;
  for (int i = 0; i < triangular_cells(n); ++i) {
    order *= base.order();
    if (order > cfg.max_order) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// the registry

std::vector<Case> build_registry() {
  std::vector<Case> cases;
  const auto all = [](const CorpusEntry&, const Corpus&) { return true; };
  const auto sdc_scope = [](const CorpusEntry& e, const Corpus&) {
    return e.flags.strongly_delta_clean;
  };

  cases.push_back(
      {"units-plus-delta", "U(R) + Delta(R) = U(R)", all,
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.profile.delta.contains(E.ring.zero()))
           return CheckOutcome::fail(fail_text(E, "0 must lie in Delta(R)"));
         for (Elem u : E.profile.units.elements())
           for (Elem d : E.profile.delta.elements())
             if (!E.profile.units.contains(E.ring.add(u, d)))
               return CheckOutcome::fail(
                   fail_text(E, "u + d is not a unit", {{"u", u}, {"d", d}}));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"product-sdc-iff-factors",
       "a direct product is strongly Delta-clean iff every factor is",
       [](const CorpusEntry& E, const Corpus&) { return E.meta.product.has_value(); },
       [](const CorpusEntry& E, const Corpus&) {
         bool factors_sdc = true;
         for (const FiniteRing& f : E.meta.product->factors) factors_sdc = factors_sdc && sdc_of(f);
         if (E.flags.strongly_delta_clean != factors_sdc)
           return CheckOutcome::fail(fail_text(
               E, "product flag " + onoff(E.flags.strongly_delta_clean) +
                      " but conjunction over factors is " + onoff(factors_sdc)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"quotient-by-radical-ideal-sdc",
       "if R is strongly Delta-clean and I is a two-sided ideal inside J(R), then R/I is "
       "strongly Delta-clean",
       sdc_scope,
       [](const CorpusEntry& E, const Corpus& corpus) {
         const auto lat = try_lattice(E.ring, Side::TwoSided, corpus.config.ideal_budget);
         if (!lat) return CheckOutcome::skip();
         for (const ElemSet& ideal : lat->ideals) {
           if (!ideal.is_subset_of(E.profile.jacobson)) continue;
           const QuotientRing q = quotient_ring(E.ring, ideal, E.label + "/I");
           if (!sdc_of(q.ring))
             return CheckOutcome::fail(fail_text(
                 E, "R/I not strongly Delta-clean for an ideal of size " +
                        std::to_string(ideal.size()) + " inside J(R)"));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back({"sdc-implies-strongly-clean",
                   "every strongly Delta-clean ring is strongly clean", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     if (!is_strongly_clean(E.ring, E.profile))
                       return CheckOutcome::fail(fail_text(E, "ring is not strongly clean"));
                     return CheckOutcome::ok();
                   }});

  cases.push_back(
      {"delta-elements-are-sdc", "every element of Delta(R) is a strongly Delta-clean element",
       all,
       [](const CorpusEntry& E, const Corpus&) {
         const SdcScan scan = sdc_elements(E.ring, E.profile);
         for (Elem d : E.profile.delta.elements())
           if (!scan.elements.contains(d))
             return CheckOutcome::fail(
                 fail_text(E, "element of Delta(R) admits no witness", {{"d", d}}));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"unit-sdc-iff-unit-shift-in-delta",
       "a unit u is a strongly Delta-clean element iff u - 1 lies in Delta(R)", all,
       [](const CorpusEntry& E, const Corpus&) {
         const SdcScan scan = sdc_elements(E.ring, E.profile);
         for (Elem u : E.profile.units.elements()) {
           const bool lhs = scan.elements.contains(u);
           const bool rhs = E.profile.delta.contains(E.ring.sub(u, E.ring.one()));
           if (lhs != rhs)
             return CheckOutcome::fail(fail_text(
                 E, "unit witness " + onoff(lhs) + " but (u-1) in Delta is " + onoff(rhs),
                 {{"u", u}}));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-elements-closed-under-one-minus",
       "a is a strongly Delta-clean element iff 1 - a is", all,
       [](const CorpusEntry& E, const Corpus&) {
         const SdcScan scan = sdc_elements(E.ring, E.profile);
         for (int a = 0; a < E.ring.order(); ++a) {
           const Elem ae = static_cast<Elem>(a);
           const Elem complement = E.ring.sub(E.ring.one(), ae);
           if (scan.elements.contains(ae) != scan.elements.contains(complement))
             return CheckOutcome::fail(
                 fail_text(E, "witness existence differs for a and 1-a",
                           {{"a", ae}, {"one_minus_a", complement}}));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"twice-idempotent-times-delta",
       "2ed lies in Delta(R) for every idempotent e and every d in Delta(R)", all,
       [](const CorpusEntry& E, const Corpus&) {
         for (Elem e : E.profile.idempotents.elements())
           for (Elem d : E.profile.delta.elements()) {
             const Elem ed = E.ring.mul(e, d);
             if (!E.profile.delta.contains(E.ring.add(ed, ed)))
               return CheckOutcome::fail(
                   fail_text(E, "2ed escapes Delta(R)", {{"e", e}, {"d", d}}));
           }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-square-in-delta-descends",
       "in a strongly Delta-clean ring, a^2 in Delta(R) implies a in Delta(R)", sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         for (int a = 0; a < E.ring.order(); ++a) {
           const Elem ae = static_cast<Elem>(a);
           if (E.profile.delta.contains(E.ring.mul(ae, ae)) && !E.profile.delta.contains(ae))
             return CheckOutcome::fail(
                 fail_text(E, "a^2 in Delta(R) but a outside", {{"a", ae}}));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back({"sdc-nilpotents-in-delta",
                   "in a strongly Delta-clean ring, Nil(R) is contained in Delta(R)", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     for (Elem x : E.profile.nilpotents.elements())
                       if (!E.profile.delta.contains(x))
                         return CheckOutcome::fail(
                             fail_text(E, "nilpotent outside Delta(R)", {{"x", x}}));
                     return CheckOutcome::ok();
                   }});

  cases.push_back(
      {"sdc-idempotent-commutators-in-delta",
       "in a strongly Delta-clean ring, er - re lies in Delta(R) for all r and idempotent e",
       sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         for (Elem e : E.profile.idempotents.elements())
           for (int r = 0; r < E.ring.order(); ++r) {
             const Elem re = static_cast<Elem>(r);
             if (!E.profile.delta.contains(E.ring.sub(E.ring.mul(e, re), E.ring.mul(re, e))))
               return CheckOutcome::fail(
                   fail_text(E, "er - re escapes Delta(R)", {{"e", e}, {"r", re}}));
           }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-element-minus-square-in-delta",
       "in a strongly Delta-clean ring, a - a^2 lies in Delta(R) for every a", sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         for (int a = 0; a < E.ring.order(); ++a) {
           const Elem ae = static_cast<Elem>(a);
           if (!E.profile.delta.contains(E.ring.sub(ae, E.ring.mul(ae, ae))))
             return CheckOutcome::fail(fail_text(E, "a - a^2 escapes Delta(R)", {{"a", ae}}));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back({"sdc-radical-quotient-reduced",
                   "for a strongly Delta-clean ring, R/J(R) is reduced", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     const QuotientRing q =
                         quotient_ring(E.ring, E.profile.jacobson, E.label + "/J");
                     if (nilpotents(q.ring).size() != 1)
                       return CheckOutcome::fail(
                           fail_text(E, "R/J(R) has a nonzero nilpotent element"));
                     return CheckOutcome::ok();
                   }});

  cases.push_back({"sdc-two-in-radical", "in a strongly Delta-clean ring, 2 lies in J(R)",
                   sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     const Elem two = E.ring.add(E.ring.one(), E.ring.one());
                     if (!E.profile.jacobson.contains(two))
                       return CheckOutcome::fail(
                           fail_text(E, "1 + 1 lies outside J(R)", {{"two", two}}));
                     return CheckOutcome::ok();
                   }});

  cases.push_back({"sdc-implies-delta-u",
                   "every strongly Delta-clean ring satisfies 1 + Delta(R) = U(R)", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     if (!is_delta_u(E.ring, E.profile))
                       return CheckOutcome::fail(fail_text(E, "1 + Delta(R) differs from U(R)"));
                     return CheckOutcome::ok();
                   }});

  cases.push_back(
      {"sdc-annihilators-contract-to-idempotent",
       "for any strongly Delta-clean representation a = e + d, ann_l(a) is contained in "
       "ann_l(e) and ann_r(a) in ann_r(e)",
       sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         const int n = E.ring.order();
         std::vector<std::optional<ElemSet>> annl(static_cast<size_t>(n)),
             annr(static_cast<size_t>(n));
         const auto left = [&](Elem x) -> const ElemSet& {
           auto& slot = annl[static_cast<size_t>(x)];
           if (!slot) slot = left_annihilator(E.ring, x);
           return *slot;
         };
         const auto right = [&](Elem x) -> const ElemSet& {
           auto& slot = annr[static_cast<size_t>(x)];
           if (!slot) slot = right_annihilator(E.ring, x);
           return *slot;
         };
         for (Elem e : E.profile.idempotents.elements())
           for (int a = 0; a < n; ++a) {
             const Elem ae = static_cast<Elem>(a);
             const Elem d = E.ring.sub(ae, e);
             if (!E.profile.delta.contains(d)) continue;
             if (E.ring.mul(e, d) != E.ring.mul(d, e)) continue;
             if (!left(ae).is_subset_of(left(e)))
               return CheckOutcome::fail(
                   fail_text(E, "ann_l(a) escapes ann_l(e)", {{"a", ae}, {"e", e}}));
             if (!right(ae).is_subset_of(right(e)))
               return CheckOutcome::fail(
                   fail_text(E, "ann_r(a) escapes ann_r(e)", {{"a", ae}, {"e", e}}));
           }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"corner-sdc-elements-descend",
       "if a in eRe is a strongly Delta-clean element of R, then a is one of eRe", sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         const SdcScan ring_scan = sdc_elements(E.ring, E.profile);
         for (Elem e : E.profile.idempotents.elements()) {
           const CornerRing corner = corner_ring(E.ring, e);
           const SdcScan corner_scan =
               sdc_elements(corner.ring, SubsetProfile::compute(corner.ring));
           for (size_t i = 0; i < corner.to_base.size(); ++i) {
             const Elem parent = corner.to_base[i];
             if (ring_scan.elements.contains(parent) &&
                 !corner_scan.elements.contains(static_cast<Elem>(i)))
               return CheckOutcome::fail(fail_text(
                   E, "corner element loses its witness inside eRe", {{"e", e}, {"a", parent}}));
           }
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"corner-rings-inherit-sdc",
       "if R is strongly Delta-clean then so is eRe for every idempotent e", sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         for (Elem e : E.profile.idempotents.elements()) {
           const CornerRing corner = corner_ring(E.ring, e);
           if (!sdc_of(corner.ring))
             return CheckOutcome::fail(
                 fail_text(E, "corner ring eRe is not strongly Delta-clean", {{"e", e}}));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"division-sdc-iff-two-elements",
       "a division ring is strongly Delta-clean iff it has exactly two elements",
       [](const CorpusEntry& E, const Corpus&) { return E.flags.division; },
       [](const CorpusEntry& E, const Corpus&) {
         const bool rhs = E.ring.order() == 2;
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(
               fail_text(E, "flag " + onoff(E.flags.strongly_delta_clean) + " but order is " +
                                std::to_string(E.ring.order())));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"local-sdc-iff-residue-order-two",
       "a local ring is strongly Delta-clean iff R/J(R) has order 2",
       [](const CorpusEntry& E, const Corpus&) { return E.flags.local; },
       [](const CorpusEntry& E, const Corpus&) {
         const bool rhs = E.ring.order() == 2 * E.profile.jacobson.size();
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "flag " + onoff(E.flags.strongly_delta_clean) + " but |R|/|J(R)| = " +
                      std::to_string(E.ring.order() / E.profile.jacobson.size())));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"semisimple-sdc-iff-boolean",
       "a semisimple ring is strongly Delta-clean iff it is boolean",
       [](const CorpusEntry& E, const Corpus&) { return E.flags.semisimple; },
       [](const CorpusEntry& E, const Corpus&) {
         if (E.flags.strongly_delta_clean != is_boolean(E.ring))
           return CheckOutcome::fail(fail_text(
               E, "flag " + onoff(E.flags.strongly_delta_clean) + " but boolean is " +
                      onoff(is_boolean(E.ring))));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-radical-quotient-two-elementary",
       "for a strongly Delta-clean ring, R/J(R) is boolean and semisimple", sdc_scope,
       [](const CorpusEntry& E, const Corpus&) {
         const QuotientRing q = quotient_ring(E.ring, E.profile.jacobson, E.label + "/J");
         const SubsetProfile qp = SubsetProfile::compute(q.ring);
         if (!is_boolean(q.ring))
           return CheckOutcome::fail(fail_text(E, "R/J(R) is not boolean"));
         if (!is_semisimple(q.ring, qp))
           return CheckOutcome::fail(fail_text(E, "R/J(R) has a nonzero radical"));
         return CheckOutcome::ok();
       }});

  cases.push_back({"sdc-implies-dedekind-finite",
                   "every strongly Delta-clean ring is Dedekind-finite", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     if (!is_dedekind_finite(E.ring))
                       return CheckOutcome::fail(fail_text(E, "one-sided inverse found"));
                     return CheckOutcome::ok();
                   }});

  cases.push_back(
      {"sdc-iff-strongly-clean-and-delta-is-one-minus-units",
       "R is strongly Delta-clean iff R is strongly clean and Delta(R) = { x : 1 - x is a "
       "unit }",
       all,
       [](const CorpusEntry& E, const Corpus&) {
         ElemSet one_minus_unit(E.ring.order());
         for (int x = 0; x < E.ring.order(); ++x)
           if (E.profile.units.contains(E.ring.sub(E.ring.one(), static_cast<Elem>(x))))
             one_minus_unit.insert(static_cast<Elem>(x));
         const bool rhs =
             is_strongly_clean(E.ring, E.profile) && E.profile.delta == one_minus_unit;
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "flag " + onoff(E.flags.strongly_delta_clean) +
                      " but strongly-clean-and-set-form gives " + onoff(rhs) + " (|Delta|=" +
                      std::to_string(E.profile.delta.size()) + ", |{x : 1-x unit}|=" +
                      std::to_string(one_minus_unit.size()) + ")"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"uniquely-clean-iff-sdc-abelian",
       "R is uniquely clean iff R is strongly Delta-clean and every idempotent is central",
       all,
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = is_uniquely_clean(E.ring, E.profile);
         const bool rhs = E.flags.strongly_delta_clean && is_abelian(E.ring, E.profile);
         if (lhs != rhs)
           return CheckOutcome::fail(fail_text(
               E, "uniquely-clean count gives " + onoff(lhs) + " but sdc+abelian gives " +
                      onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"uniquely-delta-clean-has-central-idempotents",
       "in a uniquely Delta-clean ring every idempotent is central",
       [](const CorpusEntry& E, const Corpus&) { return E.flags.uniquely_delta_clean; },
       [](const CorpusEntry& E, const Corpus&) {
         for (Elem e : E.profile.idempotents.elements())
           if (!E.profile.center_set.contains(e))
             return CheckOutcome::fail(fail_text(E, "non-central idempotent", {{"e", e}}));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"uniquely-delta-clean-iff-sdc-abelian",
       "R is uniquely Delta-clean iff R is strongly Delta-clean and every idempotent is "
       "central",
       all,
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = is_uniquely_delta_clean(E.ring, E.profile);
         const bool rhs = E.flags.strongly_delta_clean && is_abelian(E.ring, E.profile);
         if (lhs != rhs)
           return CheckOutcome::fail(fail_text(
               E, "uniquely-Delta-clean count gives " + onoff(lhs) + " but sdc+abelian gives " +
                      onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"uniquely-delta-clean-iff-uniquely-clean",
       "R is uniquely Delta-clean iff R is uniquely clean", all,
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = is_uniquely_delta_clean(E.ring, E.profile);
         const bool rhs = is_uniquely_clean(E.ring, E.profile);
         if (lhs != rhs)
           return CheckOutcome::fail(fail_text(
               E, "counts disagree: uniquely-Delta-clean " + onoff(lhs) + ", uniquely clean " +
                      onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-local-iff-only-trivial-idempotents",
       "a strongly Delta-clean ring is local iff its only idempotents are 0 and 1",
       [](const CorpusEntry& E, const Corpus&) {
         return E.flags.strongly_delta_clean && E.ring.order() >= 2;
       },
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = is_local(E.ring, E.profile);
         const bool rhs = E.profile.idempotents.size() == 2;
         if (lhs != rhs)
           return CheckOutcome::fail(fail_text(
               E, "local is " + onoff(lhs) + " but idempotent count is " +
                      std::to_string(E.profile.idempotents.size())));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"sdc-with-zero-radical-iff-boolean",
       "R is strongly Delta-clean with J(R) = 0 iff R is boolean", all,
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = E.flags.strongly_delta_clean && E.profile.jacobson.size() == 1;
         const bool rhs = is_boolean(E.ring);
         if (lhs != rhs)
           return CheckOutcome::fail(
               fail_text(E, "sdc-with-J=0 is " + onoff(lhs) + " but boolean is " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back({"sdc-radical-quotient-boolean",
                   "for a strongly Delta-clean ring, R/J(R) is boolean", sdc_scope,
                   [](const CorpusEntry& E, const Corpus&) {
                     const QuotientRing q =
                         quotient_ring(E.ring, E.profile.jacobson, E.label + "/J");
                     if (!is_boolean(q.ring))
                       return CheckOutcome::fail(fail_text(E, "R/J(R) is not boolean"));
                     return CheckOutcome::ok();
                   }});

  cases.push_back(
      {"sdc-implies-quasi-duo",
       "every strongly Delta-clean ring is right and left quasi-duo", sdc_scope,
       [](const CorpusEntry& E, const Corpus& corpus) {
         const auto right = is_quasi_duo(E.ring, Side::Right, corpus.config.ideal_budget);
         const auto left = is_quasi_duo(E.ring, Side::Left, corpus.config.ideal_budget);
         if (!right || !left) return CheckOutcome::skip();
         if (!*right)
           return CheckOutcome::fail(fail_text(E, "a maximal right ideal is not two-sided"));
         if (!*left)
           return CheckOutcome::fail(fail_text(E, "a maximal left ideal is not two-sided"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"strongly-nil-clean-iff-sdc-with-nil-delta",
       "R is strongly nil-clean iff R is strongly Delta-clean and Delta(R) is contained in "
       "Nil(R)",
       all,
       [](const CorpusEntry& E, const Corpus&) {
         const bool lhs = is_strongly_nil_clean(E.ring, E.profile);
         const bool rhs = E.flags.strongly_delta_clean &&
                          E.profile.delta.is_subset_of(E.profile.nilpotents);
         if (lhs != rhs)
           return CheckOutcome::fail(fail_text(
               E, "strongly nil-clean is " + onoff(lhs) + " but sdc-with-nil-Delta is " +
                      onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"morita-context-radical-blocks",
       "for a Morita context ring with MN inside J(A) and NM inside J(B): J, U and Delta "
       "are the block sets over J/U/Delta of the corners",
       [](const CorpusEntry& E, const Corpus&) {
         return E.meta.morita && morita_traces_in_radicals(*E.meta.morita);
       },
       [](const CorpusEntry& E, const Corpus&) {
         const MoritaRing& mr = *E.meta.morita;
         const SubsetProfile pa = SubsetProfile::compute(mr.ctx.a_ring);
         const SubsetProfile pb = SubsetProfile::compute(mr.ctx.b_ring);
         ElemSet expect_j(E.ring.order()), expect_u(E.ring.order()), expect_d(E.ring.order());
         for (int x = 0; x < E.ring.order(); ++x) {
           const auto d = mr.decode(static_cast<Elem>(x));
           if (pa.jacobson.contains(d[0]) && pb.jacobson.contains(d[3]))
             expect_j.insert(static_cast<Elem>(x));
           if (pa.units.contains(d[0]) && pb.units.contains(d[3]))
             expect_u.insert(static_cast<Elem>(x));
           if (pa.delta.contains(d[0]) && pb.delta.contains(d[3]))
             expect_d.insert(static_cast<Elem>(x));
         }
         if (E.profile.jacobson != expect_j)
           return CheckOutcome::fail(fail_text(E, "J(R) differs from its block form"));
         if (E.profile.units != expect_u)
           return CheckOutcome::fail(fail_text(E, "U(R) differs from its block form"));
         if (E.profile.delta != expect_d)
           return CheckOutcome::fail(fail_text(E, "Delta(R) differs from its block form"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"trivial-context-commutative-components-sdc",
       "for a trivial Morita context over one commutative ring, R is strongly Delta-clean "
       "iff both corners are",
       [](const CorpusEntry& E, const Corpus&) {
         return E.meta.morita && E.meta.morita->ctx.trivial() &&
                E.meta.morita->ctx.a_ring.same_tables(E.meta.morita->ctx.b_ring) &&
                E.meta.morita->ctx.a_ring.is_commutative();
       },
       [](const CorpusEntry& E, const Corpus&) {
         const MoritaRing& mr = *E.meta.morita;
         const bool rhs = sdc_of(mr.ctx.a_ring) && sdc_of(mr.ctx.b_ring);
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "context flag " + onoff(E.flags.strongly_delta_clean) +
                      " but corner conjunction is " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"commutative-triangular-tower-equivalence",
       "for a commutative ring, strongly Delta-clean, uniquely clean, and strong "
       "Delta-cleanness of each feasible T_n(R) (n <= 3) are equivalent",
       [](const CorpusEntry& E, const Corpus&) { return E.flags.commutative; },
       [](const CorpusEntry& E, const Corpus& corpus) {
         const bool sdc = E.flags.strongly_delta_clean;
         const bool uc = is_uniquely_clean(E.ring, E.profile);
         if (uc != sdc)
           return CheckOutcome::fail(
               fail_text(E, "uniquely clean is " + onoff(uc) + " but sdc is " + onoff(sdc)));
         for (int n = 2; n <= 3; ++n) {
           if (!triangular_feasible(E.ring, n, corpus.config)) continue;
           const TriangularRing t = upper_triangular_ring(E.ring, n, corpus.config);
           const bool tn_sdc = sdc_of(t.ring);
           if (tn_sdc != sdc)
             return CheckOutcome::fail(fail_text(
                 E, "T" + std::to_string(n) + "(R) sdc is " + onoff(tn_sdc) +
                        " but R sdc is " + onoff(sdc)));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"local-trivial-context-criterion",
       "a trivial Morita context over local corners is strongly Delta-clean iff both "
       "residue fields have order 2 and ax - xb (resp. ya - by) is surjective on M (resp. "
       "N) for every unit a and radical b",
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.meta.morita || !E.meta.morita->ctx.trivial()) return false;
         const MoritaContext& c = E.meta.morita->ctx;
         return is_local(c.a_ring, SubsetProfile::compute(c.a_ring)) &&
                is_local(c.b_ring, SubsetProfile::compute(c.b_ring));
       },
       [](const CorpusEntry& E, const Corpus&) {
         const MoritaContext& c = E.meta.morita->ctx;
         const SubsetProfile pa = SubsetProfile::compute(c.a_ring);
         const SubsetProfile pb = SubsetProfile::compute(c.b_ring);
         bool rhs = residue_is_f2(c.a_ring, pa) && residue_is_f2(c.b_ring, pb);
         for (Elem a : pa.units.elements()) {
           if (!rhs) break;
           for (Elem b : pb.jacobson.elements()) {
             if (!twist_surjective(c.m, a, b) || !twist_surjective_rev(c.n, a, b)) {
               rhs = false;
               break;
             }
           }
         }
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "context flag " + onoff(E.flags.strongly_delta_clean) +
                      " but residue/surjectivity criterion gives " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"triangular-over-local-criterion",
       "for local R and n in {2,3}, T_n(R) is strongly Delta-clean iff R is bleached with "
       "residue field of order 2",
       [](const CorpusEntry& E, const Corpus& corpus) {
         return E.flags.local && triangular_feasible(E.ring, 2, corpus.config);
       },
       [](const CorpusEntry& E, const Corpus& corpus) {
         const bool rhs = is_bleached_local(E.ring, E.profile) &&
                          E.ring.order() == 2 * E.profile.jacobson.size();
         for (int n = 2; n <= 3; ++n) {
           if (!triangular_feasible(E.ring, n, corpus.config)) continue;
           const TriangularRing t = upper_triangular_ring(E.ring, n, corpus.config);
           const bool lhs = sdc_of(t.ring);
           if (lhs != rhs)
             return CheckOutcome::fail(fail_text(
                 E, "T" + std::to_string(n) + "(R) sdc is " + onoff(lhs) +
                        " but bleached-with-residue-2 gives " + onoff(rhs)));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"triangular-over-commutative-local-criterion",
       "for commutative local R and n in {2,3}, T_n(R) is strongly Delta-clean iff R/J(R) "
       "has order 2",
       [](const CorpusEntry& E, const Corpus& corpus) {
         return E.flags.commutative && E.flags.local &&
                triangular_feasible(E.ring, 2, corpus.config);
       },
       [](const CorpusEntry& E, const Corpus& corpus) {
         const bool rhs = E.ring.order() == 2 * E.profile.jacobson.size();
         for (int n = 2; n <= 3; ++n) {
           if (!triangular_feasible(E.ring, n, corpus.config)) continue;
           const TriangularRing t = upper_triangular_ring(E.ring, n, corpus.config);
           const bool lhs = sdc_of(t.ring);
           if (lhs != rhs)
             return CheckOutcome::fail(fail_text(
                 E, "T" + std::to_string(n) + "(R) sdc is " + onoff(lhs) +
                        " but residue criterion gives " + onoff(rhs)));
         }
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"trivial-context-general-criterion",
       "a trivial Morita context is strongly Delta-clean iff every (a, b, m, n) admits "
       "idempotents e, f and x, y with em - mf = ax - xb, ex + xf = x, a - e in Delta(A), "
       "ae = ea, and the symmetric conditions on the N side",
       [](const CorpusEntry& E, const Corpus&) {
         return E.meta.morita && E.meta.morita->ctx.trivial();
       },
       [](const CorpusEntry& E, const Corpus&) {
         const MoritaContext& c = E.meta.morita->ctx;
         const SubsetProfile pa = SubsetProfile::compute(c.a_ring);
         const SubsetProfile pb = SubsetProfile::compute(c.b_ring);
         const auto ids_a = pa.idempotents.elements();
         const auto ids_b = pb.idempotents.elements();

         bool rhs = true;
         for (int ai = 0; ai < c.a_ring.order() && rhs; ++ai)
           for (int bi = 0; bi < c.b_ring.order() && rhs; ++bi)
             for (int mi = 0; mi < c.m.order && rhs; ++mi)
               for (int ni = 0; ni < c.n.order && rhs; ++ni) {
                 const Elem a = static_cast<Elem>(ai), b = static_cast<Elem>(bi);
                 const Elem m = static_cast<Elem>(mi), n = static_cast<Elem>(ni);
                 bool found = false;
                 for (Elem e : ids_a) {
                   if (!pa.delta.contains(c.a_ring.sub(a, e))) continue;
                   if (c.a_ring.mul(a, e) != c.a_ring.mul(e, a)) continue;
                   for (Elem f : ids_b) {
                     if (!pb.delta.contains(c.b_ring.sub(b, f))) continue;
                     if (c.b_ring.mul(b, f) != c.b_ring.mul(f, b)) continue;
                     for (int xi = 0; xi < c.m.order && !found; ++xi) {
                       const Elem x = static_cast<Elem>(xi);
                       if (c.m.sub_op(c.m.lact(e, m), c.m.ract(m, f)) !=
                           c.m.sub_op(c.m.lact(a, x), c.m.ract(x, b)))
                         continue;
                       if (c.m.add_op(c.m.lact(e, x), c.m.ract(x, f)) != x) continue;
                       for (int yi = 0; yi < c.n.order && !found; ++yi) {
                         const Elem y = static_cast<Elem>(yi);
                         if (c.n.sub_op(c.n.ract(n, e), c.n.lact(f, n)) !=
                             c.n.sub_op(c.n.ract(y, a), c.n.lact(b, y)))
                           continue;
                         if (c.n.add_op(c.n.lact(f, y), c.n.ract(y, e)) != y) continue;
                         found = true;
                       }
                     }
                     if (found) break;
                   }
                   if (found) break;
                 }
                 if (!found) rhs = false;
               }
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "context flag " + onoff(E.flags.strongly_delta_clean) +
                      " but elementwise criterion gives " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"morita-nilpotent-radical-criterion",
       "when J(A) and J(B) are nilpotent, the Morita context ring is strongly Delta-clean "
       "iff both corners are and MN lies in J(A), NM in J(B)",
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.meta.morita) return false;
         const MoritaContext& c = E.meta.morita->ctx;
         return set_ideal_nilpotent(c.a_ring, jacobson_radical(c.a_ring)) &&
                set_ideal_nilpotent(c.b_ring, jacobson_radical(c.b_ring));
       },
       [](const CorpusEntry& E, const Corpus&) {
         const MoritaRing& mr = *E.meta.morita;
         const bool rhs = sdc_of(mr.ctx.a_ring) && sdc_of(mr.ctx.b_ring) &&
                          morita_traces_in_radicals(mr);
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "context flag " + onoff(E.flags.strongly_delta_clean) +
                      " but corner/trace criterion gives " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"trivial-extension-unit-and-delta-blocks",
       "U(T(R,M)) = T(U(R), M) and Delta(T(R,M)) = T(Delta(R), M)",
       [](const CorpusEntry& E, const Corpus&) { return E.meta.trivial_ext.has_value(); },
       [](const CorpusEntry& E, const Corpus&) {
         const TrivialExtensionRing& te = *E.meta.trivial_ext;
         const SubsetProfile base_p = SubsetProfile::compute(te.base);
         ElemSet expect_u(E.ring.order()), expect_d(E.ring.order());
         for (int x = 0; x < E.ring.order(); ++x) {
           const Elem r = te.decode(static_cast<Elem>(x)).first;
           if (base_p.units.contains(r)) expect_u.insert(static_cast<Elem>(x));
           if (base_p.delta.contains(r)) expect_d.insert(static_cast<Elem>(x));
         }
         if (E.profile.units != expect_u)
           return CheckOutcome::fail(fail_text(E, "U(T(R,M)) differs from T(U(R), M)"));
         if (E.profile.delta != expect_d)
           return CheckOutcome::fail(fail_text(E, "Delta(T(R,M)) differs from T(Delta(R), M)"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"trivial-extension-over-connected-criterion",
       "for R with only trivial idempotents, T(R,M) is strongly Delta-clean iff R/J(R) has "
       "order 2",
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.meta.trivial_ext) return false;
         const FiniteRing& base = E.meta.trivial_ext->base;
         return base.order() >= 2 && idempotents(base).size() == 2;
       },
       [](const CorpusEntry& E, const Corpus&) {
         const FiniteRing& base = E.meta.trivial_ext->base;
         const bool rhs = base.order() == 2 * jacobson_radical(base).size();
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "extension flag " + onoff(E.flags.strongly_delta_clean) +
                      " but base residue criterion gives " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"trivial-extension-descent",
       "if T(R,M) is strongly Delta-clean then so is R; the converse holds when every "
       "idempotent of R commutes with M",
       [](const CorpusEntry& E, const Corpus&) { return E.meta.trivial_ext.has_value(); },
       [](const CorpusEntry& E, const Corpus&) {
         const TrivialExtensionRing& te = *E.meta.trivial_ext;
         const bool base_sdc = sdc_of(te.base);
         if (E.flags.strongly_delta_clean && !base_sdc)
           return CheckOutcome::fail(
               fail_text(E, "T(R,M) strongly Delta-clean but R is not"));
         bool idempotents_commute = true;
         for (Elem e : idempotents(te.base).elements())
           for (int m = 0; m < te.module.order && idempotents_commute; ++m)
             idempotents_commute =
                 te.module.lact(e, static_cast<Elem>(m)) == te.module.ract(static_cast<Elem>(m), e);
         if (base_sdc && idempotents_commute && !E.flags.strongly_delta_clean)
           return CheckOutcome::fail(fail_text(
               E, "R strongly Delta-clean with central-on-M idempotents but T(R,M) is not"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"group-ring-radical-structure-over-sdc",
       "for strongly Delta-clean R and a 2-group G: the augmentation ideal lies in J(RG), "
       "RG/J(RG) is boolean, and J(RG) = { x : eps(x) in J(R) }",
       [](const CorpusEntry& E, const Corpus&) {
         return E.meta.group_ring && sdc_of(E.meta.group_ring->coeff) &&
                is_p_group(E.meta.group_ring->group, 2);
       },
       [](const CorpusEntry& E, const Corpus&) {
         const GroupRing& gr = *E.meta.group_ring;
         const ElemSet aug = augmentation_ideal(gr);
         if (!aug.is_subset_of(E.profile.jacobson))
           return CheckOutcome::fail(
               fail_text(E, "augmentation ideal escapes J(RG)"));
         const QuotientRing q = quotient_ring(E.ring, E.profile.jacobson, E.label + "/J");
         if (!is_boolean(q.ring))
           return CheckOutcome::fail(fail_text(E, "RG/J(RG) is not boolean"));
         const ElemSet coeff_j = jacobson_radical(gr.coeff);
         ElemSet expect_j(E.ring.order());
         for (int x = 0; x < E.ring.order(); ++x)
           if (coeff_j.contains(gr.augmentation[static_cast<size_t>(x)]))
             expect_j.insert(static_cast<Elem>(x));
         if (E.profile.jacobson != expect_j)
           return CheckOutcome::fail(
               fail_text(E, "J(RG) differs from { x : eps(x) in J(R) }"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"group-ring-sdc-forces-coefficients-and-two-group",
       "if RG is strongly Delta-clean then R is strongly Delta-clean and G is a 2-group",
       [](const CorpusEntry& E, const Corpus&) { return E.meta.group_ring.has_value(); },
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.flags.strongly_delta_clean) return CheckOutcome::ok();
         const GroupRing& gr = *E.meta.group_ring;
         if (!sdc_of(gr.coeff))
           return CheckOutcome::fail(
               fail_text(E, "RG strongly Delta-clean but R is not"));
         if (!is_p_group(gr.group, 2))
           return CheckOutcome::fail(
               fail_text(E, "RG strongly Delta-clean but G is not a 2-group"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"abelian-coefficients-group-ring-criterion",
       "for abelian R, RG is strongly Delta-clean iff R is strongly Delta-clean and G is a "
       "2-group",
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.meta.group_ring) return false;
         const FiniteRing& coeff = E.meta.group_ring->coeff;
         const SubsetProfile cp = SubsetProfile::compute(coeff);
         return is_abelian(coeff, cp);
       },
       [](const CorpusEntry& E, const Corpus&) {
         const GroupRing& gr = *E.meta.group_ring;
         const bool rhs = sdc_of(gr.coeff) && is_p_group(gr.group, 2);
         if (E.flags.strongly_delta_clean != rhs)
           return CheckOutcome::fail(fail_text(
               E, "group-ring flag " + onoff(E.flags.strongly_delta_clean) +
                      " but coefficient/2-group criterion gives " + onoff(rhs)));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"triangular-group-ring-flag-agreement",
       "T_n(R)G and T_n(RG) carry identical classification flags and are strongly "
       "Delta-clean when R is commutative uniquely clean and G an abelian 2-group",
       [](const CorpusEntry& E, const Corpus&) {
         if (!E.meta.group_ring) return false;
         const RingExpr ast = parse_expr(E.expression);
         if (ast.kind != RingExpr::Kind::GroupRing ||
             ast.args.at(0).kind != RingExpr::Kind::Triangular)
           return false;
         const GroupRing& gr = *E.meta.group_ring;
         if (!gr.group.is_abelian() || !is_p_group(gr.group, 2)) return false;
         return true;
       },
       [](const CorpusEntry& E, const Corpus& corpus) {
         const RingExpr ast = parse_expr(E.expression);
         const FiniteRing base = eval_expr(ast.args.at(0).args.at(0), corpus.config).ring;
         const int n = ast.args.at(0).numbers.at(0);
         const SubsetProfile base_p = SubsetProfile::compute(base);
         if (!base.is_commutative() || !is_uniquely_clean(base, base_p))
           return CheckOutcome::skip();
         const GroupRing& gr = *E.meta.group_ring;

         const GroupRing rg = group_ring(base, gr.group, corpus.config);
         const TriangularRing tn_rg = upper_triangular_ring(rg.ring, n, corpus.config);

         const SubsetProfile left_p = E.profile;
         const SubsetProfile right_p = SubsetProfile::compute(tn_rg.ring);
         const Classification left = compute_classification(E.ring, left_p, corpus.config);
         const Classification right = compute_classification(tn_rg.ring, right_p, corpus.config);

         if (!left.strongly_delta_clean || !right.strongly_delta_clean)
           return CheckOutcome::fail(
               fail_text(E, "one of T_n(R)G, T_n(RG) is not strongly Delta-clean"));
         for (const std::string& name : flag_names()) {
           if (flag_by_name(left, name) != flag_by_name(right, name))
             return CheckOutcome::fail(
                 fail_text(E, "flag '" + name + "' differs between T_n(R)G and T_n(RG)"));
         }
         const int sizes_left[] = {left_p.units.size(), left_p.idempotents.size(),
                                   left_p.nilpotents.size(), left_p.jacobson.size(),
                                   left_p.delta.size()};
         const int sizes_right[] = {right_p.units.size(), right_p.idempotents.size(),
                                    right_p.nilpotents.size(), right_p.jacobson.size(),
                                    right_p.delta.size()};
         for (int i = 0; i < 5; ++i)
           if (sizes_left[i] != sizes_right[i])
             return CheckOutcome::fail(
                 fail_text(E, "subset sizes differ between T_n(R)G and T_n(RG)"));
         return CheckOutcome::ok();
       }});

  cases.push_back(
      {"odd-order-group-ring-never-sdc",
       "RG is not strongly Delta-clean when G is a nontrivial group of odd order",
       [](const CorpusEntry& E, const Corpus&) {
         return E.meta.group_ring && E.meta.group_ring->group.order > 1 &&
                E.meta.group_ring->group.order % 2 == 1;
       },
       [](const CorpusEntry& E, const Corpus&) {
         if (E.flags.strongly_delta_clean)
           return CheckOutcome::fail(
               fail_text(E, "odd-order group ring reported strongly Delta-clean"));
         return CheckOutcome::ok();
       }});

  return cases;
}

const std::vector<Case>& registry() {
  static const std::vector<Case> cases = build_registry();
  return cases;
}

Case demo_failure_case() {
  return {"demo-false", "every corpus ring is boolean (deliberately false demo)",
          [](const CorpusEntry&, const Corpus&) { return true; },
          [](const CorpusEntry& E, const Corpus&) {
            if (!is_boolean(E.ring)) {
              Elem witness = E.ring.zero();
              for (int a = 0; a < E.ring.order(); ++a)
                if (E.ring.mul(static_cast<Elem>(a), static_cast<Elem>(a)) !=
                    static_cast<Elem>(a)) {
                  witness = static_cast<Elem>(a);
                  break;
                }
              return CheckOutcome::fail(
                  fail_text(E, "a^2 != a", {{"a", witness}}));
            }
            return CheckOutcome::ok();
          }};
}

CaseResult evaluate_case(const Case& c, const Corpus& corpus) {
  CaseResult result;
  result.id = c.id;
  result.statement = c.statement;
  int scope = 0;
  std::optional<std::string> failure;
  for (const CorpusEntry& entry : corpus.entries) {
    if (!c.in_scope(entry, corpus)) continue;
    const CheckOutcome outcome = c.check(entry, corpus);
    if (!outcome.applicable) continue;
    ++scope;
    if (outcome.failure && !failure) failure = outcome.failure;
  }
  result.scope_size = scope;
  if (scope == 0)
    result.status = CaseStatus::Vacuous;
  else if (failure) {
    result.status = CaseStatus::Fail;
    result.witness = *failure;
  } else {
    result.status = CaseStatus::Pass;
  }
  return result;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> theorem_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Case& c : registry()) out.emplace_back(c.id, c.statement);
  return out;
}

SuiteRun run_theorem_suite(const Corpus& corpus, const SuiteOptions& opts) {
  std::vector<const Case*> selected;
  for (const Case& c : registry())
    if (glob_match(opts.case_filter, c.id)) selected.push_back(&c);
  const Case demo = demo_failure_case();
  if (opts.include_demo_failure && glob_match(opts.case_filter, demo.id))
    selected.push_back(&demo);

  SuiteRun run;
  run.cases.resize(selected.size());

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || selected.size() <= 1) {
    for (size_t i = 0; i < selected.size(); ++i)
      run.cases[i] = evaluate_case(*selected[i], corpus);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    const int worker_count = std::min<int>(jobs, static_cast<int>(selected.size()));
    workers.reserve(static_cast<size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < selected.size(); i = next.fetch_add(1))
          run.cases[i] = evaluate_case(*selected[i], corpus);
      });
    for (std::thread& t : workers) t.join();
  }

  run.findings.reserve(corpus.entries.size());
  for (const CorpusEntry& entry : corpus.entries) {
    RingFinding f;
    f.label = entry.label;
    f.delta_equals_jacobson = entry.flags.delta_equals_jacobson;
    f.sdc_without_strongly_j_clean =
        entry.flags.strongly_delta_clean && !entry.flags.strongly_j_clean;
    run.findings.push_back(std::move(f));
  }
  return run;
}

std::string explain_failure(const CaseResult& result) {
  if (result.status != CaseStatus::Fail)
    raise(ErrorKind::InvalidArgument, "case '" + result.id + "' did not fail");
  std::string out;
  out += "case " + result.id + " failed\n";
  out += "statement: " + result.statement + "\n";
  out += "witness: " + result.witness + "\n";
  return out;
}

}  // namespace ringlab
