#include "ringlab/subsets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "ringlab/error.hpp"

namespace ringlab {

UnitTable units(const FiniteRing& ring) {
  const int n = ring.order();
  UnitTable ut;
  ut.units = ElemSet(n);
  ut.inverse.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == ring.one() &&
          ring.mul(static_cast<Elem>(b), static_cast<Elem>(a)) == ring.one()) {
        ut.units.insert(static_cast<Elem>(a));
        ut.inverse[static_cast<size_t>(a)] = static_cast<Elem>(b);
        break;
      }
    }
  return ut;
}

ElemSet idempotents(const FiniteRing& ring) {
  ElemSet s(ring.order());
  for (int a = 0; a < ring.order(); ++a)
    if (ring.mul(static_cast<Elem>(a), static_cast<Elem>(a)) == static_cast<Elem>(a))
      s.insert(static_cast<Elem>(a));
  return s;
}

ElemSet nilpotents(const FiniteRing& ring) {
  ElemSet s(ring.order());
  for (int a = 0; a < ring.order(); ++a) {
    Elem x = static_cast<Elem>(a);
    for (int k = 0; k < ring.order(); ++k) {
      if (x == ring.zero()) {
        s.insert(static_cast<Elem>(a));
        break;
      }
      x = ring.mul(x, static_cast<Elem>(a));
    }
  }
  return s;
}

ElemSet jacobson_radical(const FiniteRing& ring, const UnitTable& ut) {
  const int n = ring.order();
  ElemSet s(n);
  for (int x = 0; x < n; ++x) {
    bool in = true;
    for (int r = 0; r < n && in; ++r)
      in = ut.units.contains(
          ring.sub(ring.one(), ring.mul(static_cast<Elem>(r), static_cast<Elem>(x))));
    if (in) s.insert(static_cast<Elem>(x));
  }
  return s;
}

ElemSet jacobson_radical(const FiniteRing& ring) { return jacobson_radical(ring, units(ring)); }

ElemSet delta_set(const FiniteRing& ring, const UnitTable& ut) {
  const int n = ring.order();
  const auto us = ut.units.elements();
  ElemSet s(n);
  for (int x = 0; x < n; ++x) {
    bool in = true;
    for (Elem u : us) {
      if (!ut.units.contains(ring.sub(ring.one(), ring.mul(static_cast<Elem>(x), u)))) {
        in = false;
        break;
      }
    }
    if (in) s.insert(static_cast<Elem>(x));
  }
  return s;
}

ElemSet delta_set(const FiniteRing& ring) { return delta_set(ring, units(ring)); }

ElemSet delta_set_left(const FiniteRing& ring, const UnitTable& ut) {
  const int n = ring.order();
  const auto us = ut.units.elements();
  ElemSet s(n);
  for (int x = 0; x < n; ++x) {
    bool in = true;
    for (Elem u : us) {
      if (!ut.units.contains(ring.sub(ring.one(), ring.mul(u, static_cast<Elem>(x))))) {
        in = false;
        break;
      }
    }
    if (in) s.insert(static_cast<Elem>(x));
  }
  return s;
}

ElemSet lower_nilradical(const FiniteRing& ring, const UnitTable& ut) {
  return jacobson_radical(ring, ut);
}

ElemSet center(const FiniteRing& ring) {
  const int n = ring.order();
  ElemSet s(n);
  for (int z = 0; z < n; ++z) {
    bool central = true;
    for (int r = 0; r < n && central; ++r)
      central = ring.mul(static_cast<Elem>(z), static_cast<Elem>(r)) ==
                ring.mul(static_cast<Elem>(r), static_cast<Elem>(z));
    if (central) s.insert(static_cast<Elem>(z));
  }
  return s;
}

ElemSet left_annihilator(const FiniteRing& ring, Elem a) {
  ElemSet s(ring.order());
  for (int r = 0; r < ring.order(); ++r)
    if (ring.mul(static_cast<Elem>(r), a) == ring.zero()) s.insert(static_cast<Elem>(r));
  return s;
}

ElemSet right_annihilator(const FiniteRing& ring, Elem a) {
  ElemSet s(ring.order());
  for (int r = 0; r < ring.order(); ++r)
    if (ring.mul(a, static_cast<Elem>(r)) == ring.zero()) s.insert(static_cast<Elem>(r));
  return s;
}

ElemSet ideal_generated_by(const FiniteRing& ring, std::span<const Elem> generators,
                           Side side) {
  const int n = ring.order();
  ElemSet s(n);
  s.insert(ring.zero());
  for (Elem g : generators) s.insert(g);

  // Fixpoint closure under addition and the one-sided multiplications.
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
    const auto members2 = s.elements();
    for (Elem x : members2)
      for (int r = 0; r < n; ++r) {
        if (side != Side::Right) {
          const Elem rx = ring.mul(static_cast<Elem>(r), x);
          if (!s.contains(rx)) {
            s.insert(rx);
            changed = true;
          }
        }
        if (side != Side::Left) {
          const Elem xr = ring.mul(x, static_cast<Elem>(r));
          if (!s.contains(xr)) {
            s.insert(xr);
            changed = true;
          }
        }
      }
  }
  return s;
}

bool is_additive_subgroup(const FiniteRing& ring, const ElemSet& s) {
  if (!s.contains(ring.zero())) return false;
  const auto members = s.elements();
  for (Elem x : members)
    for (Elem y : members)
      if (!s.contains(ring.add(x, y))) return false;
  return true;
}

bool is_two_sided_ideal(const FiniteRing& ring, const ElemSet& s) {
  if (!is_additive_subgroup(ring, s)) return false;
  for (Elem x : s.elements())
    for (int r = 0; r < ring.order(); ++r) {
      if (!s.contains(ring.mul(static_cast<Elem>(r), x))) return false;
      if (!s.contains(ring.mul(x, static_cast<Elem>(r)))) return false;
    }
  return true;
}

namespace {

// Sum of two ideals of the same side: elementwise sums already form an
// ideal, no further closure needed.
ElemSet ideal_sum(const FiniteRing& ring, const ElemSet& a, const ElemSet& b) {
  ElemSet out(ring.order());
  for (Elem x : a.elements())
    for (Elem y : b.elements()) out.insert(ring.add(x, y));
  return out;
}

}  // namespace

IdealLattice ideal_lattice(const FiniteRing& ring, Side side, int budget) {
  IdealLattice lat;
  lat.side = side;

  std::map<std::vector<std::uint64_t>, int> seen;
  std::deque<int> fresh;

  const auto add_ideal = [&](const ElemSet& s) {
    auto it = seen.find(s.words());
    if (it != seen.end()) return;
    if (static_cast<int>(lat.ideals.size()) >= budget)
      raise(ErrorKind::BudgetExceeded,
            "ideal lattice of '" + ring.label() + "' exceeds budget of " +
                std::to_string(budget) + " ideals");
    const int idx = static_cast<int>(lat.ideals.size());
    lat.ideals.push_back(s);
    seen.emplace(s.words(), idx);
    fresh.push_back(idx);
  };

  for (int a = 0; a < ring.order(); ++a) {
    const Elem g = static_cast<Elem>(a);
    add_ideal(ideal_generated_by(ring, std::span<const Elem>(&g, 1), side));
  }

  while (!fresh.empty()) {
    const int i = fresh.front();
    fresh.pop_front();
    const size_t count = lat.ideals.size();
    for (size_t j = 0; j < count; ++j) {
      const ElemSet sum = ideal_sum(ring, lat.ideals[static_cast<size_t>(i)], lat.ideals[j]);
      add_ideal(sum);
    }
  }

  for (size_t i = 0; i < lat.ideals.size(); ++i) {
    if (lat.ideals[i].size() == ring.order()) continue;  // not proper
    bool maximal = true;
    for (size_t j = 0; j < lat.ideals.size() && maximal; ++j) {
      if (i == j || lat.ideals[j].size() == ring.order()) continue;
      if (lat.ideals[i].is_subset_of(lat.ideals[j]) && lat.ideals[i] != lat.ideals[j])
        maximal = false;
    }
    if (maximal) lat.maximal.push_back(static_cast<int>(i));
  }
  return lat;
}

ElemSet intersect_maximal(const FiniteRing& ring, const IdealLattice& lattice) {
  ElemSet out = ElemSet::full(ring.order());
  for (int idx : lattice.maximal) out = out.intersect(lattice.ideals[static_cast<size_t>(idx)]);
  return out;
}

}  // namespace ringlab
