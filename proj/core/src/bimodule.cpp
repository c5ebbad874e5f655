#include "ringlab/bimodule.hpp"

#include <string>
#include <utility>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

[[noreturn]] void module_fail(const Bimodule& m, const std::string& what) {
  raise(ErrorKind::AxiomViolation, "bimodule '" + m.label + "': " + what);
}

void fill_neg(Bimodule& m) {
  m.neg.assign(static_cast<size_t>(m.order), 0);
  for (int x = 0; x < m.order; ++x) {
    bool found = false;
    for (int y = 0; y < m.order; ++y)
      if (m.add_op(static_cast<Elem>(x), static_cast<Elem>(y)) == m.zero) {
        m.neg[static_cast<size_t>(x)] = static_cast<Elem>(y);
        found = true;
        break;
      }
    if (!found) module_fail(m, "additive inverse missing for element " + std::to_string(x));
  }
}

}  // namespace

void validate_bimodule(const Bimodule& m) {
  const int n = m.order;
  const FiniteRing& a_ring = m.left_ring;
  const FiniteRing& b_ring = m.right_ring;
  if (m.add.size() != static_cast<size_t>(n) * n)
    module_fail(m, "addition table has the wrong shape");
  if (m.left_act.size() != static_cast<size_t>(a_ring.order()) * n)
    module_fail(m, "left action table has the wrong shape");
  if (m.right_act.size() != static_cast<size_t>(n) * b_ring.order())
    module_fail(m, "right action table has the wrong shape");

  const auto el = [](int x) { return static_cast<Elem>(x); };

  for (int x = 0; x < n; ++x) {
    if (m.add_op(el(x), m.zero) != el(x)) module_fail(m, "additive identity fails");
    for (int y = 0; y < n; ++y) {
      if (m.add_op(el(x), el(y)) != m.add_op(el(y), el(x)))
        module_fail(m, "additive commutativity fails");
      for (int z = 0; z < n; ++z)
        if (m.add_op(m.add_op(el(x), el(y)), el(z)) != m.add_op(el(x), m.add_op(el(y), el(z))))
          module_fail(m, "additive associativity fails");
    }
  }

  for (int x = 0; x < n; ++x) {
    if (m.lact(a_ring.one(), el(x)) != el(x)) module_fail(m, "left action not unital");
    if (m.ract(el(x), b_ring.one()) != el(x)) module_fail(m, "right action not unital");
  }

  for (int a = 0; a < a_ring.order(); ++a)
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (m.lact(el(a), m.add_op(el(x), el(y))) !=
            m.add_op(m.lact(el(a), el(x)), m.lact(el(a), el(y))))
          module_fail(m, "left action not additive in the module argument");
      for (int a2 = 0; a2 < a_ring.order(); ++a2) {
        if (m.lact(a_ring.add(el(a), el(a2)), el(x)) !=
            m.add_op(m.lact(el(a), el(x)), m.lact(el(a2), el(x))))
          module_fail(m, "left action not additive in the ring argument");
        if (m.lact(a_ring.mul(el(a), el(a2)), el(x)) != m.lact(el(a), m.lact(el(a2), el(x))))
          module_fail(m, "left action not associative: (a a') m != a (a' m)");
      }
    }

  for (int x = 0; x < n; ++x)
    for (int b = 0; b < b_ring.order(); ++b) {
      for (int y = 0; y < n; ++y)
        if (m.ract(m.add_op(el(x), el(y)), el(b)) !=
            m.add_op(m.ract(el(x), el(b)), m.ract(el(y), el(b))))
          module_fail(m, "right action not additive in the module argument");
      for (int b2 = 0; b2 < b_ring.order(); ++b2) {
        if (m.ract(el(x), b_ring.add(el(b), el(b2))) !=
            m.add_op(m.ract(el(x), el(b)), m.ract(el(x), el(b2))))
          module_fail(m, "right action not additive in the ring argument");
        if (m.ract(el(x), b_ring.mul(el(b), el(b2))) != m.ract(m.ract(el(x), el(b)), el(b2)))
          module_fail(m, "right action not associative: m (b b') != (m b) b'");
      }
    }

  for (int a = 0; a < a_ring.order(); ++a)
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < b_ring.order(); ++b)
        if (m.ract(m.lact(el(a), el(x)), el(b)) != m.lact(el(a), m.ract(el(x), el(b))))
          module_fail(m, "actions do not commute: (a m) b != a (m b)");
}

Bimodule regular_bimodule(const FiniteRing& ring) {
  Bimodule m;
  m.left_ring = ring;
  m.right_ring = ring;
  m.order = ring.order();
  m.add = ring.add_table();
  m.zero = ring.zero();
  m.left_act = ring.mul_table();
  m.right_act = ring.mul_table();
  m.element_names = ring.element_names();
  m.label = ring.label();
  fill_neg(m);
  return m;
}

Bimodule square_bimodule(const FiniteRing& ring) {
  const int r = ring.order();
  const int n = r * r;
  Bimodule m;
  m.left_ring = ring;
  m.right_ring = ring;
  m.order = n;
  m.zero = 0;
  m.label = ring.label() + "^2";
  m.add.resize(static_cast<size_t>(n) * n);
  m.left_act.resize(static_cast<size_t>(r) * n);
  m.right_act.resize(static_cast<size_t>(n) * r);
  const auto enc = [&](Elem x, Elem y) { return static_cast<Elem>(x + y * r); };
  for (int x = 0; x < n; ++x) {
    const Elem x0 = static_cast<Elem>(x % r), x1 = static_cast<Elem>(x / r);
    for (int y = 0; y < n; ++y) {
      const Elem y0 = static_cast<Elem>(y % r), y1 = static_cast<Elem>(y / r);
      m.add[static_cast<size_t>(x) * n + y] = enc(ring.add(x0, y0), ring.add(x1, y1));
    }
    for (int a = 0; a < r; ++a) {
      m.left_act[static_cast<size_t>(a) * n + x] =
          enc(ring.mul(static_cast<Elem>(a), x0), ring.mul(static_cast<Elem>(a), x1));
      m.right_act[static_cast<size_t>(x) * r + a] =
          enc(ring.mul(x0, static_cast<Elem>(a)), ring.mul(x1, static_cast<Elem>(a)));
    }
  }
  m.element_names.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    m.element_names.push_back("(" + ring.element_name(static_cast<Elem>(x % r)) + "," +
                              ring.element_name(static_cast<Elem>(x / r)) + ")");
  fill_neg(m);
  return m;
}

Bimodule zero_bimodule(const FiniteRing& a, const FiniteRing& b) {
  Bimodule m;
  m.left_ring = a;
  m.right_ring = b;
  m.order = 1;
  m.zero = 0;
  m.add = {0};
  m.left_act.assign(static_cast<size_t>(a.order()), 0);
  m.right_act.assign(static_cast<size_t>(b.order()), 0);
  m.element_names = {"0"};
  m.label = "0";
  fill_neg(m);
  return m;
}

Bimodule subgroup_bimodule(const FiniteRing& ring, const ElemSet& members) {
  if (!members.contains(ring.zero()))
    raise(ErrorKind::InvalidArgument,
          "subgroup bimodule of '" + ring.label() + "': subset must contain zero");
  const auto elems = members.elements();
  const int n = static_cast<int>(elems.size());
  std::vector<int> index(static_cast<size_t>(ring.order()), -1);
  for (int i = 0; i < n; ++i) index[elems[static_cast<size_t>(i)]] = i;

  const auto idx = [&](Elem parent, const char* what) {
    const int i = index[parent];
    if (i < 0)
      raise(ErrorKind::InvalidArgument, "subgroup bimodule of '" + ring.label() +
                                            "': subset not closed under " + what);
    return static_cast<Elem>(i);
  };

  Bimodule m;
  m.left_ring = ring;
  m.right_ring = ring;
  m.order = n;
  m.add.resize(static_cast<size_t>(n) * n);
  m.left_act.resize(static_cast<size_t>(ring.order()) * n);
  m.right_act.resize(static_cast<size_t>(n) * ring.order());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m.add[static_cast<size_t>(i) * n + j] =
          idx(ring.add(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]), "addition");
    for (int a = 0; a < ring.order(); ++a) {
      m.left_act[static_cast<size_t>(a) * n + i] =
          idx(ring.mul(static_cast<Elem>(a), elems[static_cast<size_t>(i)]), "left multiplication");
      m.right_act[static_cast<size_t>(i) * ring.order() + a] =
          idx(ring.mul(elems[static_cast<size_t>(i)], static_cast<Elem>(a)), "right multiplication");
    }
  }
  m.zero = idx(ring.zero(), "zero");
  m.element_names.reserve(static_cast<size_t>(n));
  for (Elem e : elems) m.element_names.push_back(ring.element_name(e));
  m.label = std::to_string(n) + "-subgroup of " + ring.label();
  fill_neg(m);
  return m;
}

bool MoritaContext::trivial() const {
  for (Elem v : phi)
    if (v != a_ring.zero()) return false;
  for (Elem v : psi)
    if (v != b_ring.zero()) return false;
  return true;
}

void validate_morita(const MoritaContext& ctx) {
  validate_bimodule(ctx.m);
  validate_bimodule(ctx.n);
  if (!ctx.m.left_ring.same_tables(ctx.a_ring) || !ctx.m.right_ring.same_tables(ctx.b_ring))
    raise(ErrorKind::InvalidArgument, "Morita context '" + ctx.label + "': M is not an (A,B)-bimodule");
  if (!ctx.n.left_ring.same_tables(ctx.b_ring) || !ctx.n.right_ring.same_tables(ctx.a_ring))
    raise(ErrorKind::InvalidArgument, "Morita context '" + ctx.label + "': N is not a (B,A)-bimodule");
  if (ctx.phi.size() != static_cast<size_t>(ctx.m.order) * ctx.n.order ||
      ctx.psi.size() != static_cast<size_t>(ctx.n.order) * ctx.m.order)
    raise(ErrorKind::InvalidArgument, "Morita context '" + ctx.label + "': pairing table shape");

  const auto el = [](int x) { return static_cast<Elem>(x); };
  const FiniteRing& a_ring = ctx.a_ring;
  const FiniteRing& b_ring = ctx.b_ring;

  for (int m1 = 0; m1 < ctx.m.order; ++m1) {
    for (int m2 = 0; m2 < ctx.m.order; ++m2)
      for (int n1 = 0; n1 < ctx.n.order; ++n1)
        if (ctx.pair_mn(ctx.m.add_op(el(m1), el(m2)), el(n1)) !=
            a_ring.add(ctx.pair_mn(el(m1), el(n1)), ctx.pair_mn(el(m2), el(n1))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': phi not additive in M");
    for (int n1 = 0; n1 < ctx.n.order; ++n1)
      for (int n2 = 0; n2 < ctx.n.order; ++n2)
        if (ctx.pair_mn(el(m1), ctx.n.add_op(el(n1), el(n2))) !=
            a_ring.add(ctx.pair_mn(el(m1), el(n1)), ctx.pair_mn(el(m1), el(n2))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': phi not additive in N");
  }
  for (int n1 = 0; n1 < ctx.n.order; ++n1) {
    for (int n2 = 0; n2 < ctx.n.order; ++n2)
      for (int m1 = 0; m1 < ctx.m.order; ++m1)
        if (ctx.pair_nm(ctx.n.add_op(el(n1), el(n2)), el(m1)) !=
            b_ring.add(ctx.pair_nm(el(n1), el(m1)), ctx.pair_nm(el(n2), el(m1))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': psi not additive in N");
    for (int m1 = 0; m1 < ctx.m.order; ++m1)
      for (int m2 = 0; m2 < ctx.m.order; ++m2)
        if (ctx.pair_nm(el(n1), ctx.m.add_op(el(m1), el(m2))) !=
            b_ring.add(ctx.pair_nm(el(n1), el(m1)), ctx.pair_nm(el(n1), el(m2))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': psi not additive in M");
  }

  // (m n) m' = m (n m')  and  (n m) n' = n (m n')
  for (int m1 = 0; m1 < ctx.m.order; ++m1)
    for (int n1 = 0; n1 < ctx.n.order; ++n1)
      for (int m2 = 0; m2 < ctx.m.order; ++m2)
        if (ctx.m.lact(ctx.pair_mn(el(m1), el(n1)), el(m2)) !=
            ctx.m.ract(el(m1), ctx.pair_nm(el(n1), el(m2))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': (m n) m' != m (n m') at m=" +
                    std::to_string(m1) + ", n=" + std::to_string(n1) + ", m'=" + std::to_string(m2));
  for (int n1 = 0; n1 < ctx.n.order; ++n1)
    for (int m1 = 0; m1 < ctx.m.order; ++m1)
      for (int n2 = 0; n2 < ctx.n.order; ++n2)
        if (ctx.n.lact(ctx.pair_nm(el(n1), el(m1)), el(n2)) !=
            ctx.n.ract(el(n1), ctx.pair_mn(el(m1), el(n2))))
          raise(ErrorKind::AxiomViolation,
                "Morita context '" + ctx.label + "': (n m) n' != n (m n') at n=" +
                    std::to_string(n1) + ", m=" + std::to_string(m1) + ", n'=" + std::to_string(n2));
}

}  // namespace ringlab
