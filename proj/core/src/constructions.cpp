#include "ringlab/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "ringlab/error.hpp"
#include "ringlab/subsets.hpp"

namespace ringlab {

namespace {

void check_order(long long order, const Config& cfg, const std::string& what) {
  if (order > cfg.max_order)
    raise(ErrorKind::MaxOrderExceeded, what + " would have order " + std::to_string(order) +
                                           " > max order " + std::to_string(cfg.max_order));
}

long long checked_pow(long long base, int exp, const Config& cfg, const std::string& what) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    check_order(v, cfg, what);
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// direct products

std::vector<Elem> ProductRing::components(Elem x) const {
  std::vector<Elem> out(factors.size());
  int rest = x;
  for (size_t i = 0; i < factors.size(); ++i) {
    out[i] = static_cast<Elem>(rest % factors[i].order());
    rest /= factors[i].order();
  }
  return out;
}

Elem ProductRing::compose(std::span<const Elem> parts) const {
  int x = 0;
  for (size_t i = factors.size(); i-- > 0;) x = x * factors[i].order() + parts[i];
  return static_cast<Elem>(x);
}

ProductRing direct_product(std::vector<FiniteRing> factors, const Config& cfg,
                           FiniteRing::Validate validate) {
  if (factors.empty()) raise(ErrorKind::InvalidArgument, "direct product needs >= 1 factor");
  long long order = 1;
  std::string label;
  for (const FiniteRing& f : factors) {
    order *= f.order();
    check_order(order, cfg, "direct product");
    if (!label.empty()) label += "x";
    label += f.label();
  }

  ProductRing result;
  result.factors = std::move(factors);
  result.strides.resize(result.factors.size());
  int stride = 1;
  for (size_t i = 0; i < result.factors.size(); ++i) {
    result.strides[i] = stride;
    stride *= result.factors[i].order();
  }

  const int n = static_cast<int>(order);
  RingData data;
  data.order = n;
  data.label = std::move(label);
  data.add.resize(static_cast<size_t>(n) * n);
  data.mul.resize(static_cast<size_t>(n) * n);

  std::vector<std::vector<Elem>> digits(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) digits[static_cast<size_t>(x)] = result.components(static_cast<Elem>(x));

  std::vector<Elem> tmp(result.factors.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (size_t i = 0; i < result.factors.size(); ++i)
        tmp[i] = result.factors[i].add(digits[static_cast<size_t>(x)][i], digits[static_cast<size_t>(y)][i]);
      data.add[static_cast<size_t>(x) * n + y] = result.compose(tmp);
      for (size_t i = 0; i < result.factors.size(); ++i)
        tmp[i] = result.factors[i].mul(digits[static_cast<size_t>(x)][i], digits[static_cast<size_t>(y)][i]);
      data.mul[static_cast<size_t>(x) * n + y] = result.compose(tmp);
    }

  for (size_t i = 0; i < result.factors.size(); ++i) tmp[i] = result.factors[i].zero();
  data.zero = result.compose(tmp);
  for (size_t i = 0; i < result.factors.size(); ++i) tmp[i] = result.factors[i].one();
  data.one = result.compose(tmp);

  if (result.factors.size() == 1) {
    data.element_names = result.factors[0].element_names();
  } else {
    data.element_names.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) {
      std::string name = "(";
      const auto& d = digits[static_cast<size_t>(x)];
      for (size_t i = 0; i < result.factors.size(); ++i) {
        if (i) name += ",";
        name += result.factors[i].element_name(d[i]);
      }
      name += ")";
      data.element_names.push_back(std::move(name));
    }
  }

  result.ring = FiniteRing::make(std::move(data), validate);
  return result;
}

// ---------------------------------------------------------------------------
// matrix rings

namespace {

std::vector<Elem> radix_digits(Elem x, int base, int count) {
  std::vector<Elem> out(static_cast<size_t>(count));
  int rest = x;
  for (int i = 0; i < count; ++i) {
    out[static_cast<size_t>(i)] = static_cast<Elem>(rest % base);
    rest /= base;
  }
  return out;
}

Elem radix_pack(std::span<const Elem> digits, int base) {
  int x = 0;
  for (size_t i = digits.size(); i-- > 0;) x = x * base + digits[i];
  return static_cast<Elem>(x);
}

std::string matrix_name(const FiniteRing& base, std::span<const Elem> entries, int n,
                        const std::vector<std::pair<int, int>>* positions) {
  // Entries are row-major over all n*n cells (full) or over `positions`
  // (triangular, missing cells read as zero).
  std::string out = "[";
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < n; ++j) {
      if (j) out += ",";
      Elem v = base.zero();
      if (!positions) {
        v = entries[static_cast<size_t>(i * n + j)];
      } else {
        for (size_t p = 0; p < positions->size(); ++p)
          if ((*positions)[p].first == i && (*positions)[p].second == j) v = entries[p];
      }
      out += base.element_name(v);
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace

std::vector<Elem> MatrixRing::entries(Elem x) const {
  return radix_digits(x, base.order(), n * n);
}

Elem MatrixRing::from_entries(std::span<const Elem> e) const {
  return radix_pack(e, base.order());
}

MatrixRing matrix_ring(const FiniteRing& base, int n, const Config& cfg,
                       FiniteRing::Validate validate) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "matrix ring needs n >= 1");
  const std::string label = "M" + std::to_string(n) + "(" + base.label() + ")";
  const long long order = checked_pow(base.order(), n * n, cfg, label);

  MatrixRing result;
  result.base = base;
  result.n = n;

  const int q = static_cast<int>(order);
  RingData data;
  data.order = q;
  data.label = label;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);

  std::vector<std::vector<Elem>> digits(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    digits[static_cast<size_t>(x)] = radix_digits(static_cast<Elem>(x), base.order(), n * n);

  std::vector<Elem> tmp(static_cast<size_t>(n) * n);
  for (int x = 0; x < q; ++x) {
    const auto& dx = digits[static_cast<size_t>(x)];
    for (int y = 0; y < q; ++y) {
      const auto& dy = digits[static_cast<size_t>(y)];
      for (int c = 0; c < n * n; ++c)
        tmp[static_cast<size_t>(c)] = base.add(dx[static_cast<size_t>(c)], dy[static_cast<size_t>(c)]);
      data.add[static_cast<size_t>(x) * q + y] = radix_pack(tmp, base.order());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Elem acc = base.zero();
          for (int k = 0; k < n; ++k)
            acc = base.add(acc, base.mul(dx[static_cast<size_t>(i * n + k)], dy[static_cast<size_t>(k * n + j)]));
          tmp[static_cast<size_t>(i * n + j)] = acc;
        }
      data.mul[static_cast<size_t>(x) * q + y] = radix_pack(tmp, base.order());
    }
  }

  std::fill(tmp.begin(), tmp.end(), base.zero());
  data.zero = radix_pack(tmp, base.order());
  for (int i = 0; i < n; ++i) tmp[static_cast<size_t>(i * n + i)] = base.one();
  data.one = radix_pack(tmp, base.order());

  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    data.element_names.push_back(matrix_name(base, digits[static_cast<size_t>(x)], n, nullptr));

  result.ring = FiniteRing::make(std::move(data), validate);
  return result;
}

std::vector<Elem> TriangularRing::entries(Elem x) const {
  return radix_digits(x, base.order(), static_cast<int>(positions.size()));
}

Elem TriangularRing::from_entries(std::span<const Elem> e) const {
  return radix_pack(e, base.order());
}

TriangularRing upper_triangular_ring(const FiniteRing& base, int n, const Config& cfg,
                                     FiniteRing::Validate validate) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "triangular ring needs n >= 1");
  const std::string label = "T" + std::to_string(n) + "(" + base.label() + ")";
  const int cells = n * (n + 1) / 2;
  const long long order = checked_pow(base.order(), cells, cfg, label);

  TriangularRing result;
  result.base = base;
  result.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) result.positions.emplace_back(i, j);

  std::vector<std::vector<int>> cell(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (size_t p = 0; p < result.positions.size(); ++p)
    cell[static_cast<size_t>(result.positions[p].first)][static_cast<size_t>(result.positions[p].second)] =
        static_cast<int>(p);

  const int q = static_cast<int>(order);
  RingData data;
  data.order = q;
  data.label = label;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);

  std::vector<std::vector<Elem>> digits(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    digits[static_cast<size_t>(x)] = radix_digits(static_cast<Elem>(x), base.order(), cells);

  std::vector<Elem> tmp(static_cast<size_t>(cells));
  for (int x = 0; x < q; ++x) {
    const auto& dx = digits[static_cast<size_t>(x)];
    for (int y = 0; y < q; ++y) {
      const auto& dy = digits[static_cast<size_t>(y)];
      for (int c = 0; c < cells; ++c)
        tmp[static_cast<size_t>(c)] = base.add(dx[static_cast<size_t>(c)], dy[static_cast<size_t>(c)]);
      data.add[static_cast<size_t>(x) * q + y] = radix_pack(tmp, base.order());
      for (size_t p = 0; p < result.positions.size(); ++p) {
        const int i = result.positions[p].first;
        const int j = result.positions[p].second;
        Elem acc = base.zero();
        for (int k = i; k <= j; ++k)
          acc = base.add(acc, base.mul(dx[static_cast<size_t>(cell[static_cast<size_t>(i)][static_cast<size_t>(k)])],
                                       dy[static_cast<size_t>(cell[static_cast<size_t>(k)][static_cast<size_t>(j)])]));
        tmp[p] = acc;
      }
      data.mul[static_cast<size_t>(x) * q + y] = radix_pack(tmp, base.order());
    }
  }

  std::fill(tmp.begin(), tmp.end(), base.zero());
  data.zero = radix_pack(tmp, base.order());
  for (size_t p = 0; p < result.positions.size(); ++p)
    tmp[p] = result.positions[p].first == result.positions[p].second ? base.one() : base.zero();
  data.one = radix_pack(tmp, base.order());

  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    data.element_names.push_back(matrix_name(base, digits[static_cast<size_t>(x)], n, &result.positions));

  result.ring = FiniteRing::make(std::move(data), validate);
  return result;
}

// ---------------------------------------------------------------------------
// quotients and corners

QuotientRing quotient_ring(const FiniteRing& base, const ElemSet& ideal, std::string label) {
  if (ideal.universe() != base.order() || !is_two_sided_ideal(base, ideal))
    raise(ErrorKind::NotAnIdeal,
          "quotient of '" + base.label() + "': subset is not a two-sided ideal");

  const int n = base.order();
  const auto ideal_elems = ideal.elements();

  std::vector<Elem> coset_rep(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    Elem rep = static_cast<Elem>(x);
    for (Elem i : ideal_elems) rep = std::min(rep, base.add(static_cast<Elem>(x), i));
    coset_rep[static_cast<size_t>(x)] = rep;
  }

  QuotientRing result;
  result.base = base;
  for (int x = 0; x < n; ++x)
    if (coset_rep[static_cast<size_t>(x)] == static_cast<Elem>(x))
      result.representative.push_back(static_cast<Elem>(x));

  result.projection.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    const auto it = std::lower_bound(result.representative.begin(), result.representative.end(),
                                     coset_rep[static_cast<size_t>(x)]);
    result.projection[static_cast<size_t>(x)] =
        static_cast<Elem>(it - result.representative.begin());
  }

  const int q = static_cast<int>(result.representative.size());
  RingData data;
  data.order = q;
  data.label = label.empty() ? base.label() + "/I" + std::to_string(ideal.size()) : std::move(label);
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const Elem rx = result.representative[static_cast<size_t>(x)];
      const Elem ry = result.representative[static_cast<size_t>(y)];
      data.add[static_cast<size_t>(x) * q + y] = result.projection[base.add(rx, ry)];
      data.mul[static_cast<size_t>(x) * q + y] = result.projection[base.mul(rx, ry)];
    }
  data.zero = result.projection[base.zero()];
  data.one = result.projection[base.one()];
  data.element_names.reserve(static_cast<size_t>(q));
  for (Elem rep : result.representative)
    data.element_names.push_back("[" + base.element_name(rep) + "]");

  result.ring = FiniteRing::make(std::move(data), FiniteRing::Validate::Off);
  return result;
}

CornerRing corner_ring(const FiniteRing& base, Elem e) {
  if (e >= base.order() || base.mul(e, e) != e)
    raise(ErrorKind::NotIdempotent,
          "corner of '" + base.label() + "': element is not an idempotent");

  const int n = base.order();
  CornerRing result;
  result.base = base;
  result.idempotent = e;
  ElemSet members(n);
  for (int r = 0; r < n; ++r)
    members.insert(base.mul(base.mul(e, static_cast<Elem>(r)), e));
  result.from_base.assign(static_cast<size_t>(n), -1);
  for (Elem x : members.elements()) {
    result.from_base[x] = static_cast<int>(result.to_base.size());
    result.to_base.push_back(x);
  }

  const int q = static_cast<int>(result.to_base.size());
  RingData data;
  data.order = q;
  data.label = "corner(" + base.label() + "," + base.element_name(e) + ")";
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const Elem bx = result.to_base[static_cast<size_t>(x)];
      const Elem by = result.to_base[static_cast<size_t>(y)];
      data.add[static_cast<size_t>(x) * q + y] =
          static_cast<Elem>(result.from_base[base.add(bx, by)]);
      data.mul[static_cast<size_t>(x) * q + y] =
          static_cast<Elem>(result.from_base[base.mul(bx, by)]);
    }
  data.zero = static_cast<Elem>(result.from_base[base.zero()]);
  data.one = static_cast<Elem>(result.from_base[e]);
  data.element_names.reserve(static_cast<size_t>(q));
  for (Elem b : result.to_base) data.element_names.push_back(base.element_name(b));

  result.ring = FiniteRing::make(std::move(data), FiniteRing::Validate::Off);
  return result;
}

// ---------------------------------------------------------------------------
// trivial extensions

Elem TrivialExtensionRing::encode(Elem r, Elem m) const {
  return static_cast<Elem>(r + m * base.order());
}

std::pair<Elem, Elem> TrivialExtensionRing::decode(Elem x) const {
  return {static_cast<Elem>(x % base.order()), static_cast<Elem>(x / base.order())};
}

TrivialExtensionRing trivial_extension(const FiniteRing& base, Bimodule module,
                                       const Config& cfg, FiniteRing::Validate validate) {
  if (!module.left_ring.same_tables(base) || !module.right_ring.same_tables(base))
    raise(ErrorKind::InvalidArgument,
          "trivial extension of '" + base.label() + "': module is not an (R,R)-bimodule");
  validate_bimodule(module);

  const long long order = static_cast<long long>(base.order()) * module.order;
  const std::string label = "T(" + base.label() + "," + module.label + ")";
  check_order(order, cfg, label);

  TrivialExtensionRing result;
  result.base = base;
  result.module = std::move(module);
  const Bimodule& mod = result.module;

  const int q = static_cast<int>(order);
  RingData data;
  data.order = q;
  data.label = label;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    const Elem rx = static_cast<Elem>(x % base.order());
    const Elem mx = static_cast<Elem>(x / base.order());
    for (int y = 0; y < q; ++y) {
      const Elem ry = static_cast<Elem>(y % base.order());
      const Elem my = static_cast<Elem>(y / base.order());
      data.add[static_cast<size_t>(x) * q + y] =
          result.encode(base.add(rx, ry), mod.add_op(mx, my));
      // (r, m)(s, n) = (rs, r.n + m.s)
      data.mul[static_cast<size_t>(x) * q + y] =
          result.encode(base.mul(rx, ry), mod.add_op(mod.lact(rx, my), mod.ract(mx, ry)));
    }
  }
  data.zero = result.encode(base.zero(), mod.zero);
  data.one = result.encode(base.one(), mod.zero);
  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    data.element_names.push_back("(" + base.element_name(static_cast<Elem>(x % base.order())) +
                                 "," + mod.element_names[static_cast<size_t>(x / base.order())] + ")");

  result.ring = FiniteRing::make(std::move(data), validate);
  return result;
}

// ---------------------------------------------------------------------------
// Morita context rings

Elem MoritaRing::encode(Elem a, Elem m, Elem n, Elem b) const {
  int x = b;
  x = x * ctx.n.order + n;
  x = x * ctx.m.order + m;
  x = x * ctx.a_ring.order() + a;
  return static_cast<Elem>(x);
}

std::array<Elem, 4> MoritaRing::decode(Elem x) const {
  std::array<Elem, 4> out;
  int rest = x;
  out[0] = static_cast<Elem>(rest % ctx.a_ring.order());
  rest /= ctx.a_ring.order();
  out[1] = static_cast<Elem>(rest % ctx.m.order);
  rest /= ctx.m.order;
  out[2] = static_cast<Elem>(rest % ctx.n.order);
  rest /= ctx.n.order;
  out[3] = static_cast<Elem>(rest);
  return out;
}

MoritaRing morita_ring(MoritaContext ctx, const Config& cfg) {
  validate_morita(ctx);

  const long long order = static_cast<long long>(ctx.a_ring.order()) * ctx.m.order *
                          ctx.n.order * ctx.b_ring.order();
  const std::string label = ctx.label.empty()
                                ? "Morita(" + ctx.a_ring.label() + "," + ctx.m.label + ";" +
                                      ctx.n.label + "," + ctx.b_ring.label() + ")"
                                : ctx.label;
  check_order(order, cfg, label);

  MoritaRing result;
  result.ctx = std::move(ctx);
  const MoritaContext& c = result.ctx;
  const FiniteRing& ra = c.a_ring;
  const FiniteRing& rb = c.b_ring;

  const int q = static_cast<int>(order);
  RingData data;
  data.order = q;
  data.label = label;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    const auto dx = result.decode(static_cast<Elem>(x));
    for (int y = 0; y < q; ++y) {
      const auto dy = result.decode(static_cast<Elem>(y));
      data.add[static_cast<size_t>(x) * q + y] =
          result.encode(ra.add(dx[0], dy[0]), c.m.add_op(dx[1], dy[1]),
                        c.n.add_op(dx[2], dy[2]), rb.add(dx[3], dy[3]));
      // [[a,m],[n,b]] [[a',m'],[n',b']] =
      //   [[aa' + phi(m,n'), a.m' + m.b'], [n.a' + b.n', psi(n,m') + bb']]
      const Elem a2 = ra.add(ra.mul(dx[0], dy[0]), c.pair_mn(dx[1], dy[2]));
      const Elem m2 = c.m.add_op(c.m.lact(dx[0], dy[1]), c.m.ract(dx[1], dy[3]));
      const Elem n2 = c.n.add_op(c.n.ract(dx[2], dy[0]), c.n.lact(dx[3], dy[2]));
      const Elem b2 = rb.add(c.pair_nm(dx[2], dy[1]), rb.mul(dx[3], dy[3]));
      data.mul[static_cast<size_t>(x) * q + y] = result.encode(a2, m2, n2, b2);
    }
  }
  data.zero = result.encode(ra.zero(), c.m.zero, c.n.zero, rb.zero());
  data.one = result.encode(ra.one(), c.m.zero, c.n.zero, rb.one());
  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x) {
    const auto d = result.decode(static_cast<Elem>(x));
    data.element_names.push_back("[" + ra.element_name(d[0]) + "," +
                                 c.m.element_names[d[1]] + ";" + c.n.element_names[d[2]] +
                                 "," + rb.element_name(d[3]) + "]");
  }

  // A bad pairing that slipped past validate_morita must still fail here.
  result.ring = FiniteRing::make(std::move(data), FiniteRing::Validate::On);
  return result;
}

// ---------------------------------------------------------------------------
// group rings

std::vector<Elem> GroupRing::coefficients(Elem x) const {
  return radix_digits(x, coeff.order(), group.order);
}

Elem GroupRing::from_coefficients(std::span<const Elem> c) const {
  return radix_pack(c, coeff.order());
}

GroupRing group_ring(const FiniteRing& coeff, const FiniteGroup& g, const Config& cfg,
                     FiniteRing::Validate validate) {
  const std::string label = coeff.label() + "[" + g.label + "]";
  const long long order = checked_pow(coeff.order(), g.order, cfg, label);

  GroupRing result;
  result.coeff = coeff;
  result.group = g;

  const int q = static_cast<int>(order);
  RingData data;
  data.order = q;
  data.label = label;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);

  std::vector<std::vector<Elem>> digits(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x)
    digits[static_cast<size_t>(x)] = radix_digits(static_cast<Elem>(x), coeff.order(), g.order);

  std::vector<Elem> tmp(static_cast<size_t>(g.order));
  for (int x = 0; x < q; ++x) {
    const auto& dx = digits[static_cast<size_t>(x)];
    for (int y = 0; y < q; ++y) {
      const auto& dy = digits[static_cast<size_t>(y)];
      for (int i = 0; i < g.order; ++i)
        tmp[static_cast<size_t>(i)] = coeff.add(dx[static_cast<size_t>(i)], dy[static_cast<size_t>(i)]);
      data.add[static_cast<size_t>(x) * q + y] = radix_pack(tmp, coeff.order());

      std::fill(tmp.begin(), tmp.end(), coeff.zero());
      for (int i = 0; i < g.order; ++i) {
        if (dx[static_cast<size_t>(i)] == coeff.zero()) continue;
        for (int j = 0; j < g.order; ++j) {
          if (dy[static_cast<size_t>(j)] == coeff.zero()) continue;
          const Elem target = g.op(static_cast<Elem>(i), static_cast<Elem>(j));
          tmp[target] = coeff.add(tmp[target], coeff.mul(dx[static_cast<size_t>(i)], dy[static_cast<size_t>(j)]));
        }
      }
      data.mul[static_cast<size_t>(x) * q + y] = radix_pack(tmp, coeff.order());
    }
  }

  std::fill(tmp.begin(), tmp.end(), coeff.zero());
  data.zero = radix_pack(tmp, coeff.order());
  tmp[g.identity] = coeff.one();
  data.one = radix_pack(tmp, coeff.order());

  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x) {
    const auto& d = digits[static_cast<size_t>(x)];
    std::string name;
    for (int i = 0; i < g.order; ++i) {
      if (d[static_cast<size_t>(i)] == coeff.zero()) continue;
      if (!name.empty()) name += "+";
      const std::string& cn = coeff.element_name(d[static_cast<size_t>(i)]);
      if (static_cast<Elem>(i) == g.identity) {
        name += cn;
      } else {
        if (cn != "1") name += cn;
        name += g.element_names[static_cast<size_t>(i)];
      }
    }
    data.element_names.push_back(name.empty() ? "0" : name);
  }

  result.ring = FiniteRing::make(std::move(data), validate);

  result.augmentation.resize(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x) {
    Elem sum = coeff.zero();
    for (Elem c : digits[static_cast<size_t>(x)]) sum = coeff.add(sum, c);
    result.augmentation[static_cast<size_t>(x)] = sum;
  }

  result.coeff_embedding.resize(static_cast<size_t>(coeff.order()));
  for (int r = 0; r < coeff.order(); ++r) {
    std::fill(tmp.begin(), tmp.end(), coeff.zero());
    tmp[g.identity] = static_cast<Elem>(r);
    result.coeff_embedding[static_cast<size_t>(r)] = radix_pack(tmp, coeff.order());
  }

  // The coefficient-sum map must be a surjective ring homomorphism.
  const auto& eps = result.augmentation;
  if (eps[result.ring.one()] != coeff.one())
    raise(ErrorKind::AxiomViolation, label + ": augmentation does not send 1 to 1");
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      if (eps[result.ring.add(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          coeff.add(eps[static_cast<size_t>(x)], eps[static_cast<size_t>(y)]))
        raise(ErrorKind::AxiomViolation, label + ": augmentation is not additive");
      if (eps[result.ring.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          coeff.mul(eps[static_cast<size_t>(x)], eps[static_cast<size_t>(y)]))
        raise(ErrorKind::AxiomViolation, label + ": augmentation is not multiplicative");
    }
  ElemSet image(coeff.order());
  for (Elem v : eps) image.insert(v);
  if (image.size() != coeff.order())
    raise(ErrorKind::AxiomViolation, label + ": augmentation is not surjective");

  return result;
}

ElemSet augmentation_ideal(const GroupRing& gr) {
  ElemSet s(gr.ring.order());
  for (int x = 0; x < gr.ring.order(); ++x)
    if (gr.augmentation[static_cast<size_t>(x)] == gr.coeff.zero())
      s.insert(static_cast<Elem>(x));
  return s;
}

ElemSet augmentation_ideal(const FiniteRing& coeff, const FiniteGroup& g, const Config& cfg) {
  return augmentation_ideal(group_ring(coeff, g, cfg));
}

// ---------------------------------------------------------------------------
// named Morita contexts

namespace {

// Pairings are inherited from multiplication in Z4: phi(m, n) = m*n, with
// module elements read off through their member lists.
MoritaContext z4_context(const std::vector<Elem>& m_members, const std::vector<Elem>& n_members,
                         const std::string& label) {
  const FiniteRing z4 = zmod_ring(4);
  MoritaContext ctx;
  ctx.a_ring = z4;
  ctx.b_ring = z4;
  ctx.label = label;

  const auto build_module = [&](const std::vector<Elem>& members) {
    if (members.size() == 1 && members[0] == z4.zero()) return zero_bimodule(z4, z4);
    ElemSet s(z4.order());
    for (Elem e : members) s.insert(e);
    Bimodule m = subgroup_bimodule(z4, s);
    m.label = members.size() == 4 ? "Z4" : "2Z4";
    return m;
  };
  ctx.m = build_module(m_members);
  ctx.n = build_module(n_members);

  ctx.phi.resize(static_cast<size_t>(ctx.m.order) * ctx.n.order);
  ctx.psi.resize(static_cast<size_t>(ctx.n.order) * ctx.m.order);
  for (int i = 0; i < ctx.m.order; ++i)
    for (int j = 0; j < ctx.n.order; ++j) {
      const Elem mv = m_members[static_cast<size_t>(i)];
      const Elem nv = n_members[static_cast<size_t>(j)];
      ctx.phi[static_cast<size_t>(i) * ctx.n.order + j] = z4.mul(mv, nv);
      ctx.psi[static_cast<size_t>(j) * ctx.m.order + i] = z4.mul(nv, mv);
    }
  return ctx;
}

}  // namespace

const std::vector<std::string>& morita_example_names() {
  static const std::vector<std::string> names = {"R1", "R2", "R1N", "R2N", "M2Z4", "Z4F4"};
  return names;
}

MoritaContext morita_example(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

  const std::vector<Elem> sub = {0, 2};
  const std::vector<Elem> all = {0, 1, 2, 3};
  const std::vector<Elem> zero = {0};

  if (upper == "R1") return z4_context(sub, sub, "Morita(Z4,2Z4;2Z4,Z4)");
  if (upper == "R2") return z4_context(sub, zero, "Morita(Z4,2Z4;0,Z4)");
  if (upper == "R1N") return z4_context(sub, all, "Morita(Z4,2Z4;Z4,Z4)");
  if (upper == "R2N") return z4_context(all, sub, "Morita(Z4,Z4;2Z4,Z4)");
  if (upper == "M2Z4") return z4_context(all, all, "Morita(Z4,Z4;Z4,Z4)");
  if (upper == "Z4F4") {
    const FiniteRing z4 = zmod_ring(4);
    const FiniteRing f4 = galois_field(4);
    MoritaContext ctx;
    ctx.a_ring = z4;
    ctx.b_ring = f4;
    ctx.m = zero_bimodule(z4, f4);
    ctx.n = zero_bimodule(f4, z4);
    ctx.phi = {z4.zero()};
    ctx.psi = {f4.zero()};
    ctx.label = "Morita(Z4,0;0,F4)";
    return ctx;
  }
  raise(ErrorKind::InvalidArgument,
        "unknown Morita context '" + std::string(name) + "' (expected R1, R2, R1N, R2N, M2Z4, Z4F4)");
}

}  // namespace ringlab
