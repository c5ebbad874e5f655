#include "ringlab/ring.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

std::string describe(const FiniteRing& r, Elem e) {
  return r.element_name(e) + " (#" + std::to_string(e) + ")";
}

[[noreturn]] void axiom_fail(const FiniteRing& r, const std::string& what) {
  raise(ErrorKind::AxiomViolation, "axiom violation in '" + r.label() + "': " + what);
}

std::vector<std::string> default_names(int order) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(order));
  for (int i = 0; i < order; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

FiniteRing FiniteRing::make(RingData data, Validate validate) {
  const int n = data.order;
  if (n < 1) raise(ErrorKind::InvalidArgument, "ring order must be positive");
  const size_t cells = static_cast<size_t>(n) * static_cast<size_t>(n);
  if (data.add.size() != cells || data.mul.size() != cells)
    raise(ErrorKind::InvalidArgument,
          "ring '" + data.label + "': tables must be order x order");
  for (Elem v : data.add)
    if (v >= n) raise(ErrorKind::InvalidArgument,
                      "ring '" + data.label + "': addition table entry out of range");
  for (Elem v : data.mul)
    if (v >= n) raise(ErrorKind::InvalidArgument,
                      "ring '" + data.label + "': multiplication table entry out of range");
  if (data.zero >= n || data.one >= n)
    raise(ErrorKind::InvalidArgument, "ring '" + data.label + "': zero/one out of range");
  if (n > 1 && data.zero == data.one)
    raise(ErrorKind::AxiomViolation,
          "axiom violation in '" + data.label + "': zero equals one in a ring of order > 1");
  if (!data.element_names.empty() && data.element_names.size() != static_cast<size_t>(n))
    raise(ErrorKind::InvalidArgument, "ring '" + data.label + "': element_names size mismatch");

  FiniteRing r;
  r.order_ = n;
  r.add_ = std::move(data.add);
  r.mul_ = std::move(data.mul);
  r.zero_ = data.zero;
  r.one_ = data.one;
  r.label_ = std::move(data.label);
  r.names_ = data.element_names.empty() ? default_names(n) : std::move(data.element_names);

  // The additive inverse table is needed by sub(); its existence is a
  // structural requirement even when the full axiom scan is skipped.
  r.neg_.assign(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (r.add(static_cast<Elem>(a), static_cast<Elem>(b)) == r.zero_) {
        r.neg_[static_cast<size_t>(a)] = static_cast<Elem>(b);
        found = true;
        break;
      }
    }
    if (!found)
      axiom_fail(r, "additive inverse missing for a=" + describe(r, static_cast<Elem>(a)));
  }

  if (validate == Validate::On) r.revalidate();
  return r;
}

bool FiniteRing::is_commutative() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) !=
          mul(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

void FiniteRing::revalidate() const {
  const int n = order_;
  const auto el = [](int x) { return static_cast<Elem>(x); };

  for (int a = 0; a < n; ++a) {
    if (add(el(a), zero_) != el(a) || add(zero_, el(a)) != el(a))
      axiom_fail(*this, "additive identity fails at a=" + describe(*this, el(a)));
    if (add(el(a), neg_[static_cast<size_t>(a)]) != zero_)
      axiom_fail(*this, "additive inverse fails at a=" + describe(*this, el(a)));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add(el(a), el(b)) != add(el(b), el(a)))
        axiom_fail(*this, "additive commutativity fails: a+b != b+a at a=" +
                              describe(*this, el(a)) + ", b=" + describe(*this, el(b)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem ab = add(el(a), el(b));
      for (int c = 0; c < n; ++c)
        if (add(ab, el(c)) != add(el(a), add(el(b), el(c))))
          axiom_fail(*this, "additive associativity fails: (a+b)+c != a+(b+c) at a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) +
                                ", c=" + std::to_string(c));
    }

  for (int a = 0; a < n; ++a)
    if (mul(el(a), one_) != el(a) || mul(one_, el(a)) != el(a))
      axiom_fail(*this, "multiplicative identity fails at a=" + describe(*this, el(a)));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem ab = mul(el(a), el(b));
      for (int c = 0; c < n; ++c)
        if (mul(ab, el(c)) != mul(el(a), mul(el(b), el(c))))
          axiom_fail(*this, "multiplicative associativity fails: (a*b)*c != a*(b*c) at a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) +
                                ", c=" + std::to_string(c));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul(el(a), add(el(b), el(c))) != add(mul(el(a), el(b)), mul(el(a), el(c))))
          axiom_fail(*this, "left distributivity fails: a*(b+c) != a*b + a*c at a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) +
                                ", c=" + std::to_string(c));
        if (mul(add(el(a), el(b)), el(c)) != add(mul(el(a), el(c)), mul(el(b), el(c))))
          axiom_fail(*this, "right distributivity fails: (a+b)*c != a*c + b*c at a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) +
                                ", c=" + std::to_string(c));
      }

  if (n > 1 && zero_ == one_) axiom_fail(*this, "zero equals one in a ring of order > 1");
}

FiniteRing zmod_ring(int n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "Z(n) requires n >= 1");
  RingData d;
  d.order = n;
  d.add.resize(static_cast<size_t>(n) * n);
  d.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.add[static_cast<size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
      d.mul[static_cast<size_t>(a) * n + b] = static_cast<Elem>((a * b) % n);
    }
  d.zero = 0;
  d.one = static_cast<Elem>(n > 1 ? 1 : 0);
  d.label = "Z" + std::to_string(n);
  return FiniteRing::make(std::move(d), FiniteRing::Validate::Off);
}

namespace {

// Extension field F_{p^k} = F_p[a] / (modulus), modulus monic of degree k
// with ascending coefficients. Elements are base-p digit strings, least
// significant digit = constant term.
FiniteRing extension_field(int p, const std::vector<int>& modulus, const std::string& label) {
  const int k = static_cast<int>(modulus.size()) - 1;
  int q = 1;
  for (int i = 0; i < k; ++i) q *= p;

  const auto digits = [&](int x) {
    std::vector<int> d(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      d[static_cast<size_t>(i)] = x % p;
      x /= p;
    }
    return d;
  };
  const auto pack = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * p + d[static_cast<size_t>(i)];
    return x;
  };

  RingData data;
  data.order = q;
  data.add.resize(static_cast<size_t>(q) * q);
  data.mul.resize(static_cast<size_t>(q) * q);
  for (int x = 0; x < q; ++x) {
    const auto dx = digits(x);
    for (int y = 0; y < q; ++y) {
      const auto dy = digits(y);
      std::vector<int> sum(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) sum[static_cast<size_t>(i)] = (dx[static_cast<size_t>(i)] + dy[static_cast<size_t>(i)]) % p;
      data.add[static_cast<size_t>(x) * q + y] = static_cast<Elem>(pack(sum));

      std::vector<int> prod(static_cast<size_t>(2 * k - 1), 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<size_t>(i + j)] =
              (prod[static_cast<size_t>(i + j)] + dx[static_cast<size_t>(i)] * dy[static_cast<size_t>(j)]) % p;
      for (int d = 2 * k - 2; d >= k; --d) {
        const int c = prod[static_cast<size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int j = 0; j < k; ++j)
          prod[static_cast<size_t>(d - k + j)] =
              ((prod[static_cast<size_t>(d - k + j)] - c * modulus[static_cast<size_t>(j)]) % p + p) % p;
      }
      prod.resize(static_cast<size_t>(k));
      data.mul[static_cast<size_t>(x) * q + y] = static_cast<Elem>(pack(prod));
    }
  }
  data.zero = 0;
  data.one = 1;
  data.label = label;
  data.element_names.reserve(static_cast<size_t>(q));
  for (int x = 0; x < q; ++x) {
    const auto d = digits(x);
    std::string name;
    for (int i = k - 1; i >= 0; --i) {
      const int c = d[static_cast<size_t>(i)];
      if (c == 0) continue;
      if (!name.empty()) name += "+";
      if (i == 0) {
        name += std::to_string(c);
      } else {
        if (c != 1) name += std::to_string(c);
        name += "a";
        if (i > 1) name += "^" + std::to_string(i);
      }
    }
    data.element_names.push_back(name.empty() ? "0" : name);
  }
  return FiniteRing::make(std::move(data), FiniteRing::Validate::Off);
}

}  // namespace

FiniteRing galois_field(int q) {
  switch (q) {
    case 2:
    case 3:
    case 5:
    case 7: {
      FiniteRing r = zmod_ring(q);
      r.set_label("F" + std::to_string(q));
      return r;
    }
    case 4:
      return extension_field(2, {1, 1, 1}, "F4");
    case 8:
      return extension_field(2, {1, 1, 0, 1}, "F8");
    case 9:
      return extension_field(3, {1, 0, 1}, "F9");
    default:
      raise(ErrorKind::InvalidArgument,
            "F(q) supports q in {2, 3, 4, 5, 7, 8, 9}; got " + std::to_string(q));
  }
}

FiniteRing zero_ring() {
  FiniteRing r = zmod_ring(1);
  r.set_label("0");
  return r;
}

}  // namespace ringlab
