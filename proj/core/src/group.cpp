#include "ringlab/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "ringlab/error.hpp"

namespace ringlab {

Elem FiniteGroup::inverse(Elem a) const {
  for (int b = 0; b < order; ++b)
    if (op(a, static_cast<Elem>(b)) == identity) return static_cast<Elem>(b);
  raise(ErrorKind::AxiomViolation,
        "group '" + label + "': no inverse for " + element_names[a]);
}

int FiniteGroup::element_order(Elem a) const {
  Elem x = a;
  int k = 1;
  while (x != identity) {
    x = op(x, a);
    ++k;
    if (k > order)
      raise(ErrorKind::AxiomViolation, "group '" + label + "': runaway element order");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (op(static_cast<Elem>(a), static_cast<Elem>(b)) !=
          op(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

void validate_group(const FiniteGroup& g) {
  const int n = g.order;
  if (n < 1 || g.mul.size() != static_cast<size_t>(n) * n)
    raise(ErrorKind::InvalidArgument, "group '" + g.label + "': bad table shape");
  for (Elem v : g.mul)
    if (v >= n) raise(ErrorKind::InvalidArgument, "group '" + g.label + "': entry out of range");
  const auto el = [](int x) { return static_cast<Elem>(x); };
  for (int a = 0; a < n; ++a)
    if (g.op(g.identity, el(a)) != el(a) || g.op(el(a), g.identity) != el(a))
      raise(ErrorKind::AxiomViolation,
            "group '" + g.label + "': identity fails at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Elem ab = g.op(el(a), el(b));
      for (int c = 0; c < n; ++c)
        if (g.op(ab, el(c)) != g.op(el(a), g.op(el(b), el(c))))
          raise(ErrorKind::AxiomViolation,
                "group '" + g.label + "': associativity fails at (" + std::to_string(a) +
                    ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  for (int a = 0; a < n; ++a) g.inverse(el(a));  // throws when missing
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  FiniteGroup g;
  g.order = n;
  g.identity = 0;
  g.label = "C" + std::to_string(n);
  g.mul.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
  g.element_names.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    if (a == 0) g.element_names.push_back("e");
    else if (a == 1) g.element_names.push_back("g");
    else g.element_names.push_back("g^" + std::to_string(a));
  }
  return g;
}

FiniteGroup group_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.identity = static_cast<Elem>(a.identity + b.identity * a.order);
  g.label = a.label + "x" + b.label;
  g.mul.resize(static_cast<size_t>(g.order) * g.order);
  for (int x = 0; x < g.order; ++x) {
    const Elem xa = static_cast<Elem>(x % a.order);
    const Elem xb = static_cast<Elem>(x / a.order);
    for (int y = 0; y < g.order; ++y) {
      const Elem ya = static_cast<Elem>(y % a.order);
      const Elem yb = static_cast<Elem>(y / a.order);
      g.mul[static_cast<size_t>(x) * g.order + y] =
          static_cast<Elem>(a.op(xa, ya) + b.op(xb, yb) * a.order);
    }
  }
  g.element_names.reserve(static_cast<size_t>(g.order));
  for (int x = 0; x < g.order; ++x)
    g.element_names.push_back("(" + a.element_names[static_cast<size_t>(x % a.order)] + "," +
                              b.element_names[static_cast<size_t>(x / a.order)] + ")");
  return g;
}

namespace {

// Permutation groups are built from explicit point maps; composition is
// (fg)(x) = f(g(x)).
FiniteGroup permutation_group(std::vector<std::vector<int>> perms,
                              std::vector<std::string> names, std::string label) {
  const int n = static_cast<int>(perms.size());
  const int pts = static_cast<int>(perms.front().size());
  FiniteGroup g;
  g.order = n;
  g.label = std::move(label);
  g.element_names = std::move(names);
  g.mul.resize(static_cast<size_t>(n) * n);
  const auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[static_cast<size_t>(i)] == p) return i;
    raise(ErrorKind::InvalidArgument, "permutation set not closed under composition");
  };
  for (int i = 0; i < n; ++i) {
    bool is_id = true;
    for (int x = 0; x < pts; ++x) is_id &= perms[static_cast<size_t>(i)][static_cast<size_t>(x)] == x;
    if (is_id) g.identity = static_cast<Elem>(i);
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(static_cast<size_t>(pts));
      for (int x = 0; x < pts; ++x)
        comp[static_cast<size_t>(x)] =
            perms[static_cast<size_t>(i)][static_cast<size_t>(perms[static_cast<size_t>(j)][static_cast<size_t>(x)])];
      g.mul[static_cast<size_t>(i) * n + j] = static_cast<Elem>(index_of(comp));
    }
  }
  return g;
}

}  // namespace

FiniteGroup symmetric_3() {
  return permutation_group(
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}},
      {"()", "(123)", "(132)", "(12)", "(13)", "(23)"}, "S3");
}

FiniteGroup dihedral_4() {
  // Rotations r0..r3 of the square 0-1-2-3, then reflections s0..s3.
  std::vector<std::vector<int>> perms;
  std::vector<std::string> names;
  std::vector<int> r = {1, 2, 3, 0};
  std::vector<int> cur = {0, 1, 2, 3};
  for (int i = 0; i < 4; ++i) {
    perms.push_back(cur);
    names.push_back("r" + std::to_string(i));
    std::vector<int> next(4);
    for (int x = 0; x < 4; ++x) next[static_cast<size_t>(x)] = r[static_cast<size_t>(cur[static_cast<size_t>(x)])];
    cur = next;
  }
  std::vector<int> s = {1, 0, 3, 2};  // reflection swapping 0-1 and 2-3
  cur = s;
  for (int i = 0; i < 4; ++i) {
    perms.push_back(cur);
    names.push_back("s" + std::to_string(i));
    std::vector<int> next(4);
    for (int x = 0; x < 4; ++x) next[static_cast<size_t>(x)] = r[static_cast<size_t>(cur[static_cast<size_t>(x)])];
    cur = next;
  }
  return permutation_group(std::move(perms), std::move(names), "D4");
}

FiniteGroup quaternion_8() {
  // Elements (sign, axis) with axes 1, i, j, k; axis products carry signs.
  //   i*j = k, j*k = i, k*i = j, and x*x = -1 for x in {i, j, k}.
  static constexpr std::array<std::array<int, 4>, 4> axis = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  }};
  FiniteGroup g;
  g.order = 8;
  g.identity = 0;
  g.label = "Q8";
  g.element_names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  g.mul.resize(64);
  const auto enc = [](int ax, int sg) { return static_cast<Elem>(2 * ax + (sg < 0 ? 1 : 0)); };
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ax = x / 2, sx = (x % 2) ? -1 : +1;
      const int ay = y / 2, sy = (y % 2) ? -1 : +1;
      g.mul[static_cast<size_t>(x) * 8 + y] =
          enc(axis[static_cast<size_t>(ax)][static_cast<size_t>(ay)],
              sx * sy * sign[static_cast<size_t>(ax)][static_cast<size_t>(ay)]);
    }
  return g;
}

const std::vector<FiniteGroup>& standard_groups() {
  static const std::vector<FiniteGroup> catalog = [] {
    std::vector<FiniteGroup> gs;
    gs.push_back(cyclic_group(1));
    gs.push_back(cyclic_group(2));
    gs.push_back(cyclic_group(3));
    gs.push_back(cyclic_group(4));
    gs.push_back(group_product(cyclic_group(2), cyclic_group(2)));
    gs.push_back(cyclic_group(5));
    gs.push_back(symmetric_3());
    gs.push_back(cyclic_group(8));
    gs.push_back(dihedral_4());
    gs.push_back(quaternion_8());
    for (const FiniteGroup& g : gs) validate_group(g);
    return gs;
  }();
  return catalog;
}

std::optional<FiniteGroup> group_by_name(std::string_view name) {
  const auto lower = [](std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
  };
  const std::string target = lower(name);
  for (const FiniteGroup& g : standard_groups())
    if (lower(g.label) == target) return g;
  return std::nullopt;
}

bool is_p_group(const FiniteGroup& g, int p) {
  if (p < 2) raise(ErrorKind::InvalidArgument, "p must be a prime >= 2");
  for (int a = 0; a < g.order; ++a) {
    int k = g.element_order(static_cast<Elem>(a));
    while (k % p == 0) k /= p;
    if (k != 1) return false;
  }
  return true;
}

}  // namespace ringlab
