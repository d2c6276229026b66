#include "isemlab/samples.hpp"

#include <algorithm>
#include <numeric>

namespace isemlab::samples {

namespace {

FiniteSemigroup from_rule(int n, auto&& rule) {
  std::vector<Element> t(static_cast<size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x * n + y] = rule(x, y);
  return FiniteSemigroup::from_table(n, std::move(t));
}

// Table of a permutation group given as image vectors, composed left to
// right: (f*g)(i) = g(f(i)).
FiniteSemigroup from_permutations(const std::vector<std::vector<int>>& perms) {
  int n = static_cast<int>(perms.size());
  int deg = static_cast<int>(perms[0].size());
  auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == p) return i;
    throw Error("composition left the permutation set");
  };
  std::vector<Element> t(static_cast<size_t>(n) * n);
  std::vector<int> comp(deg);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      for (int i = 0; i < deg; ++i) comp[i] = perms[g][perms[f][i]];
      t[f * n + g] = index_of(comp);
    }
  return FiniteSemigroup::from_table(n, std::move(t));
}

}  // namespace

FiniteSemigroup trivial_semigroup() { return from_rule(1, [](int, int) { return 0; }); }

FiniteSemigroup cyclic_group(int n) {
  return from_rule(n, [n](int x, int y) { return (x + y) % n; });
}

FiniteSemigroup chain_semilattice(int n) {
  return from_rule(n, [](int x, int y) { return std::min(x, y); });
}

FiniteSemigroup left_zero_band(int n) {
  return from_rule(n, [](int x, int) { return x; });
}

FiniteSemigroup right_zero_band(int n) {
  return from_rule(n, [](int, int y) { return y; });
}

FiniteSemigroup brandt_b2() {
  // 0:(1,1) 1:(1,2) 2:(2,1) 3:(2,2) 4:zero
  auto row = [](int e) { return e / 2; };
  auto col = [](int e) { return e % 2; };
  return from_rule(5, [&](int x, int y) {
    if (x == 4 || y == 4) return 4;
    if (col(x) != row(y)) return 4;
    return 2 * row(x) + col(y);
  });
}

FiniteSemigroup band_b4() {
  return FiniteSemigroup::from_table(
      4, {0, 2, 2, 0, 3, 1, 1, 3, 0, 2, 2, 0, 3, 1, 1, 3});
}

FiniteSemigroup dihedral_group(int m) {
  // Elements 0..m-1 are rotations r^i, m..2m-1 are reflections s*r^i.
  int n = 2 * m;
  return from_rule(n, [m](int x, int y) {
    bool xf = x >= m, yf = y >= m;
    int xi = x % m, yi = y % m;
    // (s^a r^xi)(s^b r^yi) = s^(a+b) r^(yi +- xi)
    int rot = yf ? (yi - xi + m) % m : (xi + yi) % m;
    return (xf != yf ? m : 0) + rot;
  });
}

FiniteSemigroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw DegreeTooLargeError("symmetric_group supports n in [1, 4]");
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  return from_permutations(perms);
}

FiniteSemigroup quaternion_group() {
  // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k. Axis products carry a sign:
  // i*j = k, j*k = i, k*i = j, and squares of i, j, k are -1.
  auto axis = [](int e) { return e / 2; };  // 0:unit 1:i 2:j 3:k
  auto sign = [](int e) { return e % 2; };  // 0:+ 1:-
  return from_rule(8, [&](int x, int y) {
    int ax = axis(x), ay = axis(y);
    int s = sign(x) ^ sign(y);
    int az;
    if (ax == 0) az = ay;
    else if (ay == 0) az = ax;
    else if (ax == ay) { az = 0; s ^= 1; }
    else {
      az = 6 - ax - ay;                 // the remaining axis
      if ((ax % 3) + 1 != ay) s ^= 1;   // against cyclic order i->j->k
    }
    return 2 * az + s;
  });
}

FiniteSemigroup with_zero(const FiniteSemigroup& s) {
  int n = s.order();
  return from_rule(n + 1, [&](int x, int y) {
    if (x == n || y == n) return n;
    return s.product(x, y);
  });
}

FiniteSemigroup with_identity(const FiniteSemigroup& s) {
  int n = s.order();
  return from_rule(n + 1, [&](int x, int y) {
    if (x == n) return y;
    if (y == n) return x;
    return s.product(x, y);
  });
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  int na = a.order(), nb = b.order();
  return from_rule(na * nb, [&](int x, int y) {
    return a.product(x / nb, y / nb) * nb + b.product(x % nb, y % nb);
  });
}

}  // namespace isemlab::samples
