#include "naive_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

bool associative(int n, const uint8_t* t) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      uint8_t xy = t[x * n + y];
      for (int z = 0; z < n; ++z)
        if (t[xy * n + z] != t[x * n + t[y * n + z]]) return false;
    }
  return true;
}

}  // namespace

std::vector<uint8_t> min_relabeling(int n, const std::vector<uint8_t>& table) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<uint8_t> best = table, relabeled(table.size());
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        relabeled[p[x] * n + p[y]] = static_cast<uint8_t>(p[table[x * n + y]]);
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

bool accepts(Kind kind, int n, const std::vector<uint8_t>& t) {
  switch (kind) {
    case Kind::all:
      return true;
    case Kind::band:
      for (int x = 0; x < n; ++x)
        if (t[x * n + x] != x) return false;
      return true;
    case Kind::group: {
      int e = -1;
      for (int c = 0; c < n && e == -1; ++c) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          ok = t[c * n + x] == x && t[x * n + c] == x;
        if (ok) e = c;
      }
      if (e == -1) return false;
      for (int x = 0; x < n; ++x) {
        bool inv = false;
        for (int y = 0; y < n && !inv; ++y)
          inv = t[x * n + y] == e && t[y * n + x] == e;
        if (!inv) return false;
      }
      return true;
    }
    case Kind::inverse: {
      for (int x = 0; x < n; ++x) {
        bool reg = false;
        for (int y = 0; y < n && !reg; ++y)
          reg = t[t[x * n + y] * n + x] == x;
        if (!reg) return false;
      }
      for (int a = 0; a < n; ++a) {
        if (t[a * n + a] != a) continue;
        for (int b = 0; b < n; ++b)
          if (t[b * n + b] == b && t[a * n + b] != t[b * n + a]) return false;
      }
      return true;
    }
  }
  return false;
}

std::set<std::vector<uint8_t>> all_semigroups(int n) {
  std::set<std::vector<uint8_t>> found;
  int cells = n * n;
  std::vector<uint8_t> t(cells, 0);
  while (true) {
    if (associative(n, t.data())) found.insert(min_relabeling(n, t));
    int pos = cells - 1;
    while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return found;
}

std::set<std::vector<uint8_t>> filtered(
    Kind kind, int n, const std::set<std::vector<uint8_t>>& classes) {
  std::set<std::vector<uint8_t>> out;
  for (const auto& t : classes)
    if (accepts(kind, n, t)) out.insert(t);
  return out;
}

}  // namespace oracle
