#include "isemlab/nilpotence.hpp"

#include <algorithm>
#include <set>

#include "isemlab/structure.hpp"

namespace isemlab {

namespace {

Element find_identity(const FiniteSemigroup& s) {
  int n = s.order();
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = s.product(e, x) == x && s.product(x, e) == x;
    if (ok) return e;
  }
  return -1;
}

std::vector<Element> inverse_table(const FiniteSemigroup& g, Element e) {
  int n = g.order();
  std::vector<Element> inv(n, -1);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.product(x, y) == e && g.product(y, x) == e) {
        inv[x] = y;
        break;
      }
  return inv;
}

// Smallest subsemigroup containing `seed`; in a finite group this is the
// generated subgroup.
std::vector<Element> closure(const FiniteSemigroup& g,
                             std::vector<Element> seed) {
  std::vector<uint8_t> in(g.order(), 0);
  for (Element x : seed) in[x] = 1;
  std::vector<Element> frontier = seed;
  while (!frontier.empty()) {
    Element a = frontier.back();
    frontier.pop_back();
    for (Element b = 0; b < g.order(); ++b) {
      if (!in[b]) continue;
      for (Element p : {g.product(a, b), g.product(b, a)})
        if (!in[p]) {
          in[p] = 1;
          frontier.push_back(p);
        }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

}  // namespace

bool is_group(const FiniteSemigroup& s) {
  Element e = find_identity(s);
  if (e == -1) return false;
  auto inv = inverse_table(s, e);
  return std::find(inv.begin(), inv.end(), -1) == inv.end();
}

CentralSeries lower_central_series(const FiniteSemigroup& g) {
  if (!is_group(g)) throw NotAGroupError();
  int n = g.order();
  Element e = find_identity(g);
  auto inv = inverse_table(g, e);

  CentralSeries series;
  std::vector<Element> current(n);
  for (Element x = 0; x < n; ++x) current[x] = x;
  series.chain.push_back(current);

  while (true) {
    std::vector<Element> commutators{e};
    for (Element a = 0; a < n; ++a)
      for (Element b : current)
        commutators.push_back(
            g.product(g.product(inv[a], inv[b]), g.product(a, b)));
    std::sort(commutators.begin(), commutators.end());
    commutators.erase(std::unique(commutators.begin(), commutators.end()),
                      commutators.end());
    std::vector<Element> next = closure(g, std::move(commutators));
    if (next == current) break;
    series.chain.push_back(next);
    current = std::move(next);
  }

  series.terminates = current.size() == 1;
  if (series.terminates)
    series.nilpotency_class = static_cast<int>(series.chain.size()) - 1;
  return series;
}

bool is_nilpotent_group(const FiniteSemigroup& g) {
  return lower_central_series(g).terminates;
}

bool is_nilpotent_group_sylow(const FiniteSemigroup& g) {
  int n = g.order();
  // Independent of the series route: own identity, inverses and closure.
  Element e = -1;
  for (Element c = 0; c < n && e == -1; ++c) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = g.product(c, x) == x && g.product(x, c) == x;
    if (ok) e = c;
  }
  if (e == -1) throw NotAGroupError();
  std::vector<Element> inv(n, -1);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (g.product(x, y) == e && g.product(y, x) == e) {
        inv[x] = y;
        break;
      }
  for (Element x = 0; x < n; ++x)
    if (inv[x] == -1) throw NotAGroupError();

  auto close = [&](std::vector<Element> seed) {
    std::vector<uint8_t> in(n, 0);
    for (Element x : seed) in[x] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (Element b = 0; b < n; ++b) {
          if (!in[b]) continue;
          Element p = g.product(a, b);
          if (!in[p]) {
            in[p] = 1;
            grew = true;
          }
        }
      }
    }
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x)
      if (in[x]) out.push_back(x);
    return out;
  };

  // Full subgroup lattice: grow every known subgroup by one outside element.
  std::set<std::vector<Element>> subgroups;
  std::vector<std::vector<Element>> queue{{e}};
  subgroups.insert(queue.front());
  while (!queue.empty()) {
    std::vector<Element> h = std::move(queue.back());
    queue.pop_back();
    for (Element x = 0; x < n; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Element> seed = h;
      seed.push_back(x);
      std::vector<Element> k = close(std::move(seed));
      if (subgroups.insert(k).second) queue.push_back(k);
    }
  }

  for (int p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    int sylow_size = 1;
    for (int m = n; m % p == 0; m /= p) sylow_size *= p;
    for (const auto& h : subgroups) {
      if (static_cast<int>(h.size()) != sylow_size) continue;
      for (Element x = 0; x < n; ++x)
        for (Element a : h) {
          Element conj = g.product(g.product(inv[x], a), x);
          if (!std::binary_search(h.begin(), h.end(), conj)) return false;
        }
    }
  }
  return true;
}

bool is_nilpotent_clifford(const FiniteSemigroup& s) {
  CliffordDecomposition dec(s);
  for (const auto& sub : dec.groups())
    if (!is_nilpotent_group(sub.group)) return false;
  return true;
}

}  // namespace isemlab
