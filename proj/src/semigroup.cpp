#include "isemlab/semigroup.hpp"

#include <algorithm>

namespace isemlab {

namespace {

void check_entries(int n, const std::vector<Element>& table) {
  if (n < 1) throw IndexOutOfRangeError("order must be at least 1");
  if (static_cast<int>(table.size()) != n * n)
    throw IndexOutOfRangeError("table has " + std::to_string(table.size()) +
                               " entries, expected " + std::to_string(n * n));
  for (Element v : table)
    if (v < 0 || v >= n)
      throw IndexOutOfRangeError("table entry " + std::to_string(v + 1) +
                                 " out of range [1, " + std::to_string(n) +
                                 "]");
}

// Greedy generating set: add an element whenever it is not yet in the
// closure of the ones picked so far.
std::vector<Element> generating_set(int n, const std::vector<Element>& table) {
  std::vector<uint8_t> in_closure(n, 0);
  std::vector<Element> gens, frontier;
  for (Element x = 0; x < n; ++x) {
    if (in_closure[x]) continue;
    gens.push_back(x);
    frontier.assign(1, x);
    in_closure[x] = 1;
    while (!frontier.empty()) {
      Element a = frontier.back();
      frontier.pop_back();
      for (Element b = 0; b < n; ++b) {
        if (!in_closure[b]) continue;
        for (Element p : {table[a * n + b], table[b * n + a]}) {
          if (!in_closure[p]) {
            in_closure[p] = 1;
            frontier.push_back(p);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::optional<std::array<Element, 3>> associativity_violation(
    int n, const std::vector<Element>& table) {
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = table[x * n + y];
      for (Element z = 0; z < n; ++z)
        if (table[xy * n + z] != table[x * n + table[y * n + z]])
          return std::array<Element, 3>{x, y, z};
    }
  return std::nullopt;
}

std::optional<std::array<Element, 3>> associativity_violation_light(
    int n, const std::vector<Element>& table) {
  for (Element g : generating_set(n, table)) {
    for (Element x = 0; x < n; ++x) {
      Element xg = table[x * n + g];
      for (Element z = 0; z < n; ++z)
        if (table[xg * n + z] != table[x * n + table[g * n + z]])
          return std::array<Element, 3>{x, g, z};
    }
  }
  return std::nullopt;
}

FiniteSemigroup FiniteSemigroup::from_table(int n, std::vector<Element> table,
                                            std::vector<std::string> labels) {
  check_entries(n, table);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw IndexOutOfRangeError("label count does not match order");
  auto witness = n <= 16 ? associativity_violation(n, table)
                         : associativity_violation_light(n, table);
  if (witness) throw NotAssociativeError((*witness)[0], (*witness)[1], (*witness)[2]);
  return FiniteSemigroup(n, std::move(table), std::move(labels));
}

FiniteSemigroup FiniteSemigroup::trusted(int n, std::vector<Element> table,
                                         std::vector<std::string> labels) {
  check_entries(n, table);
  return FiniteSemigroup(n, std::move(table), std::move(labels));
}

std::string FiniteSemigroup::label(Element x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x + 1);
}

bool UnaryMap::is_permutation() const {
  int n = size();
  std::vector<uint8_t> seen(n, 0);
  for (Element v : images) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

NaturalOrder::NaturalOrder(int n, std::vector<uint8_t> rel)
    : n_(n), leq_(std::move(rel)) {
  for (Element a = 0; a < n_; ++a) {
    if (!leq(a, a)) throw Error("natural order not reflexive");
    for (Element b = 0; b < n_; ++b) {
      if (a != b && leq(a, b) && leq(b, a))
        throw Error("natural order not antisymmetric");
      for (Element c = 0; c < n_; ++c)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          throw Error("natural order not transitive");
    }
  }
}

std::vector<std::pair<Element, Element>> NaturalOrder::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element b = 0; b < n_; ++b)
    for (Element a = 0; a < n_; ++a)
      if (leq(b, a)) out.emplace_back(b, a);
  return out;
}

bool is_commutative(const FiniteSemigroup& s) {
  int n = s.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (s.product(x, y) != s.product(y, x)) return false;
  return true;
}

std::vector<Element> idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element e = 0; e < s.order(); ++e)
    if (s.product(e, e) == e) out.push_back(e);
  return out;
}

bool is_band(const FiniteSemigroup& s) {
  for (Element e = 0; e < s.order(); ++e)
    if (s.product(e, e) != e) return false;
  return true;
}

bool is_regular(const FiniteSemigroup& s) {
  int n = s.order();
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      found = s.product(s.product(x, y), x) == x;
    if (!found) return false;
  }
  return true;
}

bool is_inverse_semigroup(const FiniteSemigroup& s) {
  if (!is_regular(s)) return false;
  auto es = idempotents(s);
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (s.product(es[i], es[j]) != s.product(es[j], es[i])) return false;
  return true;
}

UnaryMap inversion_map(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<Element> images(n, -1);
  if (is_inverse_semigroup(s)) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (s.product(s.product(x, y), x) == x &&
            s.product(s.product(y, x), y) == y) {
          if (images[x] != -1) throw NotInverseOrCompletelyRegularError();
          images[x] = y;
        }
      }
      if (images[x] == -1) throw NotInverseOrCompletelyRegularError();
    }
    return UnaryMap{std::move(images)};
  }
  // Completely regular case: the group inverse inside the subgroup
  // containing x is the unique y with xyx = x, yxy = y and xy = yx.
  // An element outside every subgroup has no such y.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s.product(x, y) == s.product(y, x) &&
          s.product(s.product(x, y), x) == x &&
          s.product(s.product(y, x), y) == y) {
        images[x] = y;
        break;
      }
    }
    if (images[x] == -1) throw NotInverseOrCompletelyRegularError();
  }
  return UnaryMap{std::move(images)};
}

NaturalOrder natural_partial_order(const FiniteSemigroup& s) {
  if (!is_inverse_semigroup(s)) throw NotInverseError();
  UnaryMap inv = inversion_map(s);
  int n = s.order();
  // b <= a iff b = e*a for an idempotent e; equivalently b*a^-1 is
  // idempotent and b = b*a^-1*a.
  std::vector<uint8_t> leq(n * n, 0);
  for (Element b = 0; b < n; ++b)
    for (Element a = 0; a < n; ++a) {
      Element e = s.product(b, inv(a));
      leq[b * n + a] = (s.product(e, e) == e && s.product(e, a) == b) ? 1 : 0;
    }
  return NaturalOrder(n, std::move(leq));
}

bool is_cancellative(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<uint8_t> seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      Element p = s.product(x, a);
      if (seen[p]) return false;
      seen[p] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element a = 0; a < n; ++a) {
      Element p = s.product(a, x);
      if (seen[p]) return false;
      seen[p] = 1;
    }
  }
  return true;
}

}  // namespace isemlab
