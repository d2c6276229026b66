#include "isemlab/structure.hpp"

#include <algorithm>
#include <map>

namespace isemlab {

namespace {

// Classes of an equivalence given by a key per element; class ids numbered
// by first occurrence.
template <typename Key>
std::pair<std::vector<int>, std::vector<std::vector<Element>>> classify(
    const std::vector<Key>& keys) {
  int n = static_cast<int>(keys.size());
  std::map<Key, int> ids;
  std::vector<int> cls(n);
  std::vector<std::vector<Element>> members;
  for (Element x = 0; x < n; ++x) {
    auto [it, fresh] = ids.try_emplace(keys[x], static_cast<int>(members.size()));
    if (fresh) members.emplace_back();
    cls[x] = it->second;
    members[it->second].push_back(x);
  }
  return {std::move(cls), std::move(members)};
}

}  // namespace

GreenPartition green_relations(const FiniteSemigroup& s) {
  int n = s.order();
  // Principal ideals in S^1: xS^1 = {x} + xS, S^1x = {x} + Sx.
  std::vector<std::vector<uint8_t>> right(n, std::vector<uint8_t>(n, 0));
  std::vector<std::vector<uint8_t>> left(n, std::vector<uint8_t>(n, 0));
  for (Element x = 0; x < n; ++x) {
    right[x][x] = left[x][x] = 1;
    for (Element y = 0; y < n; ++y) {
      right[x][s.product(x, y)] = 1;
      left[x][s.product(y, x)] = 1;
    }
  }

  GreenPartition g;
  std::tie(g.r_class, g.r_classes) = classify(right);
  std::tie(g.l_class, g.l_classes) = classify(left);

  std::vector<std::pair<int, int>> h_keys(n);
  for (Element x = 0; x < n; ++x) h_keys[x] = {g.r_class[x], g.l_class[x]};
  std::tie(g.h_class, g.h_classes) = classify(h_keys);

  // D = R o L: x D y iff some z has x R z and z L y. Key each element by
  // the set of L-classes met by its R-class.
  std::vector<std::vector<int>> d_keys(n);
  for (Element x = 0; x < n; ++x) {
    std::vector<int> met;
    for (Element z : g.r_classes[g.r_class[x]]) met.push_back(g.l_class[z]);
    std::sort(met.begin(), met.end());
    met.erase(std::unique(met.begin(), met.end()), met.end());
    d_keys[x] = std::move(met);
  }
  std::tie(g.d_class, g.d_classes) = classify(d_keys);
  return g;
}

bool is_completely_regular(const FiniteSemigroup& s) {
  GreenPartition g = green_relations(s);
  int n = s.order();
  std::vector<uint8_t> has_idem(g.h_classes.size(), 0);
  for (Element e = 0; e < n; ++e)
    if (s.product(e, e) == e) has_idem[g.h_class[e]] = 1;
  for (Element x = 0; x < n; ++x)
    if (!has_idem[g.h_class[x]]) return false;
  return true;
}

bool is_clifford(const FiniteSemigroup& s) {
  if (!is_inverse_semigroup(s)) return false;
  UnaryMap inv = inversion_map(s);
  for (Element x = 0; x < s.order(); ++x)
    if (s.product(x, inv(x)) != s.product(inv(x), x)) return false;
  return true;
}

Element MaximalSubgroup::local_of(Element parent_id) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_id);
  if (it == elements.end() || *it != parent_id)
    throw IndexOutOfRangeError("element is not in this subgroup");
  return static_cast<Element>(it - elements.begin());
}

MaximalSubgroup maximal_subgroup_at(const FiniteSemigroup& s, Element e) {
  if (s.product(e, e) != e) throw NotAGroupError();
  GreenPartition g = green_relations(s);
  std::vector<Element> members = g.h_classes[g.h_class[e]];
  int k = static_cast<int>(members.size());
  std::vector<Element> local(s.order(), -1);
  for (int i = 0; i < k; ++i) local[members[i]] = i;
  std::vector<Element> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Element p = s.product(members[i], members[j]);
      if (local[p] == -1) throw NotAGroupError();
      table[i * k + j] = local[p];
    }
  return MaximalSubgroup{e, std::move(members),
                         FiniteSemigroup::from_table(k, std::move(table))};
}

CliffordDecomposition::CliffordDecomposition(const FiniteSemigroup& s)
    : parent_(&s) {
  if (!is_clifford(s)) throw NotCliffordError();
  idems_ = idempotents(s);
  group_of_.assign(s.order(), -1);
  for (size_t i = 0; i < idems_.size(); ++i) {
    groups_.push_back(maximal_subgroup_at(s, idems_[i]));
    for (Element x : groups_.back().elements) {
      if (group_of_[x] != -1) throw NotCliffordError();
      group_of_[x] = static_cast<int>(i);
    }
  }
  for (Element x = 0; x < s.order(); ++x)
    if (group_of_[x] == -1) throw NotCliffordError();
}

Element CliffordDecomposition::meet(Element e, Element f) const {
  return parent_->product(e, f);
}

bool CliffordDecomposition::leq(Element e, Element f) const {
  return parent_->product(e, f) == e;
}

Element CliffordDecomposition::link(Element b, Element c, Element g) const {
  if (!leq(c, b)) throw IndexOutOfRangeError("link requires c <= b");
  return parent_->product(c, g);
}

CliffordDecomposition clifford_decomposition(const FiniteSemigroup& s) {
  return CliffordDecomposition(s);
}

}  // namespace isemlab
