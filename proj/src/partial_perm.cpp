#include "isemlab/partial_perm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "isemlab/enumerate.hpp"

namespace isemlab {

PartialPerm PartialPerm::make(int degree, std::vector<int> images) {
  if (static_cast<int>(images.size()) != degree)
    throw IndexOutOfRangeError("image vector does not match degree");
  std::vector<uint8_t> seen(degree, 0);
  for (int v : images) {
    if (v == undefined) continue;
    if (v < 0 || v >= degree)
      throw IndexOutOfRangeError("image point out of range");
    if (seen[v]) throw IndexOutOfRangeError("partial permutation not injective");
    seen[v] = 1;
  }
  return PartialPerm{degree, std::move(images)};
}

PartialPerm PartialPerm::empty_map(int degree) {
  return PartialPerm{degree, std::vector<int>(degree, undefined)};
}

PartialPerm PartialPerm::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return PartialPerm{degree, std::move(images)};
}

int PartialPerm::rank() const {
  int r = 0;
  for (int v : images) r += v != undefined;
  return r;
}

PartialPerm compose(const PartialPerm& f, const PartialPerm& g) {
  if (f.degree != g.degree) throw DegreeMismatchError();
  std::vector<int> images(f.degree, PartialPerm::undefined);
  for (int i = 0; i < f.degree; ++i)
    if (f.defined_at(i) && g.defined_at(f.images[i]))
      images[i] = g.images[f.images[i]];
  return PartialPerm{f.degree, std::move(images)};
}

PartialPerm invert(const PartialPerm& f) {
  std::vector<int> images(f.degree, PartialPerm::undefined);
  for (int i = 0; i < f.degree; ++i)
    if (f.defined_at(i)) images[f.images[i]] = i;
  return PartialPerm{f.degree, std::move(images)};
}

bool is_partial_identity(const PartialPerm& f) {
  for (int i = 0; i < f.degree; ++i)
    if (f.defined_at(i) && f.images[i] != i) return false;
  return true;
}

std::string emit_partial_perm(const PartialPerm& f) {
  std::ostringstream out;
  out << f.degree << ';';
  for (int v : f.images) out << ' ' << v + 1;
  return out.str();
}

PartialPerm parse_partial_perm(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError(1, "expected 'n; images'");
  int degree;
  try {
    degree = std::stoi(text.substr(0, semi));
  } catch (const std::exception&) {
    throw ParseError(1, "bad degree");
  }
  if (degree < 0) throw ParseError(1, "bad degree");
  std::istringstream ss(text.substr(semi + 1));
  std::vector<int> images;
  int v;
  while (ss >> v) images.push_back(v - 1);
  if (static_cast<int>(images.size()) != degree)
    throw ParseError(1, "expected " + std::to_string(degree) + " images");
  return PartialPerm::make(degree, std::move(images));
}

std::vector<PartialPerm> all_partial_perms(int degree) {
  std::vector<PartialPerm> out;
  std::vector<int> images(degree, PartialPerm::undefined);
  std::vector<uint8_t> used(degree, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == degree) {
      out.push_back(PartialPerm{degree, images});
      return;
    }
    images[pos] = PartialPerm::undefined;
    self(self, pos + 1);
    for (int v = 0; v < degree; ++v) {
      if (used[v]) continue;
      images[pos] = v;
      used[v] = 1;
      self(self, pos + 1);
      used[v] = 0;
    }
    images[pos] = PartialPerm::undefined;
  };
  rec(rec, 0);
  return out;
}

FiniteSemigroup monoid_In(int n) {
  if (n < 1 || n > 4)
    throw DegreeTooLargeError("monoid_In supports degrees 1 to 4");
  auto elems = all_partial_perms(n);
  int m = static_cast<int>(elems.size());
  std::map<PartialPerm, Element> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;

  std::vector<Element> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string lab;
    for (int v : elems[i].images) lab += static_cast<char>('0' + v + 1);
    labels[i] = lab;
    for (int j = 0; j < m; ++j)
      table[i * m + j] = index.at(compose(elems[i], elems[j]));
  }
  return FiniteSemigroup::from_table(m, std::move(table), std::move(labels));
}

std::vector<std::vector<Element>> inverse_subsemigroup_subsets(int n, int k) {
  if (n < 1 || n > 3)
    throw DegreeTooLargeError("subsemigroup search supports degrees 1 to 3");
  if (k < 1 || k > 8)
    throw OrderTooLargeError("subsemigroup search supports at most 8 elements");

  FiniteSemigroup in = monoid_In(n);
  auto elems = all_partial_perms(n);
  int m = in.order();
  std::vector<Element> inv_of(m);
  {
    std::map<PartialPerm, Element> index;
    for (int i = 0; i < m; ++i) index[elems[i]] = i;
    for (int i = 0; i < m; ++i) inv_of[i] = index.at(invert(elems[i]));
  }

  auto close = [&](std::vector<Element> seed) {
    std::set<Element> members(seed.begin(), seed.end());
    bool grew = true;
    while (grew && static_cast<int>(members.size()) <= k) {
      grew = false;
      std::vector<Element> snapshot(members.begin(), members.end());
      for (Element a : snapshot) {
        if (members.insert(inv_of[a]).second) grew = true;
        for (Element b : snapshot) {
          if (members.insert(in.product(a, b)).second) grew = true;
          if (members.insert(in.product(b, a)).second) grew = true;
        }
      }
    }
    return std::vector<Element>(members.begin(), members.end());
  };

  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> queue;
  for (Element x = 0; x < m; ++x) {
    auto c = close({x});
    if (static_cast<int>(c.size()) <= k && found.insert(c).second)
      queue.push_back(c);
  }
  while (!queue.empty()) {
    std::vector<Element> h = std::move(queue.back());
    queue.pop_back();
    for (Element x = 0; x < m; ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Element> seed = h;
      seed.push_back(x);
      auto c = close(std::move(seed));
      if (static_cast<int>(c.size()) <= k && found.insert(c).second)
        queue.push_back(c);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<FiniteSemigroup> subsemigroups_up_to_order(int n, int k) {
  FiniteSemigroup in = monoid_In(n);
  std::set<CanonicalTable> canon;
  for (const auto& subset : inverse_subsemigroup_subsets(n, k)) {
    int c = static_cast<int>(subset.size());
    std::vector<Element> local(in.order(), -1);
    for (int i = 0; i < c; ++i) local[subset[i]] = i;
    std::vector<Element> table(static_cast<size_t>(c) * c);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j)
        table[i * c + j] = local[in.product(subset[i], subset[j])];
    canon.insert(canonical_form(FiniteSemigroup::trusted(c, std::move(table))));
  }
  std::vector<FiniteSemigroup> out;
  out.reserve(canon.size());
  for (const auto& t : canon) out.push_back(t.to_semigroup());
  return out;
}

}  // namespace isemlab
