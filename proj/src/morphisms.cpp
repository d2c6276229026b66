#include "isemlab/morphisms.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "isemlab/structure.hpp"

namespace isemlab {

namespace {

// Invariant fingerprint preserved by every automorphism: idempotency,
// H-class size, and the index/period of the generated cyclic subsemigroup.
using Fingerprint = std::tuple<bool, int, int, int>;

std::vector<Fingerprint> fingerprints(const FiniteSemigroup& s) {
  int n = s.order();
  GreenPartition g = green_relations(s);
  std::vector<Fingerprint> fp(n);
  std::vector<int> first_seen(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(first_seen.begin(), first_seen.end(), -1);
    Element p = x;
    int step = 1, index = 0, period = 0;
    while (true) {
      if (first_seen[p] != -1) {
        index = first_seen[p];
        period = step - first_seen[p];
        break;
      }
      first_seen[p] = step;
      p = s.product(p, x);
      ++step;
    }
    fp[x] = {s.product(x, x) == x,
             static_cast<int>(g.h_classes[g.h_class[x]].size()), index, period};
  }
  return fp;
}

struct AutSearch {
  const FiniteSemigroup& s;
  int n;
  std::vector<Fingerprint> fp;
  std::vector<Element> img;
  std::vector<uint8_t> used;
  std::vector<Element> trail;
  std::vector<std::vector<Element>> found;

  explicit AutSearch(const FiniteSemigroup& sg)
      : s(sg), n(sg.order()), fp(fingerprints(sg)), img(n, -1), used(n, 0) {}

  bool assign(Element x, Element y) {
    if (img[x] != -1) return img[x] == y;
    if (used[y] || fp[x] != fp[y]) return false;
    img[x] = y;
    used[y] = 1;
    trail.push_back(x);
    return true;
  }

  // Closure: whenever both factors have images, the product's image is
  // forced. Returns false on contradiction.
  bool propagate(size_t from) {
    for (size_t i = from; i < trail.size(); ++i) {
      Element a = trail[i];
      for (Element b = 0; b < n; ++b) {
        if (img[b] == -1) continue;
        if (!assign(s.product(a, b), s.product(img[a], img[b]))) return false;
        if (!assign(s.product(b, a), s.product(img[b], img[a]))) return false;
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      Element x = trail.back();
      trail.pop_back();
      used[img[x]] = 0;
      img[x] = -1;
    }
  }

  // Most-constrained unassigned element; -1 when the map is total.
  Element pick() const {
    Element best = -1;
    int best_count = n + 1;
    for (Element x = 0; x < n; ++x) {
      if (img[x] != -1) continue;
      int count = 0;
      for (Element y = 0; y < n; ++y)
        if (!used[y] && fp[y] == fp[x]) ++count;
      if (count < best_count) {
        best_count = count;
        best = x;
      }
    }
    return best;
  }

  void run() {
    Element x = pick();
    if (x == -1) {
      found.push_back(img);
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (used[y] || fp[y] != fp[x]) continue;
      size_t mark = trail.size();
      if (assign(x, y) && propagate(mark)) run();
      undo(mark);
    }
  }
};

int map_order(const std::vector<Element>& images) {
  int n = static_cast<int>(images.size());
  std::vector<Element> power(images);
  auto is_id = [&] {
    for (Element x = 0; x < n; ++x)
      if (power[x] != x) return false;
    return true;
  };
  int k = 1;
  while (!is_id()) {
    std::vector<Element> next(n);
    for (Element x = 0; x < n; ++x) next[x] = images[power[x]];
    power = std::move(next);
    ++k;
  }
  return k;
}

}  // namespace

bool is_automorphism(const FiniteSemigroup& s, const UnaryMap& map) {
  if (map.size() != s.order() || !map.is_permutation()) return false;
  int n = s.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map(s.product(x, y)) != s.product(map(x), map(y))) return false;
  return true;
}

Automorphism make_automorphism(const FiniteSemigroup& s,
                               std::vector<Element> images) {
  UnaryMap map{std::move(images)};
  if (!is_automorphism(s, map)) throw Error("map is not an automorphism");
  std::vector<Element> fixed;
  for (Element x = 0; x < s.order(); ++x)
    if (map(x) == x) fixed.push_back(x);
  int ord = map_order(map.images);
  return Automorphism{std::move(map), ord, std::move(fixed)};
}

std::vector<Automorphism> automorphism_group(const FiniteSemigroup& s) {
  AutSearch search(s);
  search.run();
  std::sort(search.found.begin(), search.found.end());
  std::vector<Automorphism> out;
  out.reserve(search.found.size());
  for (auto& images : search.found)
    out.push_back(make_automorphism(s, std::move(images)));
  return out;
}

PsiMap psi_map(const FiniteSemigroup& s, const Automorphism& alpha) {
  UnaryMap inv = inversion_map(s);
  std::vector<Element> images(s.order());
  for (Element x = 0; x < s.order(); ++x)
    images[x] = s.product(inv(x), alpha(x));
  return PsiMap{UnaryMap{std::move(images)}};
}

bool is_psi_injective(const FiniteSemigroup& s, const Automorphism& alpha) {
  PsiMap psi = psi_map(s, alpha);
  std::vector<uint8_t> seen(s.order(), 0);
  for (Element x = 0; x < s.order(); ++x) {
    Element v = psi(x);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_idempotent_fixing(const FiniteSemigroup& s, const Automorphism& alpha) {
  return alpha.fixed == idempotents(s);
}

namespace {

struct InvolutionSearch {
  const FiniteSemigroup& s;
  int n;
  std::vector<Element> img;
  std::vector<std::vector<Element>> found;

  explicit InvolutionSearch(const FiniteSemigroup& sg)
      : s(sg), n(sg.order()), img(n, -1) {}

  bool mutual_inverses(Element x, Element y) const {
    return s.product(s.product(x, y), x) == x &&
           s.product(s.product(y, x), y) == y;
  }

  // (ab)' = b'a' on every pair whose three values are all decided.
  bool antihom_consistent() const {
    for (Element a = 0; a < n; ++a) {
      if (img[a] == -1) continue;
      for (Element b = 0; b < n; ++b) {
        if (img[b] == -1) continue;
        Element ab = s.product(a, b);
        if (img[ab] != -1 && img[ab] != s.product(img[b], img[a])) return false;
      }
    }
    return true;
  }

  void run() {
    Element x = 0;
    while (x < n && img[x] != -1) ++x;
    if (x == n) {
      found.push_back(img);
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (img[y] != -1 || !mutual_inverses(x, y)) continue;
      img[x] = y;
      img[y] = x;
      if (antihom_consistent()) run();
      img[x] = img[y] = -1;
    }
  }
};

}  // namespace

std::vector<Involution> find_involutions(const FiniteSemigroup& s) {
  InvolutionSearch search(s);
  search.run();
  std::sort(search.found.begin(), search.found.end());
  std::vector<Involution> out;
  out.reserve(search.found.size());
  for (auto& images : search.found)
    out.push_back(Involution{UnaryMap{std::move(images)}});
  return out;
}

bool is_antiautomorphism(const FiniteSemigroup& s, const UnaryMap& map) {
  if (map.size() != s.order() || !map.is_permutation()) return false;
  int n = s.order();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (map(s.product(x, y)) != s.product(map(y), map(x))) return false;
  return true;
}

std::string emit_automorphism(const Automorphism& a) {
  std::ostringstream out;
  for (int i = 0; i < a.perm.size(); ++i) {
    if (i) out << ' ';
    out << a.perm(i) + 1;
  }
  return out.str();
}

Automorphism parse_automorphism(const FiniteSemigroup& s,
                                const std::string& line) {
  std::istringstream ss(line);
  std::vector<Element> images;
  int v;
  while (ss >> v) images.push_back(v - 1);
  if (static_cast<int>(images.size()) != s.order())
    throw ParseError(1, "expected " + std::to_string(s.order()) + " images");
  return make_automorphism(s, std::move(images));
}

}  // namespace isemlab
