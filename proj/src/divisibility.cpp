#include "isemlab/divisibility.hpp"

namespace isemlab {

SquaringAnalysis analyze_squaring(const FiniteSemigroup& s) {
  int n = s.order();
  std::vector<Element> squares(n);
  for (Element x = 0; x < n; ++x) squares[x] = s.product(x, x);

  std::vector<Element> roots(n, -1);
  bool bijective = true;
  for (Element x = 0; x < n && bijective; ++x) {
    if (roots[squares[x]] != -1) bijective = false;
    roots[squares[x]] = x;
  }
  SquaringAnalysis out{UnaryMap{std::move(squares)}, bijective, std::nullopt};
  if (bijective) out.roots = UnaryMap{std::move(roots)};
  return out;
}

bool is_uniquely_2_divisible(const FiniteSemigroup& s) {
  return analyze_squaring(s).bijective;
}

Element sqrt_of(const FiniteSemigroup& s, Element x) {
  SquaringAnalysis a = analyze_squaring(s);
  if (!a.bijective) throw NotUniquely2DivisibleError();
  return (*a.roots)(x);
}

Element inv_sqrt(const FiniteSemigroup& s, Element x) {
  SquaringAnalysis a = analyze_squaring(s);
  if (!a.bijective) throw NotUniquely2DivisibleError();
  UnaryMap inv = inversion_map(s);
  Element via_root = inv((*a.roots)(x));
  Element via_inverse = (*a.roots)(inv(x));
  if (via_root != via_inverse)
    throw Error("root of inverse disagrees with inverse of root");
  return via_root;
}

}  // namespace isemlab
