#include "isemlab/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "isemlab/nilpotence.hpp"
#include "isemlab/parallel.hpp"
#include "isemlab/samples.hpp"
#include "isemlab/structure.hpp"
#include "isemlab/table_io.hpp"

namespace isemlab {

namespace {

constexpr int kMaxCanonOrder = 32;

// ---------------------------------------------------------------------
// Canonical form.
//
// The relabeled table is produced cell by cell in row-major order while a
// bijection position<->element is built on demand. Three devices keep the
// search far below n!:
//   * a fresh product is always bound to the smallest admissible free
//     label, which is forced for lexicographic minimality;
//   * when every remaining candidate for a label would produce the same
//     value at the current cell, the binding is deferred and recorded as a
//     constraint on the label's eventual occupant (this is what makes
//     identity rows and columns free);
//   * any branch whose partial table leaves the reference table is cut.
// A leaf is accepted only if the open labels and unused elements admit a
// constraint-respecting perfect matching, i.e. the emitted table is
// realized by at least one actual permutation.
// ---------------------------------------------------------------------

struct CanonSearch {
  enum CKind : uint8_t { kLeft, kRight, kSelf };
  // Occupant z of the position must satisfy
  //   kLeft:  t[other][z] == r,   kRight: t[z][other] == r,
  //   kSelf:  t[z][z] == r,       where r = (result == -1 ? z : result).
  struct Constraint {
    CKind kind;
    Element other;
    Element result;
  };

  int n;
  const std::vector<Element>& t;
  const std::vector<Element>* target;  // nullptr = free completion mode

  std::vector<Element> p, q;  // position -> element, element -> position
  std::vector<std::vector<Constraint>> cons;
  std::vector<Element> emitted;

  struct Op {
    int8_t kind;  // 0 assign, 1 constraint
    int pos;
  };
  std::vector<Op> trail;

  bool found = false;           // a strictly smaller relabeling exists
  bool free_found = false;      // free completion reached a leaf
  std::vector<Element> result;  // the completed smaller table

  CanonSearch(int order, const std::vector<Element>& table,
              const std::vector<Element>* ref)
      : n(order), t(table), target(ref), p(order, -1), q(order, -1),
        cons(order) {
    emitted.reserve(static_cast<size_t>(order) * order);
  }

  bool ok(int pos, Element z) const {
    for (const Constraint& c : cons[pos]) {
      Element r = c.result == -1 ? z : c.result;
      Element got = c.kind == kLeft    ? t[c.other * n + z]
                    : c.kind == kRight ? t[z * n + c.other]
                                       : t[z * n + z];
      if (got != r) return false;
    }
    return true;
  }

  void assign(int pos, Element z) {
    p[pos] = z;
    q[z] = pos;
    trail.push_back({0, pos});
  }

  // Smallest admissible free label for a fresh element; -1 when none fits.
  int place(Element z) {
    for (int pos = 0; pos < n; ++pos)
      if (p[pos] == -1 && ok(pos, z)) {
        assign(pos, z);
        return pos;
      }
    return -1;
  }

  void add_constraint(int pos, Constraint c) {
    cons[pos].push_back(c);
    trail.push_back({1, pos});
  }

  void undo_to(size_t tmark, size_t emark) {
    while (trail.size() > tmark) {
      Op op = trail.back();
      trail.pop_back();
      if (op.kind == 0) {
        q[p[op.pos]] = -1;
        p[op.pos] = -1;
      } else {
        cons[op.pos].pop_back();
      }
    }
    emitted.resize(emark);
  }

  // Open positions vs unused elements under the recorded constraints.
  bool matching_ok() const {
    std::vector<int> open;
    std::vector<Element> unused;
    for (int pos = 0; pos < n; ++pos)
      if (p[pos] == -1) open.push_back(pos);
    for (Element u = 0; u < n; ++u)
      if (q[u] == -1) unused.push_back(u);
    int m = static_cast<int>(open.size());
    std::vector<int> owner(unused.size(), -1);
    std::vector<uint8_t> visited(unused.size());
    auto augment = [&](auto&& self, int oi) -> bool {
      for (size_t ui = 0; ui < unused.size(); ++ui) {
        if (visited[ui] || !ok(open[oi], unused[ui])) continue;
        visited[ui] = 1;
        if (owner[ui] == -1 || self(self, owner[ui])) {
          owner[ui] = oi;
          return true;
        }
      }
      return false;
    };
    for (int oi = 0; oi < m; ++oi) {
      std::fill(visited.begin(), visited.end(), 0);
      if (!augment(augment, oi)) return false;
    }
    return true;
  }

  Element raw_product(int cell, int pos, Element u) const {
    int i = cell / n, j = cell % n;
    if (i == j) return t[u * n + u];
    if (pos == j) return t[p[i] * n + u];
    return t[u * n + p[j]];
  }

  // First free label the element could take; used only to order branches.
  int estimate(Element z) const {
    if (q[z] != -1) return q[z];
    for (int pos = 0; pos < n; ++pos)
      if (p[pos] == -1 && ok(pos, z)) return pos;
    return n;
  }

  void branch(int cell, int pos) {
    int i = cell / n, j = cell % n;
    bool value_known = (i == j) || (pos == j ? p[i] != -1 : p[j] != -1);
    std::vector<std::pair<int, Element>> cands;
    for (Element u = 0; u < n; ++u) {
      if (q[u] != -1 || !ok(pos, u)) continue;
      int est = 0;
      if (value_known) {
        Element z = raw_product(cell, pos, u);
        est = z == u ? pos : estimate(z);
      }
      cands.emplace_back(est, u);
    }
    std::sort(cands.begin(), cands.end());
    for (auto [est, u] : cands) {
      if (found || free_found) return;
      size_t tmark = trail.size(), emark = emitted.size();
      assign(pos, u);
      walk(cell);
      undo_to(tmark, emark);
    }
  }

  void walk(int start_cell) {
    if (found || free_found) return;
    size_t tmark = trail.size(), emark = emitted.size();
    int cell = start_cell;
    while (cell < n * n) {
      int i = cell / n, j = cell % n;

      if (p[i] == -1 || p[j] == -1) {
        int pos = p[i] == -1 ? i : j;
        bool other_bound = (i == j) || (pos == i ? p[j] != -1 : p[i] != -1);
        if (!other_bound) {  // two open positions: branch on the row one
          branch(cell, i);
          undo_to(tmark, emark);
          return;
        }
        std::vector<Element> avail;
        for (Element u = 0; u < n; ++u)
          if (q[u] == -1 && ok(pos, u)) avail.push_back(u);
        if (avail.empty()) {
          undo_to(tmark, emark);
          return;
        }
        if (avail.size() == 1) {
          assign(pos, avail[0]);
          continue;  // reprocess the cell with the position bound
        }
        bool all_self = true, all_same = true;
        Element common = raw_product(cell, pos, avail[0]);
        for (Element u : avail) {
          Element z = raw_product(cell, pos, u);
          all_self = all_self && z == u;
          all_same = all_same && z == common;
        }
        if (!all_self && !all_same) {
          branch(cell, pos);
          undo_to(tmark, emark);
          return;
        }
        // Defer the binding; the current cell's value does not depend on it.
        CKind kind = i == j ? kSelf : (pos == j ? kLeft : kRight);
        Element other = i == j ? -1 : (pos == j ? p[i] : p[j]);
        Element v;
        if (all_self) {
          add_constraint(pos, {kind, other, -1});
          v = pos;
        } else {
          add_constraint(pos, {kind, other, common});
          v = q[common];
          if (v == -1) {
            v = place(common);
            if (v == -1) {
              undo_to(tmark, emark);
              return;
            }
          }
        }
        if (!push_value(cell, v, tmark, emark)) return;
        ++cell;
        continue;
      }

      Element z = t[p[i] * n + p[j]];
      Element v = q[z];
      if (v == -1) {
        v = place(z);
        if (v == -1) {
          undo_to(tmark, emark);
          return;
        }
      }
      if (!push_value(cell, v, tmark, emark)) return;
      ++cell;
    }

    if (matching_ok()) {
      if (target == nullptr) {
        free_found = true;
        result = emitted;
      }
      // With a target, reaching here means the relabeling ties it exactly.
    }
    undo_to(tmark, emark);
  }

  // Emits one value; handles compare/prune against the target. Returns
  // false when the caller must stop (branch pruned or search finished);
  // the caller's state is already rolled back in that case.
  bool push_value(int cell, Element v, size_t tmark, size_t emark) {
    if (target != nullptr) {
      Element ref = (*target)[cell];
      if (v > ref) {
        undo_to(tmark, emark);
        return false;
      }
      if (v < ref) {
        emitted.push_back(v);
        const std::vector<Element>* saved = target;
        target = nullptr;
        walk(cell + 1);  // any realizable completion is strictly smaller
        target = saved;
        if (free_found) {
          free_found = false;
          found = true;
        }
        undo_to(tmark, emark);
        return false;
      }
    }
    emitted.push_back(v);
    return true;
  }
};

// Any relabeling of `table` strictly below `ref` (itself a relabeling), or
// nullopt when none exists.
std::optional<std::vector<Element>> smaller_relabeling(
    int n, const std::vector<Element>& table, const std::vector<Element>& ref) {
  CanonSearch search(n, table, &ref);
  search.walk(0);
  if (search.found) return search.result;
  return std::nullopt;
}

}  // namespace

CanonicalTable CanonicalTable::of(int n, const std::vector<Element>& table) {
  CanonicalTable out;
  out.n = n;
  out.table.assign(table.begin(), table.end());
  uint64_t h = 1469598103934665603ull;
  h = (h ^ static_cast<uint64_t>(n)) * 1099511628211ull;
  for (uint8_t b : out.table) h = (h ^ b) * 1099511628211ull;
  out.hash = h;
  return out;
}

FiniteSemigroup CanonicalTable::to_semigroup() const {
  std::vector<Element> t(table.begin(), table.end());
  return FiniteSemigroup::trusted(n, std::move(t));
}

CanonicalTable canonical_form(const FiniteSemigroup& s) {
  int n = s.order();
  if (n > kMaxCanonOrder)
    throw OrderTooLargeError("canonical form supports order <= " +
                             std::to_string(kMaxCanonOrder));
  std::vector<Element> best = s.table();
  while (auto smaller = smaller_relabeling(n, s.table(), best))
    best = std::move(*smaller);
  return CanonicalTable::of(n, best);
}

bool is_canonical_table(int n, const std::vector<Element>& table) {
  return !smaller_relabeling(n, table, table).has_value();
}

// ---------------------------------------------------------------------
// Filters.
// ---------------------------------------------------------------------

std::string filter_name(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::inverse: return "inverse";
    case Filter::cr: return "cr";
    case Filter::clifford: return "clifford";
    case Filter::band: return "band";
    case Filter::group: return "group";
    case Filter::cancellative: return "cancellative";
  }
  return "?";
}

Filter parse_filter(const std::string& name) {
  for (Filter f : {Filter::all, Filter::inverse, Filter::cr, Filter::clifford,
                   Filter::band, Filter::group, Filter::cancellative})
    if (filter_name(f) == name) return f;
  throw Error("unknown filter '" + name + "'");
}

bool filter_accepts(Filter f, const FiniteSemigroup& s) {
  switch (f) {
    case Filter::all: return true;
    case Filter::inverse: return is_inverse_semigroup(s);
    case Filter::cr: return is_completely_regular(s);
    case Filter::clifford: return is_clifford(s);
    case Filter::band: return is_band(s);
    case Filter::group: return is_group(s);
    case Filter::cancellative: return is_cancellative(s);
  }
  return false;
}

int default_order_cap(Filter f) {
  return (f == Filter::all || f == Filter::inverse) ? 6 : 5;
}

// ---------------------------------------------------------------------
// Orderly generation: fill cells row-major, propagate associativity on
// every completable triple, keep completed tables that are their own
// canonical form and pass the filter.
// ---------------------------------------------------------------------

namespace {

struct OrderlyState {
  int n = 0;
  Filter filter = Filter::all;
  std::vector<Element> table;  // -1 undefined
  std::vector<std::vector<std::pair<Element, Element>>> factor_pairs;
  std::vector<uint32_t> row_mask, col_mask;
  bool latin = false;

  static OrderlyState initial(int n, Filter filter) {
    OrderlyState st;
    st.n = n;
    st.filter = filter;
    st.table.assign(static_cast<size_t>(n) * n, -1);
    st.factor_pairs.resize(n);
    st.row_mask.assign(n, 0);
    st.col_mask.assign(n, 0);
    st.latin = filter == Filter::group || filter == Filter::cancellative;
    if (filter == Filter::band)
      for (Element x = 0; x < n; ++x) {
        bool ok = st.try_assign(x, x, x);
        (void)ok;  // diagonal of a band never conflicts
      }
    return st;
  }

  Element at(Element x, Element y) const { return table[x * n + y]; }

  // Checks every triple completed by the new cell (x, y).
  bool triples_ok(Element x, Element y) const {
    Element v = at(x, y);
    for (Element c = 0; c < n; ++c) {  // (x, y, c)
      Element yc = at(y, c);
      if (yc == -1) continue;
      Element lhs = at(v, c), rhs = at(x, yc);
      if (lhs != -1 && rhs != -1 && lhs != rhs) return false;
    }
    for (Element a = 0; a < n; ++a) {  // (a, x, y)
      Element ax = at(a, x);
      if (ax == -1) continue;
      Element lhs = at(ax, y), rhs = at(a, v);
      if (lhs != -1 && rhs != -1 && lhs != rhs) return false;
    }
    for (auto [a, b] : factor_pairs[x]) {  // (a, b, y) with a*b = x
      Element by = at(b, y);
      if (by == -1) continue;
      Element rhs = at(a, by);
      if (rhs != -1 && rhs != v) return false;
    }
    for (auto [b, c] : factor_pairs[y]) {  // (x, b, c) with b*c = y
      Element xb = at(x, b);
      if (xb == -1) continue;
      Element lhs = at(xb, c);
      if (lhs != -1 && lhs != v) return false;
    }
    return true;
  }

  bool try_assign(Element x, Element y, Element v) {
    if (latin && (((row_mask[x] >> v) & 1u) || ((col_mask[y] >> v) & 1u)))
      return false;
    table[x * n + y] = v;
    factor_pairs[v].emplace_back(x, y);
    row_mask[x] |= 1u << v;
    col_mask[y] |= 1u << v;
    if (triples_ok(x, y)) return true;
    unassign(x, y);
    return false;
  }

  void unassign(Element x, Element y) {
    Element v = table[x * n + y];
    table[x * n + y] = -1;
    factor_pairs[v].pop_back();
    row_mask[x] &= ~(1u << v);
    col_mask[y] &= ~(1u << v);
  }

  int next_cell(int from) const {
    int total = n * n;
    while (from < total && table[from] != -1) ++from;
    return from;
  }

  void dfs(int cell, std::vector<CanonicalTable>& out) {
    cell = next_cell(cell);
    if (cell == n * n) {
      if (!is_canonical_table(n, table)) return;
      FiniteSemigroup s = FiniteSemigroup::trusted(n, table);
      if (filter_accepts(filter, s)) out.push_back(CanonicalTable::of(n, table));
      return;
    }
    Element x = cell / n, y = cell % n;
    for (Element v = 0; v < n; ++v) {
      if (!try_assign(x, y, v)) continue;
      dfs(cell + 1, out);
      unassign(x, y);
    }
  }
};

std::vector<CanonicalTable> enumerate_order(int n, Filter filter,
                                            int workers) {
  OrderlyState root = OrderlyState::initial(n, filter);
  if (workers <= 1) {
    std::vector<CanonicalTable> out;
    root.dfs(0, out);
    return out;
  }

  // Split the top of the search tree into independent branch states.
  std::deque<OrderlyState> frontier{std::move(root)};
  size_t want = static_cast<size_t>(workers) * 8;
  while (frontier.size() < want) {
    int cell = frontier.front().next_cell(0);
    if (cell == frontier.front().n * frontier.front().n) break;
    OrderlyState st = std::move(frontier.front());
    frontier.pop_front();
    Element x = cell / n, y = cell % n;
    for (Element v = 0; v < n; ++v) {
      if (!st.try_assign(x, y, v)) continue;
      frontier.push_back(st);
      st.unassign(x, y);
    }
    if (frontier.empty()) return {};
  }

  std::vector<OrderlyState> branches(frontier.begin(), frontier.end());
  auto chunks = parallel_map<std::vector<CanonicalTable>>(
      static_cast<int>(branches.size()), workers, [&](int i) {
        std::vector<CanonicalTable> out;
        OrderlyState st = branches[i];
        st.dfs(0, out);
        return out;
      });
  std::vector<CanonicalTable> out;
  for (auto& chunk : chunks)
    out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace

Corpus enumerate_semigroups(int max_order, Filter filter, int workers,
                            bool force_large) {
  if (max_order < 1) throw OrderTooLargeError("max order must be at least 1");
  if (max_order > default_order_cap(filter) && !force_large)
    throw OrderTooLargeError(
        "order " + std::to_string(max_order) + " exceeds the default cap " +
        std::to_string(default_order_cap(filter)) + " for filter '" +
        filter_name(filter) + "'; pass the large-order override to proceed");

  Corpus corpus;
  corpus.filter = filter;
  corpus.max_order = max_order;
  for (int n = 1; n <= max_order; ++n) {
    auto tables = enumerate_order(n, filter, workers);
    corpus.tables.insert(corpus.tables.end(), tables.begin(), tables.end());
  }
  std::sort(corpus.tables.begin(), corpus.tables.end());
  return corpus;
}

// ---------------------------------------------------------------------
// Constructive group corpus. Every group of order below 16 is cyclic, a
// semidirect product of two strictly smaller groups, or the quaternion
// group, so an ascending sweep with canonical deduplication is complete.
// ---------------------------------------------------------------------

namespace {

// All homomorphisms from h into the automorphism group of n, as image
// vectors of automorphism indices.
std::vector<std::vector<int>> homs_into_aut(
    const FiniteSemigroup& h, const FiniteSemigroup& n_group,
    const std::vector<Automorphism>& aut) {
  int hn = h.order();
  int an = static_cast<int>(aut.size());
  // compose_idx[i][j] = index of "apply aut j, then aut i" (left action).
  std::vector<std::vector<int>> compose_idx(an, std::vector<int>(an, -1));
  {
    std::map<std::vector<Element>, int> index;
    for (int i = 0; i < an; ++i) index[aut[i].perm.images] = i;
    for (int i = 0; i < an; ++i)
      for (int j = 0; j < an; ++j) {
        std::vector<Element> comp(n_group.order());
        for (Element x = 0; x < n_group.order(); ++x)
          comp[x] = aut[i](aut[j](x));
        compose_idx[i][j] = index.at(comp);
      }
  }

  std::vector<std::vector<int>> found;
  std::vector<int> im(hn, -1);
  auto consistent = [&]() {
    for (Element a = 0; a < hn; ++a) {
      if (im[a] == -1) continue;
      for (Element b = 0; b < hn; ++b) {
        if (im[b] == -1) continue;
        Element ab = h.product(a, b);
        if (im[ab] != -1 && im[ab] != compose_idx[im[a]][im[b]]) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Element a) -> void {
    if (a == hn) {
      found.push_back(im);
      return;
    }
    for (int g = 0; g < an; ++g) {
      im[a] = g;
      if (consistent()) self(self, a + 1);
    }
    im[a] = -1;
  };
  rec(rec, 0);
  return found;
}

FiniteSemigroup semidirect_product(const FiniteSemigroup& n_group,
                                   const FiniteSemigroup& h,
                                   const std::vector<Automorphism>& aut,
                                   const std::vector<int>& hom) {
  int nn = n_group.order(), hn = h.order();
  int total = nn * hn;
  std::vector<Element> table(static_cast<size_t>(total) * total);
  for (Element a1 = 0; a1 < nn; ++a1)
    for (Element h1 = 0; h1 < hn; ++h1)
      for (Element a2 = 0; a2 < nn; ++a2)
        for (Element h2 = 0; h2 < hn; ++h2) {
          Element a = n_group.product(a1, aut[hom[h1]](a2));
          Element hh = h.product(h1, h2);
          table[(a1 * hn + h1) * total + (a2 * hn + h2)] = a * hn + hh;
        }
  return FiniteSemigroup::from_table(total, std::move(table));
}

}  // namespace

Corpus group_corpus(int max_order) {
  if (max_order < 1) throw OrderTooLargeError("max order must be at least 1");
  if (max_order > 15)
    throw OrderTooLargeError(
        "the constructive group corpus is complete only up to order 15");

  std::vector<std::vector<CanonicalTable>> by_order(max_order + 1);
  for (int n = 1; n <= max_order; ++n) {
    std::set<CanonicalTable> found;
    found.insert(canonical_form(samples::cyclic_group(n)));
    if (n == 8) found.insert(canonical_form(samples::quaternion_group()));
    for (int d = 2; d * 2 <= n; ++d) {
      if (n % d != 0) continue;
      for (const auto& nt : by_order[d]) {
        FiniteSemigroup normal = nt.to_semigroup();
        auto aut = automorphism_group(normal);
        for (const auto& ht : by_order[n / d]) {
          FiniteSemigroup quot = ht.to_semigroup();
          found.insert(canonical_form(samples::direct_product(normal, quot)));
          for (const auto& hom : homs_into_aut(quot, normal, aut))
            found.insert(
                canonical_form(semidirect_product(normal, quot, aut, hom)));
        }
      }
    }
    by_order[n].assign(found.begin(), found.end());
  }

  Corpus corpus;
  corpus.filter = Filter::group;
  corpus.max_order = max_order;
  for (int n = 1; n <= max_order; ++n)
    corpus.tables.insert(corpus.tables.end(), by_order[n].begin(),
                         by_order[n].end());
  std::sort(corpus.tables.begin(), corpus.tables.end());
  return corpus;
}

std::vector<std::pair<FiniteSemigroup, Automorphism>> corpus_pairs(
    const Corpus& corpus) {
  std::vector<std::pair<FiniteSemigroup, Automorphism>> pairs;
  for (const auto& t : corpus.tables) {
    FiniteSemigroup s = t.to_semigroup();
    for (auto& a : automorphism_group(s)) pairs.emplace_back(s, std::move(a));
  }
  return pairs;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  out << "isemlab-corpus v1 " << filter_name(corpus.filter) << ' '
      << corpus.max_order << '\n';
  for (const auto& t : corpus.tables) out << '\n' << emit_table(t.to_semigroup());
}

std::string corpus_to_string(const Corpus& corpus) {
  std::ostringstream ss;
  write_corpus(ss, corpus);
  return ss.str();
}

Corpus read_corpus(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError(1, "empty corpus file");
  std::istringstream hs(header);
  std::string magic, version, filter_tok;
  int max_order = 0;
  if (!(hs >> magic >> version >> filter_tok >> max_order) ||
      magic != "isemlab-corpus" || version != "v1")
    throw ParseError(1, "bad corpus header");

  Corpus corpus;
  corpus.filter = parse_filter(filter_tok);
  corpus.max_order = max_order;

  std::string line, block;
  auto flush = [&] {
    if (block.empty()) return;
    FiniteSemigroup s = parse_table_text(block);
    CanonicalTable t = CanonicalTable::of(s.order(), s.table());
    if (!is_canonical_table(s.order(), s.table()))
      throw Error("corpus table is not canonically labeled");
    corpus.tables.push_back(std::move(t));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  return corpus;
}

}  // namespace isemlab
