#include "isemlab/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "isemlab/divisibility.hpp"
#include "isemlab/nilpotence.hpp"
#include "isemlab/parallel.hpp"
#include "isemlab/samples.hpp"
#include "isemlab/structure.hpp"
#include "isemlab/table_io.hpp"

namespace isemlab {

namespace {

bool is_prime(int k) {
  if (k < 2) return false;
  for (int d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

bool alpha_squared_is_one(const Automorphism& a) { return a.order <= 2; }

// Every idempotent is a fixed point (one inclusion of Fix = E).
bool idempotents_fixed(const FiniteSemigroup& s, const Automorphism& a) {
  for (Element e : idempotents(s))
    if (a(e) != e) return false;
  return true;
}

std::vector<Element> identity_images(int n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

CheckResult pass_result() { return {Outcome::passed, {}, {}}; }

CheckResult fail_result(std::string clause, std::vector<Element> witnesses) {
  return {Outcome::failed, std::move(clause), std::move(witnesses)};
}

}  // namespace

Lemma21Result check_lemma21(const FiniteSemigroup& s, const Automorphism& a) {
  Lemma21Result out;
  PsiMap psi = psi_map(s, a);
  bool injective = is_psi_injective(s, a);

  if (is_idempotent_fixing(s, a)) {
    if (injective) {
      out.fix_implies_injective = pass_result();
    } else {
      std::vector<Element> coll;
      for (Element x = 0; x < s.order() && coll.empty(); ++x)
        for (Element y = x + 1; y < s.order(); ++y)
          if (psi(x) == psi(y)) {
            coll = {x, y};
            break;
          }
      out.fix_implies_injective = fail_result("psi-injective", coll);
    }
  }

  if (injective) {
    out.injective_implies_fix_in_e = pass_result();
    for (Element x : a.fixed)
      if (s.product(x, x) != x) {
        out.injective_implies_fix_in_e =
            fail_result("fix-subset-idempotents", {x});
        break;
      }
  }
  return out;
}

CheckResult check_thm_main1(const FiniteSemigroup& s, const Automorphism& a) {
  if (!is_prime(a.order) || !is_idempotent_fixing(s, a)) return {};
  UnaryMap inv = inversion_map(s);
  for (Element x = 0; x < s.order(); ++x)
    if (s.product(inv(x), x) != s.product(x, inv(x)))
      return fail_result("inverse-commutes", {x});
  if (!is_clifford(s)) return fail_result("clifford", {});
  if (!is_nilpotent_clifford(s)) return fail_result("nilpotent", {});
  return pass_result();
}

CheckResult check_thm_main2(const FiniteSemigroup& s, const Automorphism& a) {
  if (!is_uniquely_2_divisible(s) || !alpha_squared_is_one(a) ||
      !is_idempotent_fixing(s, a))
    return {};
  UnaryMap inv = inversion_map(s);
  for (Element x = 0; x < s.order(); ++x)
    if (a(x) != inv(x)) return fail_result("alpha-is-inversion", {x});
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = x + 1; y < s.order(); ++y)
      if (s.product(x, y) != s.product(y, x))
        return fail_result("commutative", {x, y});
  return pass_result();
}

CheckResult check_thm_neumann(const FiniteSemigroup& g, const Automorphism& a) {
  if (!is_group(g)) throw NotAGroupError();
  Element e = idempotents(g).front();  // the identity
  if (!is_uniquely_2_divisible(g) || !alpha_squared_is_one(a) ||
      a.fixed != std::vector<Element>{e})
    return {};
  UnaryMap inv = inversion_map(g);
  for (Element x = 0; x < g.order(); ++x)
    if (a(x) != inv(x)) return fail_result("alpha-is-inversion", {x});
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.product(x, y) != g.product(y, x))
        return fail_result("abelian", {x, y});
  return pass_result();
}

ProofIdentityResult check_proof_identities(const FiniteSemigroup& s,
                                           const Automorphism& a) {
  ProofIdentityResult out;
  int n = s.order();
  UnaryMap inv = inversion_map(s);
  PsiMap psi = psi_map(s, a);
  bool a2 = alpha_squared_is_one(a);

  if (idempotents_fixed(s, a)) {
    out.product_chains = pass_result();
    for (Element y = 0; y < n; ++y) {
      Element py = psi(y);
      if (s.product(py, inv(py)) != s.product(inv(y), y)) {
        out.product_chains = fail_result("psi-product-left", {y});
        break;
      }
      if (s.product(inv(py), py) != a(s.product(inv(y), y))) {
        out.product_chains = fail_result("psi-product-right", {y});
        break;
      }
    }
  }

  if (a2) {
    out.psi_alpha = pass_result();
    for (Element x = 0; x < n; ++x)
      if (a(psi(x)) != inv(psi(x))) {
        out.psi_alpha = fail_result("psi-alpha-inverse", {x});
        break;
      }
  }

  if (a2 && is_uniquely_2_divisible(s) && is_idempotent_fixing(s, a)) {
    out.psi_root = pass_result();
    for (Element x = 0; x < n; ++x)
      if (inv_sqrt(s, psi(x)) != x) {
        out.psi_root = fail_result("psi-root-recovers", {x});
        break;
      }
  }
  return out;
}

CheckResult check_conjecture32(const FiniteSemigroup& s, const Automorphism& a) {
  if (!is_psi_injective(s, a)) return {};
  if (is_idempotent_fixing(s, a)) return pass_result();
  auto es = idempotents(s);
  for (Element e : es)
    if (a(e) != e) return fail_result("fix-equals-idempotents", {e});
  for (Element x : a.fixed)
    if (!std::binary_search(es.begin(), es.end(), x))
      return fail_result("fix-equals-idempotents", {x});
  return fail_result("fix-equals-idempotents", {});
}

CheckResult check_conjecture33(const FiniteSemigroup& s, const Automorphism& a) {
  if (!is_uniquely_2_divisible(s) || !alpha_squared_is_one(a) ||
      !is_idempotent_fixing(s, a))
    return {};
  UnaryMap inv = inversion_map(s);  // group inverse inside each subgroup
  for (Element x = 0; x < s.order(); ++x)
    if (a(x) != inv(x)) return fail_result("alpha-is-inversion", {x});
  return pass_result();
}

// ---- corpus harness ------------------------------------------------------

namespace {

CounterexampleRecord make_record(const std::string& statement,
                                 const FiniteSemigroup& s,
                                 const std::vector<Element>& alpha,
                                 const CheckResult& r) {
  return CounterexampleRecord{statement, r.clause,  s.order(),
                              s.table(), alpha,     r.witnesses};
}

struct EntryStats {
  long checked = 0;
  long satisfied = 0;
  std::vector<CounterexampleRecord> violations;
};

CheckResult run_pair(const std::string& stmt, const FiniteSemigroup& s,
                     const Automorphism& a) {
  if (stmt == "lemma21a") return check_lemma21(s, a).fix_implies_injective;
  if (stmt == "lemma21b") return check_lemma21(s, a).injective_implies_fix_in_e;
  if (stmt == "thm12") return check_thm_main1(s, a);
  if (stmt == "thm13") return check_thm_neumann(s, a);
  if (stmt == "thm14") return check_thm_main2(s, a);
  if (stmt == "eq-psialpha") return check_proof_identities(s, a).psi_alpha;
  if (stmt == "eq-almost") return check_proof_identities(s, a).psi_root;
  if (stmt == "conj32") return check_conjecture32(s, a);
  if (stmt == "conj33") return check_conjecture33(s, a);
  throw Error("unknown statement '" + stmt + "'");
}

EntryStats run_entry(const FiniteSemigroup& s, const std::string& stmt) {
  EntryStats st;
  if (stmt == "problem-cancellative") {
    ++st.checked;
    ++st.satisfied;
    if (!is_group(s)) {
      CheckResult r = fail_result("cancellative-is-group", {});
      st.violations.push_back(
          make_record(stmt, s, identity_images(s.order()), r));
      return st;
    }
    for (const auto& a : automorphism_group(s)) {
      ++st.checked;
      CheckResult r = check_thm_neumann(s, a);
      if (r.applied()) ++st.satisfied;
      if (r.failed())
        st.violations.push_back(make_record(stmt, s, a.perm.images, r));
    }
    return st;
  }

  for (const auto& a : automorphism_group(s)) {
    ++st.checked;
    if (stmt == "proof12-identities") {
      ProofIdentityResult r = check_proof_identities(s, a);
      if (r.product_chains.applied() || r.psi_alpha.applied() ||
          r.psi_root.applied())
        ++st.satisfied;
      for (const CheckResult* c :
           {&r.product_chains, &r.psi_alpha, &r.psi_root})
        if (c->failed())
          st.violations.push_back(make_record(stmt, s, a.perm.images, *c));
      continue;
    }
    CheckResult r = run_pair(stmt, s, a);
    if (r.applied()) ++st.satisfied;
    if (r.failed())
      st.violations.push_back(make_record(stmt, s, a.perm.images, r));
  }
  return st;
}

}  // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {
      "lemma21a",  "lemma21b",           "thm12",
      "thm13",     "thm14",              "eq-psialpha",
      "eq-almost", "proof12-identities", "conj32",
      "conj33",    "problem-cancellative"};
  return ids;
}

bool statement_is_theorem(const std::string& statement) {
  return statement != "conj32" && statement != "conj33";
}

Filter statement_filter(const std::string& statement) {
  if (statement == "thm13") return Filter::group;
  if (statement == "conj33") return Filter::cr;
  if (statement == "problem-cancellative") return Filter::cancellative;
  return Filter::inverse;
}

TheoremReport run_statement(const Corpus& corpus, const std::string& statement,
                            int workers) {
  if (std::find(statement_ids().begin(), statement_ids().end(), statement) ==
      statement_ids().end())
    throw Error("unknown statement '" + statement + "'");

  auto stats = parallel_map<EntryStats>(
      static_cast<int>(corpus.tables.size()), workers, [&](int i) {
        return run_entry(corpus.tables[i].to_semigroup(), statement);
      });

  TheoremReport report;
  report.statement = statement;
  for (auto& st : stats) {
    report.checked += st.checked;
    report.satisfied += st.satisfied;
    for (auto& v : st.violations) report.violations.push_back(std::move(v));
  }
  report.skipped = report.checked - report.satisfied;
  return report;
}

TheoremReport run_conjecture32(const Corpus& corpus, int workers) {
  return run_statement(corpus, "conj32", workers);
}

TheoremReport run_conjecture33(const Corpus& corpus, int workers) {
  return run_statement(corpus, "conj33", workers);
}

TheoremReport run_problem_cancellative(const Corpus& corpus, int workers) {
  return run_statement(corpus, "problem-cancellative", workers);
}

// ---- gallery ---------------------------------------------------------------

std::pair<FiniteSemigroup, Involution> gallery_band_B4() {
  return {samples::band_b4(), Involution{UnaryMap{{1, 0, 2, 3}}}};
}

TheoremReport gallery_checks() {
  TheoremReport rep;
  rep.statement = "gallery";
  auto expect = [&](bool ok, const std::string& clause,
                    const FiniteSemigroup& s, std::vector<Element> map,
                    std::vector<Element> witnesses) {
    ++rep.checked;
    ++rep.satisfied;
    if (!ok)
      rep.violations.push_back(CounterexampleRecord{
          "gallery", clause, s.order(), s.table(), std::move(map),
          std::move(witnesses)});
  };

  auto [b4, inv] = gallery_band_B4();
  int n = b4.order();

  bool anti = true, invol = true, regular = true;
  std::vector<Element> anti_wit, invol_wit, reg_wit;
  for (Element x = 0; x < n; ++x) {
    if (inv(inv(x)) != x && invol_wit.empty()) {
      invol = false;
      invol_wit = {x};
    }
    if (b4.product(b4.product(x, inv(x)), x) != x && reg_wit.empty()) {
      regular = false;
      reg_wit = {x};
    }
    for (Element y = 0; y < n; ++y)
      if (inv(b4.product(x, y)) != b4.product(inv(y), inv(x)) &&
          anti_wit.empty()) {
        anti = false;
        anti_wit = {x, y};
      }
  }
  expect(anti, "involution-antiautomorphism", b4, inv.map.images, anti_wit);
  expect(invol, "involution-involutive", b4, inv.map.images, invol_wit);
  expect(regular, "involution-regular", b4, inv.map.images, reg_wit);
  expect(is_band(b4), "band", b4, inv.map.images, {});

  Automorphism id4 = make_automorphism(b4, identity_images(n));
  expect(is_automorphism(b4, id4.perm), "identity-automorphism", b4,
         id4.perm.images, {});
  // alpha = identity disagrees with the involution at element 1.
  expect(id4(0) != inv(0), "alpha-differs-from-involution", b4,
         id4.perm.images, {0});
  expect(b4.product(0, 1) == 2 && b4.product(1, 0) == 3 && !is_commutative(b4),
         "noncommutative", b4, id4.perm.images, {0, 1});

  for (int k = 2; k <= 4; ++k) {
    FiniteSemigroup lz = samples::left_zero_band(k);
    Automorphism id = make_automorphism(lz, identity_images(k));
    bool hyp = is_uniquely_2_divisible(lz) && alpha_squared_is_one(id) &&
               is_idempotent_fixing(lz, id);
    expect(hyp, "leftzero-hypotheses", lz, id.perm.images, {});
    expect(check_conjecture33(lz, id).outcome == Outcome::passed,
           "leftzero-conclusion", lz, id.perm.images, {});
    expect(!is_commutative(lz), "leftzero-noncommutative", lz, id.perm.images,
           {});
  }

  rep.skipped = rep.checked - rep.satisfied;
  return rep;
}

// ---- replay & serialization -------------------------------------------------

bool replay(const CounterexampleRecord& record) {
  try {
    if (record.statement == "gallery") {
      TheoremReport rep = gallery_checks();
      for (const auto& v : rep.violations)
        if (v == record) return true;
      return false;
    }
    FiniteSemigroup s = FiniteSemigroup::from_table(record.order, record.table);
    if (record.clause == "cancellative-is-group") return !is_group(s);
    Automorphism a = make_automorphism(s, record.alpha);
    CheckResult r;
    if (record.statement == "proof12-identities") {
      ProofIdentityResult pr = check_proof_identities(s, a);
      for (const CheckResult* c :
           {&pr.product_chains, &pr.psi_alpha, &pr.psi_root})
        if (c->failed() && c->clause == record.clause) r = *c;
    } else if (record.statement == "problem-cancellative") {
      r = check_thm_neumann(s, a);
    } else {
      r = run_pair(record.statement, s, a);
    }
    return r.failed() && r.clause == record.clause &&
           r.witnesses == record.witnesses;
  } catch (const Error&) {
    return false;
  }
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string alpha_line(const std::vector<Element>& images) {
  std::ostringstream ss;
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) ss << ' ';
    ss << images[i] + 1;
  }
  return ss.str();
}

ordered_json record_body(const CounterexampleRecord& r) {
  ordered_json j;
  j["table"] = emit_table(FiniteSemigroup::trusted(r.order, r.table));
  j["alpha"] = alpha_line(r.alpha);
  j["clause"] = r.clause;
  auto wit = ordered_json::array();
  for (Element w : r.witnesses) wit.push_back(w + 1);
  j["witnesses"] = wit;
  return j;
}

}  // namespace

std::string report_to_json(const TheoremReport& report) {
  ordered_json j;
  j["statement"] = report.statement;
  j["checked"] = report.checked;
  j["satisfied_hypotheses"] = report.satisfied;
  j["skipped"] = report.skipped;
  auto arr = ordered_json::array();
  for (const auto& v : report.violations) arr.push_back(record_body(v));
  j["violations"] = arr;
  return j.dump(2) + "\n";
}

std::string record_to_json(const CounterexampleRecord& record) {
  ordered_json j;
  j["statement"] = record.statement;
  auto body = record_body(record);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j.dump(2) + "\n";
}

CounterexampleRecord record_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  CounterexampleRecord rec;
  rec.statement = j.at("statement").get<std::string>();
  rec.clause = j.at("clause").get<std::string>();
  FiniteSemigroup s = parse_table_text(j.at("table").get<std::string>());
  rec.order = s.order();
  rec.table = s.table();
  std::istringstream as(j.at("alpha").get<std::string>());
  int v;
  while (as >> v) rec.alpha.push_back(v - 1);
  for (const auto& w : j.at("witnesses")) rec.witnesses.push_back(w.get<int>() - 1);
  return rec;
}

}  // namespace isemlab
