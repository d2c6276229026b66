#pragma once

#include <string>
#include <vector>

#include "isemlab/enumerate.hpp"
#include "isemlab/morphisms.hpp"
#include "isemlab/semigroup.hpp"

namespace isemlab {

enum class Outcome { skipped, passed, failed };

/// Result of one check on one (semigroup, automorphism) pair. `skipped`
/// means the hypothesis was not met; clause and witnesses are set on
/// failure.
struct CheckResult {
  Outcome outcome = Outcome::skipped;
  std::string clause;
  std::vector<Element> witnesses;

  bool applied() const { return outcome != Outcome::skipped; }
  bool failed() const { return outcome == Outcome::failed; }
};

/// Everything needed to replay a failed check bit for bit.
struct CounterexampleRecord {
  std::string statement;
  std::string clause;
  int order = 0;
  std::vector<Element> table;      // row-major, 0-based
  std::vector<Element> alpha;      // automorphism images, 0-based
  std::vector<Element> witnesses;  // 0-based

  bool operator==(const CounterexampleRecord&) const = default;
};

struct TheoremReport {
  std::string statement;
  long checked = 0;    // pairs (or instances) examined
  long satisfied = 0;  // of those, hypothesis-satisfying
  long skipped = 0;    // checked - satisfied
  std::vector<CounterexampleRecord> violations;

  bool pass() const { return violations.empty(); }
};

// ---- per-pair checks -------------------------------------------------

struct Lemma21Result {
  CheckResult fix_implies_injective;    // direction (1)
  CheckResult injective_implies_fix_in_e;  // direction (2)
};

/// (1) if Fix(a) = E(S) then psi is injective;
/// (2) if psi is injective then Fix(a) is contained in E(S).
Lemma21Result check_lemma21(const FiniteSemigroup& s, const Automorphism& a);

/// Prime-order idempotent-fixing automorphism forces x^-1 x = x x^-1
/// throughout, a Clifford structure, and nilpotence.
CheckResult check_thm_main1(const FiniteSemigroup& s, const Automorphism& a);

/// Bijective squaring, a^2 = 1 and Fix(a) = E(S) force x a = x^-1 and
/// commutativity.
CheckResult check_thm_main2(const FiniteSemigroup& s, const Automorphism& a);

/// Group form: uniquely 2-divisible, a^2 = 1, Fix(a) = {e} force
/// x a = x^-1 and an abelian group. Throws NotAGroupError.
CheckResult check_thm_neumann(const FiniteSemigroup& g, const Automorphism& a);

struct ProofIdentityResult {
  CheckResult product_chains;  // (y psi)(y psi)^-1 = y^-1 y and
                               // (y psi)^-1 (y psi) = (y^-1 y) a,
                               // under E(S) within Fix(a)
  CheckResult psi_alpha;       // (x psi) a = (x psi)^-1, under a^2 = 1
  CheckResult psi_root;        // (x psi)^(-1/2) = x, under a^2 = 1,
                               // bijective squaring and Fix(a) = E(S)
};

ProofIdentityResult check_proof_identities(const FiniteSemigroup& s,
                                           const Automorphism& a);

/// If psi is injective then Fix(a) = E(S). A failure here would be a
/// genuine counterexample to an open conjecture.
CheckResult check_conjecture32(const FiniteSemigroup& s, const Automorphism& a);

/// Completely regular form of check_thm_main2 asserting only x a = x^-1;
/// commutativity is deliberately not asserted.
CheckResult check_conjecture33(const FiniteSemigroup& s, const Automorphism& a);

// ---- corpus harness ----------------------------------------------------

/// Supported statement ids: lemma21a, lemma21b, thm12, thm13, thm14,
/// eq-psialpha, eq-almost, proof12-identities, conj32, conj33,
/// problem-cancellative.
const std::vector<std::string>& statement_ids();
bool statement_is_theorem(const std::string& statement);  // false: conjecture
Filter statement_filter(const std::string& statement);

/// Runs one statement over every (semigroup, automorphism) pair of the
/// corpus. Deterministic output for any worker count.
TheoremReport run_statement(const Corpus& corpus, const std::string& statement,
                            int workers = 1);

TheoremReport run_conjecture32(const Corpus& corpus, int workers = 1);
TheoremReport run_conjecture33(const Corpus& corpus, int workers = 1);

/// Checks that every corpus member is a group (finite cancellative
/// semigroups are groups), then applies the group-form check to each pair.
TheoremReport run_problem_cancellative(const Corpus& corpus, int workers = 1);

// ---- gallery -----------------------------------------------------------

/// The four-element band with the involution 1'=2, 2'=1, 3'=3, 4'=4.
std::pair<FiniteSemigroup, Involution> gallery_band_B4();

/// Fixed checks on the gallery instances: the involuted band (all three
/// involution axioms, non-commutativity, identity automorphism differing
/// from the involution) and left-zero bands, which meet the completely
/// regular hypotheses and conclusion while staying non-commutative.
TheoremReport gallery_checks();

// ---- replay & serialization ---------------------------------------------

/// Re-runs the named check on the record's own table and automorphism.
/// True iff the same clause fails with the same witnesses.
bool replay(const CounterexampleRecord& record);

std::string report_to_json(const TheoremReport& report);
std::string record_to_json(const CounterexampleRecord& record);
CounterexampleRecord record_from_json(const std::string& text);

}  // namespace isemlab
