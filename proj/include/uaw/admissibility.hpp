#ifndef UAW_ADMISSIBILITY_HPP
#define UAW_ADMISSIBILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "uaw/duality.hpp"

namespace uaw {

enum class Route { clause, dual, witness };

/// Membership of a finite algebra in IS(F) or ISP(F), decided along the
/// clause route and the dual route, cross-checked.  Disagreement between
/// routes is a falsifier and is carried in the verdict rather than thrown.
struct MembershipVerdict {
  bool result = false;
  bool routes_agree = true;
  bool clause_route = false;
  bool dual_route = false;
  std::string evidence;  // failed clause + assignment, or dual condition
};

MembershipVerdict member_IS_free(const VarietyProfile& p,
                                 const FiniteAlgebra& b,
                                 const Budgets& budgets = {});
MembershipVerdict member_ISP_free(const VarietyProfile& p,
                                  const FiniteAlgebra& b,
                                  const Budgets& budgets = {});

enum class Admissible { admissible, not_admissible, unknown };
const char* admissible_name(Admissible a);

struct AdmissibilityVerdict {
  Admissible verdict = Admissible::unknown;
  std::string method;   // which criterion decided it
  std::string evidence; // counterexample or bound report
  // For not_admissible found by enumeration: the refuting member (passes the
  // IS(F) test) and the assignment, re-checked before reporting.
  std::optional<FiniteAlgebra> counterexample;
  std::vector<std::pair<std::string, int>> assignment;
};

/// Decision ladder: exact for basis clauses (by the basis theorems), for
/// positive clauses (disjunct validity), for quasi-identities and negative
/// clauses (validity in F(n0), the fresh-pair reduction for the latter);
/// everything else is refuted by enumeration of IS(F) members and free
/// algebras within the budget, or left unknown with the bound reported.
AdmissibilityVerdict admissible_clause(const VarietyProfile& p, const Clause& c,
                                       int max_power, int max_size,
                                       const Budgets& budgets = {},
                                       const CacheConfig& cache = {});

/// Exact decision for a quasi-identity via validity in F(n0).  Refuses with
/// BudgetError (carrying the refused assignment count) instead of
/// approximating when |F(n0)|^#vars exceeds the assignment budget.
bool admissible_quasi_exact(const VarietyProfile& p, const Clause& q,
                            const Budgets& budgets = {},
                            const CacheConfig& cache = {});

struct CompletenessReport {
  Sig sig;
  int max_power = 0, max_size = 0;
  int members_checked = 0;
  bool structurally_complete = true;
  bool universally_complete = true;
  bool non_negative_universally_complete = true;
  std::string structurally_failure, universally_failure, nn_universally_failure;
};

/// Evaluates the finite completeness criteria over the enumerated members:
/// universal = all in IS(F), structural = all in ISP(F), non-negative
/// universal = all non-trivial in IS(F).  Verdicts hold at the stated bound.
CompletenessReport classify_completeness(const VarietyProfile& p,
                                         int max_power, int max_size,
                                         const Budgets& budgets = {});

struct MemberCheck {
  std::string algebra_name;
  int algebra_size = 0;
  bool is_clause = false, is_dual = false;
  bool is_witness_found = false, is_witness_bound_limited = false;
  bool isp_clause = false, isp_dual = false;
  bool isp_witness_found = false, isp_witness_bound_limited = false;
};

struct LemmaSuiteReport {
  Sig sig;
  int max_power = 0, max_size = 0, n_cap = 0;
  int members_checked = 0;
  std::vector<MemberCheck> verdicts;
  std::vector<std::string> disagreements;   // expected empty
  std::vector<std::string> bound_limited;   // witness search hit the cap
  bool clean() const { return disagreements.empty(); }
};

/// For every enumerated member: clause route, dual route and witness route
/// for both IS(F) and ISP(F).  Any disagreement is an engine bug by the
/// membership lemmas; a missing witness under too small a cap is reported
/// as bound-limited, not as a disagreement.
LemmaSuiteReport verify_lemma_suite(const VarietyProfile& p, int max_power,
                                    int max_size, int n_cap,
                                    const Budgets& budgets = {});

}  // namespace uaw

#endif
