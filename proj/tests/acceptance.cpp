// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// The expected values asserted here are either frozen combinatorial facts
// recomputed by the small oracles below (plain enumeration, no shared code
// with the engine) or exact properties of the decision procedures.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "support.hpp"
#include "uaw/admissibility.hpp"
#include "uaw/json_io.hpp"

using namespace uaw;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%-4s %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  if (!ok) ++failures;
}

// ---- oracles ----------------------------------------------------------------

// monotone maps 2^n -> 2 (equivalently, down-sets of the Boolean cube)
long long count_monotone_cube_maps(int n) {
  const int points = 1 << n;
  std::vector<int> val(points, -1);
  std::function<long long(int)> rec = [&](int p) -> long long {
    if (p == points) return 1;
    long long total = 0;
    for (int v = 0; v <= 1; ++v) {
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        bool q_below_p = (q & p) == q;
        bool p_below_q = (q & p) == p;
        if (q_below_p && val[q] > v) ok = false;
        if (p_below_q && v > val[q]) ok = false;
      }
      if (ok) {
        val[p] = v;
        total += rec(p + 1);
      }
    }
    val[p] = -1;
    return total;
  };
  return rec(0);
}

// self-maps of the three-point Stone alter ego (order 1 <= a only, d fixes 0
// and 1 and drops a to 1), restated here from scratch: carrier {0, a, 1} as
// indices 0, 1, 2
long long count_stone_self_maps() {
  const int leq[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}};
  const int d[3] = {0, 2, 2};
  long long count = 0;
  for (int h0 = 0; h0 < 3; ++h0)
    for (int h1 = 0; h1 < 3; ++h1)
      for (int h2 = 0; h2 < 3; ++h2) {
        int h[3] = {h0, h1, h2};
        bool ok = true;
        for (int x = 0; x < 3 && ok; ++x) {
          if (h[d[x]] != d[h[x]]) ok = false;
          for (int y = 0; y < 3 && ok; ++y)
            if (leq[x][y] && !leq[h[x]][h[y]]) ok = false;
        }
        if (ok) ++count;
      }
  return count;
}

// self-maps of the De Morgan alter ego: diamond a < 0,1 < b with the
// involution swapping a and b; carrier {0, a, b, 1} as indices 0..3
long long count_demorgan_self_maps() {
  bool leq[4][4] = {};
  for (int i = 0; i < 4; ++i) leq[i][i] = true;
  leq[1][0] = leq[1][3] = leq[1][2] = true;  // a below everything
  leq[0][2] = leq[3][2] = true;              // 0, 1 below b
  const int f[4] = {0, 2, 1, 3};
  long long count = 0;
  for (int code = 0; code < 256; ++code) {
    int h[4] = {code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3};
    bool ok = true;
    for (int x = 0; x < 4 && ok; ++x) {
      if (h[f[x]] != f[h[x]]) ok = false;
      for (int y = 0; y < 4 && ok; ++y)
        if (leq[x][y] && !leq[h[x]][h[y]]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// self-maps of the Kleene alter ego: 0, 1 below a; sim relates everything
// but 0 and 1; Y = {0, 1}; carrier {0, a, 1} as indices 0..2
long long count_kleene_self_maps() {
  const int leq[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 1, 1}};
  const bool sim[3][3] = {{true, true, false}, {true, true, true}, {false, true, true}};
  const bool y[3] = {true, false, true};
  long long count = 0;
  for (int h0 = 0; h0 < 3; ++h0)
    for (int h1 = 0; h1 < 3; ++h1)
      for (int h2 = 0; h2 < 3; ++h2) {
        int h[3] = {h0, h1, h2};
        bool ok = true;
        for (int x = 0; x < 3 && ok; ++x) {
          if (y[x] && !y[h[x]]) ok = false;
          for (int yy = 0; yy < 3 && ok; ++yy) {
            if (leq[x][yy] && !leq[h[x]][h[yy]]) ok = false;
            if (sim[x][yy] && !sim[h[x]][h[yy]]) ok = false;
          }
        }
        if (ok) ++count;
      }
  return count;
}

bool assignment_refutes(const FiniteAlgebra& a, const Clause& c,
                        const std::vector<std::pair<std::string, int>>& w) {
  for (const auto& id : c.premises)
    if (eval_term(a, id.lhs, w) != eval_term(a, id.rhs, w)) return false;
  for (const auto& id : c.conclusions)
    if (eval_term(a, id.lhs, w) == eval_term(a, id.rhs, w)) return false;
  return true;
}

// ---- criteria ---------------------------------------------------------------

void ac1_duality_soundness() {
  int checked = 0;
  std::string fail;
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka}) {
    const VarietyProfile& p = profile(sig);
    for (const auto& b : enumerate_members(p, 2, 8).members) {
      EvaluationMap e = evaluation_map(p, b);
      ++checked;
      if (!e.is_isomorphism && fail.empty())
        fail = std::string(sig_name(sig)) + "/" + b.name + ": " + e.failure;
    }
  }
  std::ostringstream os;
  os << "evaluation map is an isomorphism for all " << checked
     << " enumerated members of bdl/st/dma/ka";
  if (!fail.empty()) os << "; first failure " << fail;
  report("AC1", fail.empty(), os.str());
}

void ac2_free_sizes() {
  bool ok = true;
  std::ostringstream os;
  long long dedekind[4];
  for (int n = 0; n <= 3; ++n) dedekind[n] = count_monotone_cube_maps(n);
  ok &= dedekind[0] == 2 && dedekind[1] == 3 && dedekind[2] == 6 && dedekind[3] == 20;
  for (int n = 0; n <= 3; ++n) {
    long long engine = free_size_capped(profile(Sig::bdl), n, 1000);
    if (engine != dedekind[n]) {
      ok = false;
      os << "F_bdl(" << n << ") = " << engine << " != oracle " << dedekind[n] << "; ";
    }
  }
  long long st1 = free_size_capped(profile(Sig::st), 1, 1000);
  long long dma1 = free_size_capped(profile(Sig::dma), 1, 1000);
  long long ka1 = free_size_capped(profile(Sig::ka), 1, 1000);
  if (st1 != count_stone_self_maps()) ok = false, os << "F_st(1) mismatch; ";
  if (dma1 != count_demorgan_self_maps()) ok = false, os << "F_dma(1) mismatch; ";
  if (ka1 != count_kleene_self_maps() || ka1 != 6) ok = false, os << "F_ka(1) mismatch; ";
  os << "|F_bdl(0..3)| = 2,3,6,20; |F_st(1)| = " << st1 << ", |F_dma(1)| = " << dma1
     << ", |F_ka(1)| = " << ka1 << ", all equal to the map-filter oracles";
  report("AC2", ok, os.str());
}

void ac3_lemma_equivalences() {
  bool ok = true;
  int members = 0, limited = 0;
  std::ostringstream os;
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka, Sig::dl, Sig::dml, Sig::kl}) {
    LemmaSuiteReport r = verify_lemma_suite(profile(sig), 2, 8, 4);
    members += r.members_checked;
    limited += static_cast<int>(r.bound_limited.size());
    if (!r.disagreements.empty()) {
      ok = false;
      os << sig_name(sig) << ": " << r.disagreements[0] << "; ";
    }
  }
  os << "0 disagreements among clause/dual/witness routes over " << members
     << " members of all seven varieties";
  if (limited) os << " (" << limited << " witness searches bound-limited)";
  report("AC3", ok, os.str());
}

void ac4_gaps() {
  bool ok = true;
  std::ostringstream os;

  FiniteAlgebra sq = direct_power(builtin_2(), 2);
  SatResult s1 = satisfies(sq, registry_entry("C2").clause);
  ok &= !s1.ok && assignment_refutes(sq, registry_entry("C2").clause, s1.witness);
  ok &= admissible_clause(profile(Sig::bdl), registry_entry("C2").clause, 2, 8).verdict ==
        Admissible::admissible;
  if (!s1.ok) os << "C2 fails in the square of 2 at " << format_assignment(s1.witness, sq);

  SatResult s2 = satisfies(builtin_K(), registry_entry("C8").clause);
  ok &= !s2.ok && assignment_refutes(builtin_K(), registry_entry("C8").clause, s2.witness);
  ok &= s2.witness ==
        std::vector<std::pair<std::string, int>>{{"x", 1}, {"y", 0}};  // x:=a, y:=0
  ok &= admissible_clause(profile(Sig::ka), registry_entry("C8").clause, 2, 8).verdict ==
        Admissible::admissible;
  if (!s2.ok) os << "; C8 fails in K at " << format_assignment(s2.witness, builtin_K());

  SatResult s3 = satisfies(builtin_D(), registry_entry("C6").clause);
  ok &= !s3.ok && assignment_refutes(builtin_D(), registry_entry("C6").clause, s3.witness);
  ok &= admissible_clause(profile(Sig::dma), registry_entry("C6").clause, 2, 8).verdict ==
        Admissible::admissible;
  if (!s3.ok) os << "; C6 fails in D at " << format_assignment(s3.witness, builtin_D());
  os << "; each clause is admissible in its variety";
  report("AC4", ok, os.str());
}

void ac5_classification() {
  bool ok = true;
  std::ostringstream os;
  auto r_bdl = classify_completeness(profile(Sig::bdl), 2, 8);
  ok &= r_bdl.structurally_complete && !r_bdl.universally_complete &&
        !r_bdl.non_negative_universally_complete;
  auto r_st = classify_completeness(profile(Sig::st), 2, 8);
  ok &= r_st.structurally_complete && !r_st.universally_complete &&
        r_st.non_negative_universally_complete;
  auto r_dl = classify_completeness(profile(Sig::dl), 2, 8);
  ok &= r_dl.structurally_complete && r_dl.universally_complete &&
        r_dl.non_negative_universally_complete;
  for (Sig sig : {Sig::dma, Sig::dml, Sig::ka, Sig::kl}) {
    auto r = classify_completeness(profile(sig), 2, 8);
    if (r.structurally_complete) {
      ok = false;
      os << sig_name(sig) << " wrongly classified structurally complete; ";
    }
  }
  // the concrete failures behind the negative classifications
  ok &= !member_ISP_free(profile(Sig::ka), builtin_K()).result;
  ok &= !member_ISP_free(profile(Sig::dma), builtin_D()).result;
  os << "bdl structurally complete only; st non-negative universally complete, not "
        "universally; dl universally complete; dma/dml/ka/kl not structurally complete "
        "(K not in ISP(F_ka), D not in ISP(F_dma))";
  report("AC5", ok, os.str());
}

void ac6_parser() {
  bool ok = true;
  std::ostringstream os;
  for (const auto& e : clause_registry())
    if (parse_clause(print_clause(e.clause)) != e.clause) {
      ok = false;
      os << e.id << " does not round-trip; ";
    }
  int round_tripped = 0;
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka}) {
    testsupport::ClauseGen gen(sig, 424200 + static_cast<unsigned>(sig));
    for (int i = 0; i < 25; ++i) {
      Clause c = gen.clause();
      if (parse_clause(print_clause(c)) == c) ++round_tripped;
      else ok = false;
    }
  }
  const char* malformed[10] = {
      "x /\\ = y => false",  "=> x = y",           "x = y",
      "x = y | z = w",       "true => true",        "x == y => false",
      "x = y =>",            "(x = y => false",     "x = y, => z = w",
      "x @ y = z => false",
  };
  int rejected = 0;
  for (const char* text : malformed) {
    try {
      parse_clause(text);
      ok = false;
      os << "accepted malformed: " << text << "; ";
    } catch (const ParseError& e) {
      if (e.offset >= 0 && std::string(e.what()).find("offset") != std::string::npos)
        ++rejected;
      else {
        ok = false;
        os << "no position in: " << e.what() << "; ";
      }
    }
  }
  os << "8 registry clauses and " << round_tripped
     << "/100 random clauses round-trip; " << rejected
     << "/10 malformed inputs rejected with positioned diagnostics";
  ok &= round_tripped == 100 && rejected == 10;
  report("AC6", ok, os.str());
}

void ac7_quasi_exactness() {
  bool ok = true;
  std::ostringstream os;
  const VarietyProfile& bdl = profile(Sig::bdl);
  Enumeration en = enumerate_members(bdl, 2, 8);
  testsupport::ClauseGen gen(Sig::bdl, 777);
  int agreed = 0;
  for (int i = 0; i < 50; ++i) {
    Clause q = gen.quasi_identity();
    bool exact = admissible_quasi_exact(bdl, q);
    bool enumerated = valid_in_class(en.members, q).ok;
    if (exact == enumerated) ++agreed;
    else {
      ok = false;
      os << "disagreement on " << print_clause(q) << "; ";
    }
  }
  os << agreed << "/50 random bdl quasi-identities: F(n0) verdict equals enumerated "
     << "member validity";

  // ka C8, dma C6/C7: exact when the budget allows, otherwise certified by
  // the cross-checked membership criteria (the clause is its variety's basis
  // and the three-route suite is clean)
  struct Item {
    Sig sig;
    const char* id;
  };
  for (Item item : {Item{Sig::ka, "C8"}, Item{Sig::dma, "C6"}, Item{Sig::dma, "C7"}}) {
    const VarietyProfile& p = profile(item.sig);
    const Clause& q = registry_entry(item.id).clause;
    bool verdict;
    std::string how;
    try {
      verdict = admissible_quasi_exact(p, q);
      how = "exact in F(n0)";
    } catch (const BudgetError&) {
      LemmaSuiteReport r = verify_lemma_suite(p, 2, 8, 4);
      bool is_basis = std::find(p.basis_quasi.begin(), p.basis_quasi.end(),
                                std::string(item.id)) != p.basis_quasi.end();
      verdict = r.disagreements.empty() && is_basis;
      how = "budget-refused; dual-criterion suite clean, basis quasi-identity";
    }
    if (!verdict) {
      ok = false;
      os << "; " << sig_name(item.sig) << " " << item.id << " not certified";
    } else {
      os << "; " << sig_name(item.sig) << " " << item.id << " admissible (" << how << ")";
    }
  }
  report("AC7", ok, os.str());
}

}  // namespace

int main() {
  try {
    ac1_duality_soundness();
    ac2_free_sizes();
    ac3_lemma_equivalences();
    ac4_gaps();
    ac5_classification();
    ac6_parser();
    ac7_quasi_exactness();
  } catch (const std::exception& e) {
    std::printf("EXC  FAIL  unexpected exception: %s\n", e.what());
    ++failures;
  }
  if (failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
