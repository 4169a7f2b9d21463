#include "doctest.h"
#include "support.hpp"
#include "uaw/admissibility.hpp"

using namespace uaw;

TEST_CASE("membership in IS(F)") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  MembershipVerdict sq = member_IS_free(bdl, direct_power(builtin_2(), 2));
  CHECK(!sq.result);
  CHECK(sq.routes_agree);

  const VarietyProfile& st = profile(Sig::st);
  for (const auto& b : enumerate_members(st, 2, 8).members) {
    MembershipVerdict v = member_IS_free(st, b);
    CHECK(v.routes_agree);
    CHECK(v.result == !b.trivial());  // non-triviality is the whole criterion
  }

  const VarietyProfile& dma = profile(Sig::dma);
  MembershipVerdict vd = member_IS_free(dma, builtin_D());
  CHECK(!vd.result);
  CHECK(vd.routes_agree);

  const VarietyProfile& dl = profile(Sig::dl);
  for (const auto& b : enumerate_members(dl, 2, 8).members) {
    MembershipVerdict v = member_IS_free(dl, b);
    CHECK(v.result);  // universal completeness
    CHECK(v.routes_agree);
  }
}

TEST_CASE("membership in ISP(F)") {
  const VarietyProfile& ka = profile(Sig::ka);
  MembershipVerdict vk = member_ISP_free(ka, builtin_K());
  CHECK(!vk.result);
  CHECK(vk.routes_agree);

  const VarietyProfile& dma = profile(Sig::dma);
  CHECK(member_ISP_free(dma, trivial_algebra(Sig::dma)).result);
  CHECK(!member_ISP_free(dma, builtin_D()).result);

  const VarietyProfile& bdl = profile(Sig::bdl);
  for (const auto& b : enumerate_members(bdl, 2, 8).members)
    CHECK(member_ISP_free(bdl, b).result);
}

TEST_CASE("basis clauses are admissible yet refutable inside the variety") {
  for (Sig sig : {Sig::bdl, Sig::dl, Sig::st, Sig::dma, Sig::dml, Sig::ka, Sig::kl}) {
    const VarietyProfile& p = profile(sig);
    Enumeration en = enumerate_members(p, 2, 8);
    std::vector<std::string> all = p.basis_clauses;
    for (const auto& q : p.basis_quasi)
      if (std::find(all.begin(), all.end(), q) == all.end()) all.push_back(q);
    for (const auto& id : all) {
      const Clause& c = registry_entry(id).clause;
      AdmissibilityVerdict v = admissible_clause(p, c, 2, 8);
      INFO(sig_name(sig), " ", id);
      CHECK(v.verdict == Admissible::admissible);
      // non-derivability: some member of the plain variety refutes it
      bool refuted = false;
      for (const auto& b : en.members)
        if (!satisfies(b, c).ok) refuted = true;
      CHECK(refuted);
    }
  }
}

TEST_CASE("the collapse clause is not admissible and carries a counterexample") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  AdmissibilityVerdict v = admissible_clause(bdl, parse_clause("x = y => false"), 2, 8);
  REQUIRE(v.verdict == Admissible::not_admissible);
  REQUIRE(v.counterexample.has_value());
  // the counterexample must be a basis-satisfying member refuting the clause
  MembershipVerdict mv = member_IS_free(bdl, *v.counterexample);
  CHECK(mv.result);
  SatResult s = satisfies(*v.counterexample, parse_clause("x = y => false"));
  CHECK(!s.ok);
}

TEST_CASE("positive clauses decide through valid disjuncts") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  AdmissibilityVerdict yes =
      admissible_clause(bdl, parse_clause("true => x /\\ y = y /\\ x"), 2, 8);
  CHECK(yes.verdict == Admissible::admissible);
  AdmissibilityVerdict no =
      admissible_clause(bdl, parse_clause("true => x = bot | x = top"), 2, 8);
  REQUIRE(no.verdict == Admissible::not_admissible);
  REQUIRE(no.counterexample.has_value());
  CHECK(member_IS_free(bdl, *no.counterexample).result);
  CHECK(!satisfies(*no.counterexample, parse_clause("true => x = bot | x = top")).ok);
}

TEST_CASE("exact quasi-identity decisions in the bounded free algebra") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  CHECK(!admissible_quasi_exact(bdl, parse_clause("x /\\ y = bot => x = bot")));
  CHECK(admissible_quasi_exact(bdl, parse_clause("true => x = x")));
  CHECK(admissible_quasi_exact(bdl, parse_clause("x = bot, x = top => y = top")));

  // the Kleene quasi-identity needs F(3) with ~44k elements: over budget
  const VarietyProfile& ka = profile(Sig::ka);
  CHECK_THROWS_AS(admissible_quasi_exact(ka, registry_entry("C8").clause), BudgetError);

  CHECK_THROWS_AS(admissible_quasi_exact(bdl, registry_entry("C2").clause), DataError);
}

TEST_CASE("admissible-versus-valid gaps at the concrete algebras") {
  CHECK(!satisfies(direct_power(builtin_2(), 2), registry_entry("C2").clause).ok);
  CHECK(admissible_clause(profile(Sig::bdl), registry_entry("C2").clause, 2, 8).verdict ==
        Admissible::admissible);

  CHECK(!satisfies(builtin_K(), registry_entry("C8").clause).ok);
  CHECK(admissible_clause(profile(Sig::ka), registry_entry("C8").clause, 2, 8).verdict ==
        Admissible::admissible);

  CHECK(!satisfies(builtin_D(), registry_entry("C6").clause).ok);
  CHECK(admissible_clause(profile(Sig::dma), registry_entry("C6").clause, 2, 8).verdict ==
        Admissible::admissible);
}

TEST_CASE("vacuously admissible and honestly unknown multi-conclusion clauses") {
  // the premise x = ~x is inadmissible in De Morgan algebras, so anything
  // follows from it
  const VarietyProfile& dma = profile(Sig::dma);
  AdmissibilityVerdict vac =
      admissible_clause(dma, parse_clause("x = ~x => x = y | x = ~y"), 2, 8);
  CHECK(vac.verdict == Admissible::admissible);

  // the meet-prime clause is admissible in Kleene algebras too, but that is
  // outside the certified criteria at this bound, so the verdict stays open
  const VarietyProfile& ka = profile(Sig::ka);
  AdmissibilityVerdict open_verdict =
      admissible_clause(ka, registry_entry("C2").clause, 2, 8);
  CHECK(open_verdict.verdict == Admissible::unknown);
  CHECK(open_verdict.evidence.find("k <= 2") != std::string::npos);
}

TEST_CASE("refutations persist when the budget grows") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  std::vector<Clause> clauses = {
      parse_clause("x = y => false"),
      parse_clause("true => x = bot | x = top"),
      parse_clause("x /\\ y = bot => x = bot"),
  };
  for (const Clause& c : clauses) {
    AdmissibilityVerdict small = admissible_clause(bdl, c, 1, 4);
    AdmissibilityVerdict large = admissible_clause(bdl, c, 2, 8);
    CHECK(small.verdict == Admissible::not_admissible);
    CHECK(large.verdict == Admissible::not_admissible);
    if (small.counterexample) {
      // the recorded counterexample still refutes at the bigger bound
      CHECK(!satisfies(*small.counterexample, c).ok);
    }
  }
}

TEST_CASE("completeness classification across the seven varieties") {
  auto r_bdl = classify_completeness(profile(Sig::bdl), 2, 8);
  CHECK(r_bdl.structurally_complete);
  CHECK(!r_bdl.universally_complete);
  CHECK(!r_bdl.non_negative_universally_complete);

  auto r_st = classify_completeness(profile(Sig::st), 2, 8);
  CHECK(r_st.structurally_complete);
  CHECK(!r_st.universally_complete);
  CHECK(r_st.non_negative_universally_complete);

  auto r_dl = classify_completeness(profile(Sig::dl), 2, 8);
  CHECK(r_dl.structurally_complete);
  CHECK(r_dl.universally_complete);
  CHECK(r_dl.non_negative_universally_complete);

  for (Sig sig : {Sig::dma, Sig::dml, Sig::ka, Sig::kl}) {
    auto r = classify_completeness(profile(sig), 2, 8);
    INFO(sig_name(sig));
    CHECK(!r.structurally_complete);
    CHECK(!r.universally_complete);
    CHECK(!r.non_negative_universally_complete);
  }
}

TEST_CASE("the lemma suite is clean at the default bounds") {
  for (Sig sig : {Sig::bdl, Sig::dl, Sig::st, Sig::dma, Sig::dml, Sig::ka, Sig::kl}) {
    LemmaSuiteReport r = verify_lemma_suite(profile(sig), 2, 8, 4);
    INFO(sig_name(sig));
    for (const auto& d : r.disagreements) INFO(d);
    CHECK(r.disagreements.empty());
    CHECK(r.members_checked > 0);
    // each member got all three routes for both membership problems
    for (const auto& v : r.verdicts) {
      CHECK(v.is_clause == v.is_dual);
      CHECK(v.isp_clause == v.isp_dual);
      if (v.is_witness_found) CHECK(v.is_dual);
      if (v.isp_witness_found) CHECK(v.isp_dual);
    }
  }
}

TEST_CASE("exactness agrees with enumerated validity for structurally complete bdl") {
  const VarietyProfile& bdl = profile(Sig::bdl);
  Enumeration en = enumerate_members(bdl, 2, 8);
  testsupport::ClauseGen gen(Sig::bdl, 20250809);
  for (int i = 0; i < 15; ++i) {
    Clause q = gen.quasi_identity();
    bool exact = admissible_quasi_exact(bdl, q);
    bool enumerated = valid_in_class(en.members, q).ok;
    INFO(print_clause(q));
    CHECK(exact == enumerated);
  }
}
