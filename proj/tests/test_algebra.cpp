#include "doctest.h"
#include "uaw/variety.hpp"
#include "uaw/clause.hpp"

using namespace uaw;

namespace {

int idx_of_label(const FiniteAlgebra& a, const std::string& l) {
  for (int i = 0; i < a.size; ++i)
    if (a.label(i) == l) return i;
  return -1;
}

}  // namespace

TEST_CASE("builtin generators are well-formed members of their varieties") {
  for (const FiniteAlgebra* a : {&builtin_2(), &builtin_S(), &builtin_D(), &builtin_K()}) {
    a->check_well_formed(a->name);
    CHECK(validate_variety(*a).ok);
  }
  CHECK(builtin_2().size == 2);
  CHECK(builtin_S().size == 3);
  CHECK(builtin_D().size == 4);
  CHECK(builtin_K().size == 3);
}

TEST_CASE("term evaluation over tables") {
  const FiniteAlgebra& k = builtin_K();
  int a = idx_of_label(k, "a");
  // ~x \/ x evaluates to a at a in the three-element Kleene chain
  TermPtr t = t_join(t_neg(t_var("x")), t_var("x"));
  CHECK(eval_term(k, t, {{"x", a}}) == a);
  // identity case
  for (int c = 0; c < k.size; ++c) CHECK(eval_term(k, t_var("x"), {{"x", c}}) == c);
  // pointwise product oracle: (0,1) /\ (1,0) = (0,0) in the square of 2
  FiniteAlgebra sq = direct_power(builtin_2(), 2);
  int e01 = power_index({0, 1}, 2), e10 = power_index({1, 0}, 2);
  CHECK(eval_term(sq, t_meet(t_var("x"), t_var("y")), {{"x", e01}, {"y", e10}}) ==
        power_index({0, 0}, 2));
  CHECK_THROWS_AS(eval_term(k, t_var("q"), {{"x", 0}}), DataError);
  CHECK_THROWS_AS(eval_term(k, t_star(t_var("x")), {{"x", 0}}), SignatureError);
}

TEST_CASE("homomorphism enumeration") {
  const FiniteAlgebra& two = builtin_2();
  auto hs = homomorphisms(two, two);
  REQUIRE(hs.size() == 1);  // both elements are constants
  CHECK(hs[0].map == std::vector<int>{0, 1});

  const FiniteAlgebra& d = builtin_D();
  auto hd = homomorphisms(d, d);
  REQUIRE(hd.size() == 2);  // identity and the a<->b swap
  CHECK(hd[0].map == std::vector<int>{0, 1, 2, 3});
  CHECK(hd[1].map == std::vector<int>{0, 2, 1, 3});
  for (const auto& h : hd) CHECK(is_homomorphism(d, d, h.map));

  // nothing maps a collapsed algebra into one with distinct bounds
  CHECK(homomorphisms(trivial_algebra(Sig::bdl), two).empty());

  CHECK_THROWS_AS(homomorphisms(two, builtin_K()), SignatureError);
}

TEST_CASE("homomorphism enumeration matches the all-maps filter") {
  const FiniteAlgebra& k = builtin_K();
  FiniteAlgebra k2 = direct_power(k, 2);
  struct Pair {
    const FiniteAlgebra* a;
    const FiniteAlgebra* b;
  };
  const FiniteAlgebra& d = builtin_D();
  const FiniteAlgebra& s = builtin_S();
  for (Pair pr : {Pair{&k2, &k}, Pair{&d, &d}, Pair{&s, &s}, Pair{&k, &k2}}) {
    std::vector<std::vector<int>> brute;
    long long total = 1;
    for (int i = 0; i < pr.a->size; ++i) total *= pr.b->size;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      std::vector<int> map(pr.a->size);
      for (int i = 0; i < pr.a->size; ++i) {
        map[i] = static_cast<int>(c % pr.b->size);
        c /= pr.b->size;
      }
      if (is_homomorphism(*pr.a, *pr.b, map)) brute.push_back(std::move(map));
    }
    std::sort(brute.begin(), brute.end());
    auto engine = homomorphisms(*pr.a, *pr.b);
    REQUIRE(engine.size() == brute.size());
    for (size_t i = 0; i < brute.size(); ++i) CHECK(engine[i].map == brute[i]);
  }
}

TEST_CASE("enumeration finds every closed subuniverse up to isomorphism") {
  for (Sig sig : {Sig::bdl, Sig::ka}) {
    const VarietyProfile& p = profile(sig);
    FiniteAlgebra power = direct_power(p.generator, 2);
    Enumeration en = enumerate_members(p, 2, 8);
    REQUIRE(power.size <= 16);
    for (long long mask = 1; mask < (1LL << power.size); ++mask) {
      std::vector<int> u;
      for (int e = 0; e < power.size; ++e)
        if (mask >> e & 1) u.push_back(e);
      if (static_cast<int>(u.size()) > 8) continue;
      auto in = [&](int e) { return (mask >> e & 1) != 0; };
      bool closed = true;
      if (power.bot >= 0 && (!in(power.bot) || !in(power.top))) closed = false;
      for (size_t i = 0; i < u.size() && closed; ++i) {
        if (!power.neg.empty() && !in(power.neg[u[i]])) closed = false;
        for (size_t j = 0; j < u.size() && closed; ++j)
          if (!in(power.mt(u[i], u[j])) || !in(power.jn(u[i], u[j]))) closed = false;
      }
      if (!closed) continue;
      auto [sub, emb] = subalgebra_generated(power, u);
      bool found = false;
      for (const auto& m : en.members)
        if (m.size == sub.size && is_isomorphic(m, sub)) found = true;
      INFO(sig_name(sig), " subset mask ", mask);
      CHECK(found);
    }
  }
}

TEST_CASE("homomorphism composition stays a homomorphism") {
  const FiniteAlgebra& k = builtin_K();
  FiniteAlgebra k2 = direct_power(k, 2);
  auto fs = homomorphisms(k2, k);
  auto gs = homomorphisms(k, k);
  REQUIRE(!fs.empty());
  REQUIRE(!gs.empty());
  for (const auto& f : fs)
    for (const auto& g : gs) {
      std::vector<int> comp(k2.size);
      for (int e = 0; e < k2.size; ++e) comp[e] = g.map[f.map[e]];
      CHECK(is_homomorphism(k2, k, comp));
    }
}

TEST_CASE("subalgebra generation") {
  const FiniteAlgebra& d = builtin_D();
  auto [sub0, emb0] = subalgebra_generated(d, {});
  CHECK(sub0.size == 2);  // constants close under negation only
  CHECK(emb0.map == std::vector<int>{0, 3});
  CHECK(validate_variety(sub0).ok);

  const FiniteAlgebra& k = builtin_K();
  auto [subk, embk] = subalgebra_generated(k, {idx_of_label(k, "a")});
  CHECK(subk.size == k.size);

  auto [subfull, embfull] = subalgebra_generated(d, {0, 1, 2, 3});
  CHECK(subfull.size == d.size);
  CHECK(is_isomorphic(subfull, d).has_value());
}

TEST_CASE("powers and products") {
  FiniteAlgebra sq = direct_power(builtin_2(), 2);
  CHECK(sq.size == 4);
  CHECK(sq.mt(power_index({1, 0}, 2), power_index({0, 1}, 2)) == power_index({0, 0}, 2));
  CHECK(validate_variety(sq).ok);

  FiniteAlgebra p0 = direct_power(builtin_D(), 0);
  CHECK(p0.size == 1);

  const FiniteAlgebra& k = builtin_K();
  std::vector<const FiniteAlgebra*> kk = {&k, &k};
  CHECK(direct_product(kk).size == 9);

  Budgets tight;
  tight.max_carrier = 100;
  CHECK_THROWS_AS(direct_power(builtin_D(), 4, tight), BudgetError);
}

TEST_CASE("isomorphism testing") {
  FiniteAlgebra sq = direct_power(builtin_2(), 2);
  // permute the carrier of the square: swap the two middle elements
  FiniteAlgebra perm = sq;
  std::vector<int> pm = {0, 2, 1, 3};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      perm.meet[pm[x] * 4 + pm[y]] = pm[sq.mt(x, y)];
      perm.join[pm[x] * 4 + pm[y]] = pm[sq.jn(x, y)];
    }
  perm.bot = pm[sq.bot];
  perm.top = pm[sq.top];
  auto iso = is_isomorphic(sq, perm);
  REQUIRE(iso.has_value());
  CHECK(is_homomorphism(sq, perm, iso->map));

  CHECK(!is_isomorphic(builtin_2(), trivial_algebra(Sig::bdl)).has_value());

  // the 3-chain and the square differ already in size
  auto [chain3, e3] = subalgebra_generated(sq, {power_index({0, 1}, 2)});
  CHECK(chain3.size == 3);
  CHECK(!is_isomorphic(chain3, sq).has_value());
}

TEST_CASE("isomorphism is an equivalence on enumerated members") {
  for (Sig sig : {Sig::bdl, Sig::dma, Sig::ka}) {
    Enumeration en = enumerate_members(profile(sig), 2, 8);
    for (const auto& a : en.members) CHECK(is_isomorphic(a, a).has_value());
    for (size_t i = 0; i < en.members.size(); ++i)
      for (size_t j = i + 1; j < en.members.size(); ++j) {
        bool ij = is_isomorphic(en.members[i], en.members[j]).has_value();
        bool ji = is_isomorphic(en.members[j], en.members[i]).has_value();
        CHECK(ij == ji);
        CHECK(!ij);  // enumeration deduplicates
      }
  }
}

TEST_CASE("bar construction") {
  FiniteAlgebra triv_dl = trivial_algebra(Sig::dl);
  FiniteAlgebra bar = add_bounds(triv_dl);
  CHECK(bar.sig == Sig::bdl);
  CHECK(bar.size == 3);
  CHECK(validate_variety(bar).ok);
  CHECK(bar.mt(0, bar.bot) == bar.bot);
  CHECK(bar.jn(0, bar.top) == bar.top);

  FiniteAlgebra dml_d = unbounded_reduct(builtin_D());
  FiniteAlgebra bar_d = add_bounds(dml_d);
  CHECK(validate_variety(bar_d).ok);
  CHECK(satisfies(bar_d, registry_entry("C3").clause).ok);

  // the bar of the Kleene chain is the 5-chain with order-reversing negation
  FiniteAlgebra kl_k = unbounded_reduct(builtin_K());
  FiniteAlgebra bar_k = add_bounds(kl_k);
  CHECK(bar_k.size == 5);
  CHECK(validate_variety(bar_k).ok);
  FiniteAlgebra chain5;
  chain5.sig = Sig::ka;
  chain5.size = 5;
  chain5.meet.resize(25);
  chain5.join.resize(25);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) {
      chain5.meet[x * 5 + y] = std::min(x, y);
      chain5.join[x * 5 + y] = std::max(x, y);
    }
  chain5.neg = {4, 3, 2, 1, 0};
  chain5.bot = 0;
  chain5.top = 4;
  CHECK(validate_variety(chain5).ok);
  CHECK(is_isomorphic(bar_k, chain5).has_value());

  CHECK_THROWS_AS(add_bounds(builtin_2()), SignatureError);
}

TEST_CASE("variety validation") {
  CHECK(validate_variety(builtin_D()).ok);
  CHECK(validate_variety(trivial_algebra(Sig::bdl)).ok);

  // the diamond violates the Kleene inequality: a /\ ~a = a is not below b \/ ~b = b
  FiniteAlgebra d_as_ka = builtin_D();
  d_as_ka.sig = Sig::ka;
  ValidationResult r = validate_variety(d_as_ka);
  CHECK(!r.ok);
  CHECK(r.witness.find("Kleene") != std::string::npos);

  // breaking the pseudocomplement table must be caught
  FiniteAlgebra bad_s = builtin_S();
  bad_s.star[0] = 0;  // 0* should be 1
  CHECK(!validate_variety(bad_s).ok);
}

TEST_CASE("member enumeration at small bounds") {
  Enumeration en = enumerate_members(profile(Sig::bdl), 1, 4);
  REQUIRE(en.members.size() == 2);  // the trivial algebra and 2 itself
  CHECK(en.members[0].size == 1);
  CHECK(en.members[1].size == 2);

  Enumeration ed = enumerate_members(profile(Sig::dma), 1, 4);
  // subalgebras of the diamond: bounds, the Kleene chain, the diamond (plus trivial)
  REQUIRE(ed.members.size() == 4);
  CHECK(ed.members[0].size == 1);
  CHECK(ed.members[1].size == 2);
  CHECK(ed.members[2].size == 3);
  CHECK(ed.members[3].size == 4);
  CHECK(is_isomorphic(ed.members[3], builtin_D()).has_value());

  for (const auto& m : ed.members) CHECK(validate_variety(m).ok);
}

TEST_CASE("subalgebras and products of members stay members") {
  Enumeration en = enumerate_members(profile(Sig::ka), 1, 3);
  for (const auto& a : en.members) {
    for (int e = 0; e < a.size; ++e) {
      auto [sub, emb] = subalgebra_generated(a, {e});
      CHECK(validate_variety(sub).ok);
    }
    for (const auto& b : en.members) {
      std::vector<const FiniteAlgebra*> fs = {&a, &b};
      CHECK(validate_variety(direct_product(fs)).ok);
    }
  }
}
