#include "doctest.h"
#include "uaw/variety.hpp"

using namespace uaw;

namespace {

const StructuredSpace& gen_space(Sig sig) { return profile(sig).gen_space; }

}  // namespace

TEST_CASE("builtin alter egos pass their axiom lists") {
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka}) {
    AxiomResult r = check_space_axioms(gen_space(sig));
    INFO(sig_name(sig), ": ", r.failed_axiom, " ", r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("powers of the alter egos stay in the category") {
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka})
    for (int n = 0; n <= 4; ++n) {
      StructuredSpace p = space_power(gen_space(sig), n);
      AxiomResult r = check_space_axioms(p);
      INFO(sig_name(sig), "^", n, ": ", r.failed_axiom);
      CHECK(r.ok);
    }
}

TEST_CASE("the Stone power has the expected shape") {
  StructuredSpace s2 = space_power(gen_space(Sig::st), 2);
  CHECK(s2.size == 9);
  // maximal points are exactly the tuples over {0, a}
  auto maxs = s2.maximal_elements();
  CHECK(maxs.size() == 4);
  for (int m : maxs) {
    auto c = power_coords(m, 3, 2);
    for (int v : c) CHECK((v == 0 || v == 1));  // indices of "0" and "a"
  }
  // d fixes exactly one maximal point, the all-zero tuple
  const auto& d = s2.unary.at("d");
  int fixed_max = 0;
  for (int m : maxs)
    if (d[m] == m) ++fixed_max;
  CHECK(fixed_max == 1);
  for (int n = 1; n <= 4; ++n) {
    StructuredSpace sn = space_power(gen_space(Sig::st), n);
    CHECK(static_cast<int>(sn.maximal_elements().size()) == (1 << n));
  }
}

TEST_CASE("in Kleene powers, sim is exactly sharing a lower bound") {
  const StructuredSpace& k = gen_space(Sig::ka);
  for (int n = 0; n <= 3; ++n) {
    StructuredSpace p = space_power(k, n);
    const auto& sim = p.rels.at("sim");
    for (int x = 0; x < p.size; ++x)
      for (int y = 0; y < p.size; ++y) {
        bool lower = false;
        for (int z = 0; z < p.size && !lower; ++z)
          if (p.leq(z, x) && p.leq(z, y)) lower = true;
        CHECK(static_cast<bool>(sim[x * p.size + y]) == lower);
      }
  }
}

TEST_CASE("power with exponent one is the space itself") {
  for (Sig sig : {Sig::bdl, Sig::st, Sig::dma, Sig::ka}) {
    StructuredSpace p = space_power(gen_space(sig), 1);
    CHECK(p.size == gen_space(sig).size);
    CHECK(p.order == gen_space(sig).order);
    CHECK(p.unary == gen_space(sig).unary);
    CHECK(p.rels == gen_space(sig).rels);
    CHECK(p.subsets == gen_space(sig).subsets);
  }
}

TEST_CASE("coproducts are disjoint unions") {
  const StructuredSpace& d = gen_space(Sig::dma);
  Coproduct c = space_coproduct({&d, &d});
  CHECK(c.space.size == 8);
  CHECK(check_space_axioms(c.space).ok);
  for (const auto& inj : c.injections)
    CHECK(is_space_morphism(d, c.space, inj.map));
  // nothing relates across components
  for (int a = 0; a < 4; ++a)
    for (int b = 4; b < 8; ++b) {
      CHECK(!c.space.leq(a, b));
      CHECK(!c.space.leq(b, a));
    }
}

TEST_CASE("morphism enumeration: projections, identity, composition") {
  for (Sig sig : {Sig::st, Sig::ka}) {
    const StructuredSpace& m = gen_space(sig);
    StructuredSpace p2 = space_power(m, 2);
    // coordinate projections are morphisms
    for (int coord = 0; coord < 2; ++coord) {
      std::vector<int> proj(p2.size);
      for (int i = 0; i < p2.size; ++i) proj[i] = power_coords(i, m.size, 2)[coord];
      CHECK(is_space_morphism(p2, m, proj));
    }
    // identity is a morphism; composition of enumerated morphisms closes
    std::vector<int> id(m.size);
    for (int i = 0; i < m.size; ++i) id[i] = i;
    CHECK(is_space_morphism(m, m, id));
    auto ms = morphisms(m, m);
    for (const auto& f : ms)
      for (const auto& g : ms) {
        std::vector<int> comp(m.size);
        for (int i = 0; i < m.size; ++i) comp[i] = g.map[f.map[i]];
        CHECK(is_space_morphism(m, m, comp));
      }
  }
}

TEST_CASE("morphism lists are sorted and every entry checks out") {
  const StructuredSpace& d = gen_space(Sig::dma);
  StructuredSpace p2 = space_power(d, 2);
  auto ms = morphisms(p2, d);
  CHECK(ms.size() == 168);
  for (size_t i = 1; i < ms.size(); ++i) CHECK(ms[i - 1].map < ms[i].map);
  for (const auto& f : ms) CHECK(is_space_morphism(p2, d, f.map));
}

TEST_CASE("surjection search") {
  const StructuredSpace& two = gen_space(Sig::bdl);
  // a 2-chain target is covered by the square of the 2-chain
  StructuredSpace chain = two;  // the 2-chain itself
  StructuredSpace sq = space_power(two, 2);
  auto onto = surjective_morphism_exists(sq, chain);
  REQUIRE(onto.has_value());
  CHECK(is_space_morphism(sq, chain, onto->map));

  // a monotone image of a chain is a chain, so no surjection onto an antichain
  StructuredSpace anti;
  anti.kind = SpaceKind::priestley;
  anti.size = 2;
  anti.order = {1, 0, 0, 1};
  CHECK(!surjective_morphism_exists(two, anti).has_value());

  // covering search: only the named points need to be hit
  auto cover = covering_morphism_exists(sq, anti, {1});
  REQUIRE(cover.has_value());
  for (int q = 0; q < sq.size; ++q) CHECK(cover->map[q] == 1);
}

TEST_CASE("axiom checker flags constructed violations") {
  // Kleene: x ~ y with x in Y but x not below y
  StructuredSpace bad;
  bad.kind = SpaceKind::kleene;
  bad.size = 2;
  bad.order = {1, 0, 0, 1};
  bad.rels["sim"] = {1, 1, 1, 1};
  bad.subsets["Y"] = {1, 1};
  AxiomResult r = check_space_axioms(bad);
  CHECK(!r.ok);
  CHECK(r.failed_axiom == "kleene-sim-y-below");

  // Stone: d must pick the unique minimal point below
  StructuredSpace bs = gen_space(Sig::st);
  bs.unary["d"][1] = 1;  // "a" is not minimal
  AxiomResult rs = check_space_axioms(bs);
  CHECK(!rs.ok);
  CHECK(rs.failed_axiom.substr(0, 7) == "stone-d");

  // De Morgan: f must reverse the order; the identity does not on a diamond
  StructuredSpace bd = gen_space(Sig::dma);
  bd.unary["f"] = {0, 1, 2, 3};
  AxiomResult rd = check_space_axioms(bd);
  CHECK(!rd.ok);
  CHECK(rd.failed_axiom == "demorgan-f-order-reversing");
  bd.unary["f"] = {0, 2, 1, 3};  // the genuine involution passes
  CHECK(check_space_axioms(bd).ok);
}

TEST_CASE("stone d is idempotent and minimal, derived from the axioms") {
  for (int n = 1; n <= 3; ++n) {
    StructuredSpace p = space_power(gen_space(Sig::st), n);
    const auto& d = p.unary.at("d");
    for (int x = 0; x < p.size; ++x) {
      CHECK(d[d[x]] == d[x]);
      CHECK(p.leq(d[x], x));
      for (int y = 0; y < p.size; ++y)
        if (y != d[x]) CHECK(!p.leq(y, d[x]));
    }
  }
}

TEST_CASE("dot output is stable and shows the expected pieces") {
  const StructuredSpace& s = gen_space(Sig::st);
  std::string dot = emit_dot(s);
  CHECK(dot == emit_dot(s));
  auto count = [&](const std::string& needle) {
    int c = 0;
    for (size_t i = 0; (i = dot.find(needle, i)) != std::string::npos; ++i) ++c;
    return c;
  };
  CHECK(count("n0 [label=") + count("n1 [label=") + count("n2 [label=") == 3);
  CHECK(count("label=\"d\"") == 3);         // one d-edge per point
  CHECK(count("];\n") >= 3);
  CHECK(dot.find("n2 -> n1;") != std::string::npos);  // the one Hasse edge
  CHECK(count(" -> ") == 4);                          // 1 order edge + 3 d-edges

  StructuredSpace pt = space_power(s, 0);
  std::string pd = emit_dot(pt);
  CHECK(pd.find("n0") != std::string::npos);
  CHECK(pd.find("n1") == std::string::npos);
}

TEST_CASE("space equality and json-ish accessors") {
  const StructuredSpace& k = gen_space(Sig::ka);
  CHECK(k.rel("sim", 0, 1));
  CHECK(!k.rel("sim", 0, 2));
  CHECK(k.in_subset("Y", 0));
  CHECK(!k.in_subset("Y", 1));
  CHECK(k.bottom() == std::nullopt);  // two minimal points
  CHECK(k.top_point() == std::optional<int>(1));
}
