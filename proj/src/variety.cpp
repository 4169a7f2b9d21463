#include "uaw/variety.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace uaw {

namespace {

// Builds a bounded distributive lattice from an explicit order table.
FiniteAlgebra lattice_from_order(Sig sig, int n, const std::vector<std::pair<int, int>>& lt,
                                 const std::vector<std::string>& labels) {
  std::vector<char> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : lt) leq[a * n + b] = 1;
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = 1;
  FiniteAlgebra a;
  a.sig = sig;
  a.size = n;
  a.labels = labels;
  a.meet.resize(n * n);
  a.join.resize(n * n);
  auto glb = [&](int x, int y) {
    int best = -1;
    for (int z = 0; z < n; ++z)
      if (leq[z * n + x] && leq[z * n + y] && (best < 0 || leq[best * n + z])) best = z;
    return best;
  };
  auto lub = [&](int x, int y) {
    int best = -1;
    for (int z = 0; z < n; ++z)
      if (leq[x * n + z] && leq[y * n + z] && (best < 0 || leq[z * n + best])) best = z;
    return best;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.meet[x * n + y] = glb(x, y);
      a.join[x * n + y] = lub(x, y);
    }
  return a;
}

StructuredSpace make_space(SpaceKind kind, int n, const std::vector<std::pair<int, int>>& lt,
                           const std::vector<std::string>& labels) {
  StructuredSpace s;
  s.kind = kind;
  s.size = n;
  s.labels = labels;
  s.order.assign(n * n, 0);
  for (int i = 0; i < n; ++i) s.order[i * n + i] = 1;
  for (auto [a, b] : lt) s.order[a * n + b] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (s.order[i * n + k] && s.order[k * n + j]) s.order[i * n + j] = 1;
  return s;
}

}  // namespace

const FiniteAlgebra& builtin_2() {
  static const FiniteAlgebra a = [] {
    FiniteAlgebra x = lattice_from_order(Sig::bdl, 2, {{0, 1}}, {"0", "1"});
    x.name = "2";
    x.bot = 0;
    x.top = 1;
    return x;
  }();
  return a;
}

const FiniteAlgebra& builtin_S() {
  static const FiniteAlgebra a = [] {
    // chain 0 < a < 1 with pseudocomplement 0*=1, a*=0, 1*=0
    FiniteAlgebra x = lattice_from_order(Sig::st, 3, {{0, 1}, {1, 2}}, {"0", "a", "1"});
    x.name = "S";
    x.bot = 0;
    x.top = 2;
    x.star = {2, 0, 0};
    return x;
  }();
  return a;
}

const FiniteAlgebra& builtin_D() {
  static const FiniteAlgebra a = [] {
    // diamond 0 < a,b < 1; negation fixes a and b, swaps the bounds
    FiniteAlgebra x =
        lattice_from_order(Sig::dma, 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"});
    x.name = "D";
    x.bot = 0;
    x.top = 3;
    x.neg = {3, 1, 2, 0};
    return x;
  }();
  return a;
}

const FiniteAlgebra& builtin_K() {
  static const FiniteAlgebra a = [] {
    // chain 0 < a < 1 with negation reversing the chain and fixing a
    FiniteAlgebra x = lattice_from_order(Sig::ka, 3, {{0, 1}, {1, 2}}, {"0", "a", "1"});
    x.name = "K";
    x.bot = 0;
    x.top = 2;
    x.neg = {2, 1, 0};
    return x;
  }();
  return a;
}

namespace {

StructuredSpace space_2() {
  return make_space(SpaceKind::priestley, 2, {{0, 1}}, {"0", "1"});
}

StructuredSpace space_S() {
  // only non-trivial order edge: 1 <= a; d sends a and 1 to 1, fixes 0
  StructuredSpace s = make_space(SpaceKind::stone, 3, {{2, 1}}, {"0", "a", "1"});
  s.unary["d"] = {0, 2, 2};
  return s;
}

StructuredSpace space_D() {
  // diamond a < 0,1 < b; f swaps a and b, fixes 0 and 1
  StructuredSpace s =
      make_space(SpaceKind::demorgan, 4, {{1, 0}, {1, 3}, {0, 2}, {3, 2}}, {"0", "a", "b", "1"});
  s.unary["f"] = {0, 2, 1, 3};
  return s;
}

StructuredSpace space_K() {
  // 0 and 1 below a and incomparable; sim relates everything except 0 and 1
  StructuredSpace s = make_space(SpaceKind::kleene, 3, {{0, 1}, {2, 1}}, {"0", "a", "1"});
  std::vector<char> sim(9, 1);
  sim[0 * 3 + 2] = 0;
  sim[2 * 3 + 0] = 0;
  s.rels["sim"] = sim;
  s.subsets["Y"] = {1, 0, 1};
  return s;
}

VarietyProfile make_profile(Sig sig) {
  VarietyProfile p;
  p.sig = sig;
  p.name = sig_name(sig);
  p.bar_target = sig_bar_target(sig);
  p.has_duality = sig_is_bounded(sig);
  switch (sig) {
    case Sig::bdl:
      p.generator = builtin_2();
      p.gen_space = space_2();
      p.space_kind = SpaceKind::priestley;
      p.basis_clauses = {"C1", "C2", "C3"};
      p.basis_quasi = {};
      break;
    case Sig::dl:
      p.generator = unbounded_reduct(builtin_2());
      p.space_kind = SpaceKind::priestley;
      p.basis_clauses = {};
      p.basis_quasi = {};
      break;
    case Sig::st:
      p.generator = builtin_S();
      p.gen_space = space_S();
      p.space_kind = SpaceKind::stone;
      p.basis_clauses = {"C1"};
      p.basis_quasi = {};
      break;
    case Sig::dma:
      p.generator = builtin_D();
      p.gen_space = space_D();
      p.space_kind = SpaceKind::demorgan;
      p.basis_clauses = {"C3", "C4"};
      p.basis_quasi = {"C6", "C7"};
      break;
    case Sig::dml:
      p.generator = unbounded_reduct(builtin_D());
      p.space_kind = SpaceKind::demorgan;
      p.basis_clauses = {"C4"};
      p.basis_quasi = {"C5"};
      break;
    case Sig::ka:
      p.generator = builtin_K();
      p.gen_space = space_K();
      p.space_kind = SpaceKind::kleene;
      p.basis_clauses = {"C1", "C3", "C8"};
      p.basis_quasi = {"C8"};
      break;
    case Sig::kl:
      p.generator = unbounded_reduct(builtin_K());
      p.space_kind = SpaceKind::kleene;
      p.basis_clauses = {"C4", "C8"};
      p.basis_quasi = {"C8"};
      break;
  }
  p.n0 = p.generator.size;
  return p;
}

}  // namespace

const VarietyProfile& profile(Sig sig) {
  static const std::map<Sig, VarietyProfile> all = [] {
    std::map<Sig, VarietyProfile> m;
    for (Sig s : {Sig::bdl, Sig::dl, Sig::st, Sig::dma, Sig::dml, Sig::ka, Sig::kl})
      m.emplace(s, make_profile(s));
    return m;
  }();
  return all.at(sig);
}

FiniteAlgebra unbounded_reduct(const FiniteAlgebra& a) {
  if (!sig_is_bounded(a.sig)) return a;
  FiniteAlgebra r = a;
  r.bot = -1;
  r.top = -1;
  r.star.clear();
  switch (a.sig) {
    case Sig::bdl:
    case Sig::st: r.sig = Sig::dl; r.neg.clear(); break;
    case Sig::dma: r.sig = Sig::dml; break;
    case Sig::ka: r.sig = Sig::kl; break;
    default: break;
  }
  return r;
}

std::optional<FiniteAlgebra> builtin_algebra(const std::string& name, Sig sig,
                                             const Budgets& budgets) {
  std::string base = name;
  int power = 1;
  if (auto caret = name.find('^'); caret != std::string::npos) {
    base = name.substr(0, caret);
    try {
      power = std::stoi(name.substr(caret + 1));
    } catch (...) {
      return std::nullopt;
    }
    if (power < 0) return std::nullopt;
  }
  FiniteAlgebra a;
  if (base == "2") a = builtin_2();
  else if (base == "S") a = builtin_S();
  else if (base == "D") a = builtin_D();
  else if (base == "K") a = builtin_K();
  else if (base == "trivial") a = trivial_algebra(sig);
  else return std::nullopt;
  if (!sig_is_bounded(sig) && sig_is_bounded(a.sig)) a = unbounded_reduct(a);
  if (a.sig != sig) return std::nullopt;
  if (power != 1) a = direct_power(a, power, budgets);
  return a;
}

// ---- member enumeration -----------------------------------------------------

namespace {

std::vector<int> close_under_ops(const FiniteAlgebra& p, std::vector<int> seed) {
  std::vector<char> in(p.size, 0);
  std::vector<int> work = std::move(seed);
  std::vector<int> out;
  if (p.bot >= 0) {
    work.push_back(p.bot);
    work.push_back(p.top);
  }
  while (!work.empty()) {
    int e = work.back();
    work.pop_back();
    if (in[e]) continue;
    in[e] = 1;
    out.push_back(e);
    if (!p.neg.empty()) work.push_back(p.neg[e]);
    if (!p.star.empty()) work.push_back(p.star[e]);
    for (int f : out) {
      work.push_back(p.mt(e, f));
      work.push_back(p.jn(e, f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Enumeration enumerate_members(const VarietyProfile& p, int max_power, int max_size,
                              const Budgets& budgets) {
  if (max_power < 0 || max_size <= 0) throw DataError("enumerate_members: bad bounds");
  Enumeration result;
  result.max_power = max_power;
  result.max_size = max_size;
  // Complete relative to max_power only: a member of size s always embeds
  // into M^|hom(B,M)|, which is at most |M|^s.
  long long bound = 1;
  for (int i = 0; i < max_size && bound <= (1 << 20); ++i) bound *= p.generator.size;
  result.complete_power_bound = bound;

  std::vector<FiniteAlgebra> found;
  found.push_back(trivial_algebra(p.sig));  // the empty power
  for (int k = 1; k <= max_power; ++k) {
    FiniteAlgebra power = direct_power(p.generator, k, budgets);
    // Grow subuniverses one generator at a time; every subuniverse of size
    // <= max_size is reachable this way because all its stages stay inside
    // it.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> work;
    auto push = [&](std::vector<int> u) {
      if (static_cast<int>(u.size()) > max_size) return;
      if (seen.insert(u).second) work.push_back(std::move(u));
    };
    if (power.bot >= 0) {
      push(close_under_ops(power, {}));
    } else {
      for (int e = 0; e < power.size; ++e) push(close_under_ops(power, {e}));
    }
    while (!work.empty()) {
      std::vector<int> u = work.back();
      work.pop_back();
      for (int e = 0; e < power.size; ++e) {
        if (std::binary_search(u.begin(), u.end(), e)) continue;
        std::vector<int> seed = u;
        seed.push_back(e);
        push(close_under_ops(power, seed));
      }
    }
    for (const auto& u : seen) {
      if (u.empty()) continue;
      auto [sub, embed] = subalgebra_generated(power, u);
      sub.name = "";
      found.push_back(std::move(sub));
    }
  }
  // Deduplicate up to isomorphism, canonical order: size, then tables.
  std::sort(found.begin(), found.end(), [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.meet != b.meet) return a.meet < b.meet;
    if (a.join != b.join) return a.join < b.join;
    if (a.neg != b.neg) return a.neg < b.neg;
    if (a.star != b.star) return a.star < b.star;
    return std::tie(a.bot, a.top) < std::tie(b.bot, b.top);
  });
  for (auto& cand : found) {
    bool dup = false;
    for (const auto& kept : result.members) {
      if (kept.size != cand.size) continue;
      if (is_isomorphic(kept, cand)) {
        dup = true;
        break;
      }
    }
    if (!dup) {
      cand.name = p.name + "#" + std::to_string(result.members.size());
      result.members.push_back(std::move(cand));
    }
  }
  return result;
}

}  // namespace uaw
