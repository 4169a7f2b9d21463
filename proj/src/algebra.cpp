#include "uaw/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "uaw/clause.hpp"

namespace uaw {

namespace {

struct SigInfo {
  const char* name;
  std::vector<Op> ops;
  bool bounded;
  Sig bar;
};

const SigInfo& sig_info(Sig s) {
  static const std::map<Sig, SigInfo> table = {
      {Sig::bdl, {"bdl", {Op::meet, Op::join, Op::bot, Op::top}, true, Sig::bdl}},
      {Sig::dl, {"dl", {Op::meet, Op::join}, false, Sig::bdl}},
      {Sig::st, {"st", {Op::meet, Op::join, Op::star, Op::bot, Op::top}, true, Sig::st}},
      {Sig::dma, {"dma", {Op::meet, Op::join, Op::neg, Op::bot, Op::top}, true, Sig::dma}},
      {Sig::dml, {"dml", {Op::meet, Op::join, Op::neg}, false, Sig::dma}},
      {Sig::ka, {"ka", {Op::meet, Op::join, Op::neg, Op::bot, Op::top}, true, Sig::ka}},
      {Sig::kl, {"kl", {Op::meet, Op::join, Op::neg}, false, Sig::ka}},
  };
  return table.at(s);
}

}  // namespace

const char* sig_name(Sig s) { return sig_info(s).name; }

std::optional<Sig> sig_by_name(const std::string& name) {
  for (Sig s : {Sig::bdl, Sig::dl, Sig::st, Sig::dma, Sig::dml, Sig::ka, Sig::kl})
    if (name == sig_info(s).name) return s;
  return std::nullopt;
}

const char* op_name(Op op) {
  switch (op) {
    case Op::meet: return "meet";
    case Op::join: return "join";
    case Op::neg: return "neg";
    case Op::star: return "star";
    case Op::bot: return "bot";
    case Op::top: return "top";
  }
  return "?";
}

std::optional<Op> op_by_name(const std::string& name) {
  for (Op op : {Op::meet, Op::join, Op::neg, Op::star, Op::bot, Op::top})
    if (name == op_name(op)) return op;
  return std::nullopt;
}

int op_arity(Op op) {
  switch (op) {
    case Op::meet:
    case Op::join: return 2;
    case Op::neg:
    case Op::star: return 1;
    default: return 0;
  }
}

const std::vector<Op>& sig_ops(Sig s) { return sig_info(s).ops; }

bool sig_has(Sig s, Op op) {
  const auto& ops = sig_info(s).ops;
  return std::find(ops.begin(), ops.end(), op) != ops.end();
}

bool sig_is_bounded(Sig s) { return sig_info(s).bounded; }

Sig sig_bar_target(Sig s) { return sig_info(s).bar; }

int FiniteAlgebra::apply1(Op op, int x) const {
  switch (op) {
    case Op::neg:
      if (neg.empty()) throw SignatureError("operation neg not in signature");
      return neg[x];
    case Op::star:
      if (star.empty()) throw SignatureError("operation star not in signature");
      return star[x];
    default:
      throw SignatureError(std::string("operation ") + op_name(op) + " is not unary");
  }
}

int FiniteAlgebra::apply2(Op op, int x, int y) const {
  switch (op) {
    case Op::meet: return mt(x, y);
    case Op::join: return jn(x, y);
    default:
      throw SignatureError(std::string("operation ") + op_name(op) + " is not binary");
  }
}

int FiniteAlgebra::constant(Op op) const {
  switch (op) {
    case Op::bot:
      if (bot < 0) throw SignatureError("constant bot not in signature");
      return bot;
    case Op::top:
      if (top < 0) throw SignatureError("constant top not in signature");
      return top;
    default:
      throw SignatureError(std::string("operation ") + op_name(op) + " is not a constant");
  }
}

std::string FiniteAlgebra::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty())
    return labels[x];
  return std::to_string(x);
}

void FiniteAlgebra::check_well_formed(const std::string& context) const {
  auto fail = [&](const std::string& field, const std::string& msg) {
    throw DataError(context + ": " + field + ": " + msg);
  };
  if (size <= 0) fail("size", "must be positive");
  const long long n = size;
  auto check_bin = [&](const char* field, const std::vector<int>& t) {
    if (static_cast<long long>(t.size()) != n * n)
      fail(field, "expected " + std::to_string(n) + "x" + std::to_string(n) + " table");
    for (long long i = 0; i < n * n; ++i)
      if (t[i] < 0 || t[i] >= size)
        fail(std::string(field) + "[" + std::to_string(i / n) + "][" + std::to_string(i % n) + "]",
             "value " + std::to_string(t[i]) + " out of range 0.." + std::to_string(size - 1));
  };
  auto check_un = [&](const char* field, const std::vector<int>& t, bool wanted) {
    if (!wanted) {
      if (!t.empty()) fail(field, "not part of this signature");
      return;
    }
    if (static_cast<long long>(t.size()) != n)
      fail(field, "expected table of length " + std::to_string(n));
    for (long long i = 0; i < n; ++i)
      if (t[i] < 0 || t[i] >= size)
        fail(std::string(field) + "[" + std::to_string(i) + "]", "value out of range");
  };
  check_bin("ops.meet", meet);
  check_bin("ops.join", join);
  check_un("ops.neg", neg, sig_has(sig, Op::neg));
  check_un("ops.star", star, sig_has(sig, Op::star));
  if (sig_has(sig, Op::bot)) {
    if (bot < 0 || bot >= size) fail("ops.bot", "value out of range");
    if (top < 0 || top >= size) fail("ops.top", "value out of range");
  } else {
    if (bot != -1 || top != -1) fail("ops.bot/top", "not part of this signature");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    fail("elements", "expected one label per element");
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& o) const {
  return sig == o.sig && size == o.size && meet == o.meet && join == o.join &&
         neg == o.neg && star == o.star && bot == o.bot && top == o.top;
}

// ---- term evaluation --------------------------------------------------------

int eval_term(const FiniteAlgebra& alg, const TermPtr& term,
              const std::vector<std::pair<std::string, int>>& assignment) {
  switch (term->kind) {
    case Term::Kind::var: {
      for (const auto& [name, value] : assignment)
        if (name == term->var) return value;
      throw DataError("unknown variable '" + term->var + "'");
    }
    case Term::Kind::bot: return alg.constant(Op::bot);
    case Term::Kind::top: return alg.constant(Op::top);
    case Term::Kind::neg: return alg.apply1(Op::neg, eval_term(alg, term->a, assignment));
    case Term::Kind::star: return alg.apply1(Op::star, eval_term(alg, term->a, assignment));
    case Term::Kind::meet:
      return alg.mt(eval_term(alg, term->a, assignment), eval_term(alg, term->b, assignment));
    case Term::Kind::join:
      return alg.jn(eval_term(alg, term->a, assignment), eval_term(alg, term->b, assignment));
  }
  throw DataError("corrupt term");
}

// ---- homomorphisms ----------------------------------------------------------

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map) {
  if (a.sig != b.sig || static_cast<int>(map.size()) != a.size) return false;
  for (int v : map)
    if (v < 0 || v >= b.size) return false;
  for (int x = 0; x < a.size; ++x)
    for (int y = 0; y < a.size; ++y) {
      if (map[a.mt(x, y)] != b.mt(map[x], map[y])) return false;
      if (map[a.jn(x, y)] != b.jn(map[x], map[y])) return false;
    }
  if (!a.neg.empty())
    for (int x = 0; x < a.size; ++x)
      if (map[a.neg[x]] != b.neg[map[x]]) return false;
  if (!a.star.empty())
    for (int x = 0; x < a.size; ++x)
      if (map[a.star[x]] != b.star[map[x]]) return false;
  if (a.bot >= 0 && (map[a.bot] != b.bot || map[a.top] != b.top)) return false;
  return true;
}

namespace {

// Closure of `seed` under constants and operations; records, for each new
// element, how it was derived so partial homomorphisms extend cheaply.
struct Derivation {
  Op op;
  int x, y;  // positions in the closure order
};

struct ClosureTrace {
  std::vector<int> elements;               // closure, in discovery order
  std::vector<std::optional<Derivation>> how;  // nullopt: seed or constant
};

ClosureTrace closure_trace(const FiniteAlgebra& a, const std::vector<int>& seed) {
  ClosureTrace t;
  std::vector<int> pos(a.size, -1);
  auto add = [&](int e, std::optional<Derivation> d) {
    if (pos[e] >= 0) return;
    pos[e] = static_cast<int>(t.elements.size());
    t.elements.push_back(e);
    t.how.push_back(d);
  };
  if (a.bot >= 0) {
    add(a.bot, Derivation{Op::bot, -1, -1});
    add(a.top, Derivation{Op::top, -1, -1});
  }
  for (int e : seed) {
    if (e < 0 || e >= a.size) throw DataError("seed index out of range");
    add(e, std::nullopt);
  }
  for (size_t i = 0; i < t.elements.size(); ++i) {
    int x = t.elements[i];
    if (!a.neg.empty()) add(a.neg[x], Derivation{Op::neg, static_cast<int>(i), -1});
    if (!a.star.empty()) add(a.star[x], Derivation{Op::star, static_cast<int>(i), -1});
    for (size_t j = 0; j <= i; ++j) {
      int y = t.elements[j];
      add(a.mt(x, y), Derivation{Op::meet, static_cast<int>(i), static_cast<int>(j)});
      add(a.jn(x, y), Derivation{Op::join, static_cast<int>(i), static_cast<int>(j)});
      add(a.mt(y, x), Derivation{Op::meet, static_cast<int>(j), static_cast<int>(i)});
      add(a.jn(y, x), Derivation{Op::join, static_cast<int>(j), static_cast<int>(i)});
    }
  }
  return t;
}

}  // namespace

std::vector<int> greedy_generators(const FiniteAlgebra& a) {
  std::vector<int> gens;
  std::set<int> have;
  {
    auto base = closure_trace(a, {});
    have.insert(base.elements.begin(), base.elements.end());
  }
  while (static_cast<int>(have.size()) < a.size) {
    int next = -1;
    for (int e = 0; e < a.size; ++e)
      if (!have.count(e)) { next = e; break; }
    gens.push_back(next);
    auto c = closure_trace(a, gens);
    have.clear();
    have.insert(c.elements.begin(), c.elements.end());
  }
  return gens;
}

std::vector<Homomorphism> homomorphisms(const FiniteAlgebra& a,
                                        const FiniteAlgebra& b) {
  if (a.sig != b.sig) throw SignatureError("homomorphisms: signature mismatch");
  std::vector<int> gens = greedy_generators(a);
  ClosureTrace trace = closure_trace(a, gens);
  // Positions of the generators in the closure order.
  std::vector<int> gen_pos;
  {
    std::vector<int> pos(a.size, -1);
    for (size_t i = 0; i < trace.elements.size(); ++i) pos[trace.elements[i]] = static_cast<int>(i);
    for (int g : gens) gen_pos.push_back(pos[g]);
  }
  const int n = static_cast<int>(trace.elements.size());
  std::vector<std::vector<int>> found;
  std::vector<int> img(n, -1);  // images along the closure order
  std::vector<int> choice(gens.size(), 0);

  // Odometer over generator images; everything else is forced by its
  // derivation, then the full map is verified once.
  long long total = 1;
  for (size_t i = 0; i < gens.size(); ++i) total *= b.size;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::fill(img.begin(), img.end(), -1);
    for (size_t i = 0; i < gens.size(); ++i) {
      choice[i] = static_cast<int>(c % b.size);
      c /= b.size;
    }
    for (int i = 0; i < n; ++i) {
      int v;
      if (trace.how[i].has_value()) {
        const Derivation& d = *trace.how[i];
        switch (d.op) {
          case Op::bot: v = b.bot; break;
          case Op::top: v = b.top; break;
          case Op::neg: v = b.neg[img[d.x]]; break;
          case Op::star: v = b.star[img[d.x]]; break;
          case Op::meet: v = b.mt(img[d.x], img[d.y]); break;
          case Op::join: v = b.jn(img[d.x], img[d.y]); break;
          default: v = -1;
        }
      } else {
        size_t which = 0;
        for (size_t g = 0; g < gen_pos.size(); ++g)
          if (gen_pos[g] == i) which = g;
        v = choice[which];
      }
      img[i] = v;
    }
    std::vector<int> map(a.size, -1);
    for (int i = 0; i < n; ++i) map[trace.elements[i]] = img[i];
    if (is_homomorphism(a, b, map)) found.push_back(std::move(map));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Homomorphism> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(Homomorphism{std::move(m)});
  return out;
}

std::pair<FiniteAlgebra, Homomorphism> subalgebra_generated(
    const FiniteAlgebra& a, const std::vector<int>& seed) {
  ClosureTrace t = closure_trace(a, seed);
  std::vector<int> universe = t.elements;
  std::sort(universe.begin(), universe.end());
  if (universe.empty())
    throw DataError("subalgebra_generated: empty seed in a constant-free signature");
  std::vector<int> pos(a.size, -1);
  for (size_t i = 0; i < universe.size(); ++i) pos[universe[i]] = static_cast<int>(i);
  FiniteAlgebra s;
  s.sig = a.sig;
  s.size = static_cast<int>(universe.size());
  s.meet.resize(s.size * s.size);
  s.join.resize(s.size * s.size);
  for (int i = 0; i < s.size; ++i)
    for (int j = 0; j < s.size; ++j) {
      s.meet[i * s.size + j] = pos[a.mt(universe[i], universe[j])];
      s.join[i * s.size + j] = pos[a.jn(universe[i], universe[j])];
    }
  if (!a.neg.empty()) {
    s.neg.resize(s.size);
    for (int i = 0; i < s.size; ++i) s.neg[i] = pos[a.neg[universe[i]]];
  }
  if (!a.star.empty()) {
    s.star.resize(s.size);
    for (int i = 0; i < s.size; ++i) s.star[i] = pos[a.star[universe[i]]];
  }
  if (a.bot >= 0) {
    s.bot = pos[a.bot];
    s.top = pos[a.top];
  }
  if (!a.labels.empty()) {
    s.labels.resize(s.size);
    for (int i = 0; i < s.size; ++i) s.labels[i] = a.label(universe[i]);
  }
  return {std::move(s), Homomorphism{std::move(universe)}};
}

FiniteAlgebra trivial_algebra(Sig sig) {
  FiniteAlgebra a;
  a.sig = sig;
  a.size = 1;
  a.name = "trivial";
  a.meet = {0};
  a.join = {0};
  if (sig_has(sig, Op::neg)) a.neg = {0};
  if (sig_has(sig, Op::star)) a.star = {0};
  if (sig_has(sig, Op::bot)) {
    a.bot = 0;
    a.top = 0;
  }
  return a;
}

std::vector<int> power_coords(int index, int base_size, int n) {
  std::vector<int> c(n);
  for (int i = n - 1; i >= 0; --i) {
    c[i] = index % base_size;
    index /= base_size;
  }
  return c;
}

int power_index(const std::vector<int>& coords, int base_size) {
  int idx = 0;
  for (int c : coords) idx = idx * base_size + c;
  return idx;
}

FiniteAlgebra direct_product(const std::vector<const FiniteAlgebra*>& factors,
                             const Budgets& budgets) {
  if (factors.empty()) throw DataError("direct_product: empty factor list");
  Sig sig = factors[0]->sig;
  long long size = 1;
  for (const FiniteAlgebra* f : factors) {
    if (f->sig != sig) throw SignatureError("direct_product: signature mismatch");
    size *= f->size;
    if (size > budgets.max_carrier)
      throw BudgetError("direct_product: carrier exceeds budget",
                        static_cast<std::uint64_t>(size),
                        static_cast<std::uint64_t>(budgets.max_carrier));
  }
  const int k = static_cast<int>(factors.size());
  const int n = static_cast<int>(size);
  // index -> per-factor coordinates (mixed radix, first factor most significant)
  auto coords_of = [&](int idx) {
    std::vector<int> c(k);
    for (int i = k - 1; i >= 0; --i) {
      c[i] = idx % factors[i]->size;
      idx /= factors[i]->size;
    }
    return c;
  };
  auto index_of = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i]->size + c[i];
    return idx;
  };
  FiniteAlgebra p;
  p.sig = sig;
  p.size = n;
  p.meet.resize(static_cast<size_t>(n) * n);
  p.join.resize(static_cast<size_t>(n) * n);
  std::vector<std::vector<int>> all_coords(n);
  for (int i = 0; i < n; ++i) all_coords[i] = coords_of(i);
  std::vector<int> tmp(k);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < k; ++i) tmp[i] = factors[i]->mt(all_coords[x][i], all_coords[y][i]);
      p.meet[static_cast<size_t>(x) * n + y] = index_of(tmp);
      for (int i = 0; i < k; ++i) tmp[i] = factors[i]->jn(all_coords[x][i], all_coords[y][i]);
      p.join[static_cast<size_t>(x) * n + y] = index_of(tmp);
    }
  if (sig_has(sig, Op::neg)) {
    p.neg.resize(n);
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < k; ++i) tmp[i] = factors[i]->neg[all_coords[x][i]];
      p.neg[x] = index_of(tmp);
    }
  }
  if (sig_has(sig, Op::star)) {
    p.star.resize(n);
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < k; ++i) tmp[i] = factors[i]->star[all_coords[x][i]];
      p.star[x] = index_of(tmp);
    }
  }
  if (sig_has(sig, Op::bot)) {
    for (int i = 0; i < k; ++i) tmp[i] = factors[i]->bot;
    p.bot = index_of(tmp);
    for (int i = 0; i < k; ++i) tmp[i] = factors[i]->top;
    p.top = index_of(tmp);
  }
  return p;
}

FiniteAlgebra direct_power(const FiniteAlgebra& a, int n, const Budgets& budgets) {
  if (n < 0) throw DataError("direct_power: negative exponent");
  if (n == 0) {
    FiniteAlgebra t = trivial_algebra(a.sig);
    t.name = a.name.empty() ? "trivial" : a.name + "^0";
    return t;
  }
  std::vector<const FiniteAlgebra*> fs(n, &a);
  FiniteAlgebra p = direct_product(fs, budgets);
  if (!a.name.empty()) p.name = a.name + "^" + std::to_string(n);
  if (!a.labels.empty() && p.size <= 4096) {
    p.labels.resize(p.size);
    for (int i = 0; i < p.size; ++i) {
      auto c = power_coords(i, a.size, n);
      std::string l = "(";
      for (int j = 0; j < n; ++j) l += a.label(c[j]) + (j + 1 < n ? "," : "");
      p.labels[i] = l + ")";
    }
  }
  return p;
}

// ---- isomorphism ------------------------------------------------------------

namespace {

// Cheap invariant per element, refined once through the tables; used only to
// cut the matching order, correctness comes from the final check.
std::vector<long long> iso_invariants(const FiniteAlgebra& a) {
  std::vector<long long> inv(a.size, 0);
  for (int x = 0; x < a.size; ++x) {
    long long h = 0;
    int below = 0, above = 0;
    for (int y = 0; y < a.size; ++y) {
      if (a.leq(y, x)) ++below;
      if (a.leq(x, y)) ++above;
    }
    h = below * 1009 + above * 31;
    if (!a.neg.empty()) h = h * 7 + (a.neg[x] == x ? 1 : 2);
    if (!a.star.empty()) h = h * 7 + (a.star[a.star[x]] == x ? 1 : 2);
    if (a.bot == x) h += 1'000'003;
    if (a.top == x) h += 2'000'003;
    inv[x] = h;
  }
  // one refinement round: mix in sorted neighbour invariants
  std::vector<long long> out(a.size, 0);
  for (int x = 0; x < a.size; ++x) {
    std::vector<long long> nb;
    for (int y = 0; y < a.size; ++y) {
      nb.push_back(inv[a.mt(x, y)] * 3 + inv[a.jn(x, y)]);
    }
    std::sort(nb.begin(), nb.end());
    long long h = inv[x];
    for (long long v : nb) h = h * 1315423911LL + v;
    if (!a.neg.empty()) h = h * 31 + inv[a.neg[x]];
    if (!a.star.empty()) h = h * 31 + inv[a.star[x]];
    out[x] = h;
  }
  return out;
}

bool iso_backtrack(const FiniteAlgebra& a, const FiniteAlgebra& b,
                   const std::vector<long long>& ia, const std::vector<long long>& ib,
                   std::vector<int>& map, std::vector<char>& used, int x) {
  if (x == a.size) return is_homomorphism(a, b, map);
  for (int v = 0; v < b.size; ++v) {
    if (used[v] || ia[x] != ib[v]) continue;
    // local consistency against already mapped elements
    bool ok = true;
    for (int y = 0; y < x && ok; ++y) {
      if (map[a.mt(x, y)] >= 0 && map[a.mt(x, y)] != b.mt(v, map[y])) ok = false;
      if (map[a.jn(x, y)] >= 0 && map[a.jn(x, y)] != b.jn(v, map[y])) ok = false;
    }
    if (!ok) continue;
    map[x] = v;
    used[v] = 1;
    if (iso_backtrack(a, b, ia, ib, map, used, x + 1)) return true;
    map[x] = -1;
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<Homomorphism> is_isomorphic(const FiniteAlgebra& a,
                                          const FiniteAlgebra& b) {
  if (a.sig != b.sig) throw SignatureError("is_isomorphic: signature mismatch");
  if (a.size != b.size) return std::nullopt;
  auto ia = iso_invariants(a);
  auto ib = iso_invariants(b);
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(a.size, -1);
  std::vector<char> used(b.size, 0);
  if (iso_backtrack(a, b, ia, ib, map, used, 0)) return Homomorphism{map};
  return std::nullopt;
}

// ---- bar construction -------------------------------------------------------

FiniteAlgebra add_bounds(const FiniteAlgebra& a) {
  if (sig_is_bounded(a.sig))
    throw SignatureError("add_bounds: signature already has bounds");
  FiniteAlgebra r;
  r.sig = sig_bar_target(a.sig);
  r.size = a.size + 2;
  const int nb = a.size;      // fresh bottom
  const int nt = a.size + 1;  // fresh top
  r.bot = nb;
  r.top = nt;
  r.meet.assign(static_cast<size_t>(r.size) * r.size, 0);
  r.join.assign(static_cast<size_t>(r.size) * r.size, 0);
  auto M = [&](int x, int y) -> int& { return r.meet[x * r.size + y]; };
  auto J = [&](int x, int y) -> int& { return r.join[x * r.size + y]; };
  for (int x = 0; x < r.size; ++x)
    for (int y = 0; y < r.size; ++y) {
      if (x == nb || y == nb) {
        M(x, y) = nb;
        J(x, y) = (x == nb) ? y : x;
      } else if (x == nt || y == nt) {
        M(x, y) = (x == nt) ? y : x;
        J(x, y) = nt;
      } else {
        M(x, y) = a.mt(x, y);
        J(x, y) = a.jn(x, y);
      }
    }
  if (sig_has(r.sig, Op::neg)) {
    r.neg.resize(r.size);
    for (int x = 0; x < a.size; ++x) r.neg[x] = a.neg[x];
    r.neg[nb] = nt;
    r.neg[nt] = nb;
  }
  r.labels.resize(r.size);
  for (int x = 0; x < a.size; ++x) r.labels[x] = a.label(x);
  r.labels[nb] = "_bot";
  r.labels[nt] = "_top";
  if (!a.name.empty()) r.name = a.name + "+bounds";
  return r;
}

// ---- variety laws -----------------------------------------------------------

namespace {

ValidationResult fail_law(const FiniteAlgebra& a, const std::string& law,
                          std::initializer_list<int> elems) {
  ValidationResult r;
  r.ok = false;
  std::ostringstream os;
  os << law << " at";
  for (int e : elems) os << " " << a.label(e);
  r.witness = os.str();
  return r;
}

}  // namespace

ValidationResult validate_variety(const FiniteAlgebra& a) {
  const int n = a.size;
  for (int x = 0; x < n; ++x) {
    if (a.mt(x, x) != x) return fail_law(a, "meet idempotence fails", {x});
    if (a.jn(x, x) != x) return fail_law(a, "join idempotence fails", {x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (a.mt(x, y) != a.mt(y, x)) return fail_law(a, "meet commutativity fails", {x, y});
      if (a.jn(x, y) != a.jn(y, x)) return fail_law(a, "join commutativity fails", {x, y});
      if (a.mt(x, a.jn(x, y)) != x) return fail_law(a, "absorption fails", {x, y});
      if (a.jn(x, a.mt(x, y)) != x) return fail_law(a, "absorption fails", {x, y});
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (a.mt(a.mt(x, y), z) != a.mt(x, a.mt(y, z)))
          return fail_law(a, "meet associativity fails", {x, y, z});
        if (a.jn(a.jn(x, y), z) != a.jn(x, a.jn(y, z)))
          return fail_law(a, "join associativity fails", {x, y, z});
        if (a.mt(x, a.jn(y, z)) != a.jn(a.mt(x, y), a.mt(x, z)))
          return fail_law(a, "distributivity fails", {x, y, z});
      }
  if (a.bot >= 0) {
    for (int x = 0; x < n; ++x) {
      if (a.mt(x, a.bot) != a.bot) return fail_law(a, "bottom law fails", {x});
      if (a.jn(x, a.top) != a.top) return fail_law(a, "top law fails", {x});
    }
  }
  if (!a.neg.empty()) {
    for (int x = 0; x < n; ++x)
      if (a.neg[a.neg[x]] != x) return fail_law(a, "involution fails", {x});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (a.neg[a.mt(x, y)] != a.jn(a.neg[x], a.neg[y]))
          return fail_law(a, "De Morgan law fails", {x, y});
    if (a.sig == Sig::ka || a.sig == Sig::kl) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int l = a.mt(x, a.neg[x]);
          int r = a.jn(y, a.neg[y]);
          if (a.mt(l, r) != l) {
            ValidationResult res;
            res.ok = false;
            res.witness = "Kleene inequality fails: " + a.label(x) + "/\\~" + a.label(x) +
                          " = " + a.label(l) + " is not below " + a.label(y) + "\\/~" +
                          a.label(y) + " = " + a.label(r);
            return res;
          }
        }
    }
  }
  if (!a.star.empty()) {
    // star must be the pseudocomplement: a* = max{b | a /\ b = bot}
    for (int x = 0; x < n; ++x) {
      int s = a.star[x];
      if (a.mt(x, s) != a.bot) return fail_law(a, "pseudocomplement not disjoint", {x});
      for (int b = 0; b < n; ++b)
        if (a.mt(x, b) == a.bot && a.mt(b, s) != b)
          return fail_law(a, "pseudocomplement not maximal", {x, b});
    }
    for (int x = 0; x < n; ++x)
      if (a.jn(a.star[x], a.star[a.star[x]]) != a.top)
        return fail_law(a, "Stone identity fails", {x});
  }
  return {};
}

}  // namespace uaw
