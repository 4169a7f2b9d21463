#include "uaw/duality.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace uaw {

namespace {

void require_duality(const VarietyProfile& p, const char* who) {
  if (!p.has_duality)
    throw DataError(std::string(who) + ": variety " + p.name +
                    " has no direct duality; use the bounded companion");
}

void require_member(const VarietyProfile& p, const FiniteAlgebra& b, const char* who) {
  if (b.sig != p.sig)
    throw SignatureError(std::string(who) + ": algebra signature does not match variety");
  ValidationResult v = validate_variety(b);
  if (!v.ok) throw DataError(std::string(who) + ": not a member of " + p.name + ": " + v.witness);
}

}  // namespace

DualSpace dual_space(const VarietyProfile& p, const FiniteAlgebra& b, const Budgets&) {
  require_duality(p, "dual_space");
  require_member(p, b, "dual_space");
  DualSpace out;
  out.points = homomorphisms(b, p.generator);
  const int n = static_cast<int>(out.points.size());
  const StructuredSpace& gs = p.gen_space;
  StructuredSpace& x = out.space;
  x.kind = p.space_kind;
  x.size = n;
  x.order.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool le = true;
      for (int e = 0; e < b.size && le; ++e)
        if (!gs.leq(out.points[i].map[e], out.points[j].map[e])) le = false;
      x.order[i * n + j] = le;
    }
  for (const auto& [name, table] : gs.unary) {
    std::vector<int> t(n, -1);
    for (int i = 0; i < n; ++i) {
      std::vector<int> composed(b.size);
      for (int e = 0; e < b.size; ++e) composed[e] = table[out.points[i].map[e]];
      for (int j = 0; j < n; ++j)
        if (out.points[j].map == composed) {
          t[i] = j;
          break;
        }
      if (t[i] < 0)
        throw InvariantError("dual_space: pointwise op " + name +
                             " leaves the homomorphism set");
    }
    x.unary[name] = std::move(t);
  }
  for (const auto& [name, table] : gs.rels) {
    std::vector<char> t(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool rel = true;
        for (int e = 0; e < b.size && rel; ++e)
          if (!table[out.points[i].map[e] * gs.size + out.points[j].map[e]]) rel = false;
        t[i * n + j] = rel;
      }
    x.rels[name] = std::move(t);
  }
  for (const auto& [name, members] : gs.subsets) {
    std::vector<char> t(n, 0);
    for (int i = 0; i < n; ++i) {
      bool in = true;
      for (int e = 0; e < b.size && in; ++e)
        if (!members[out.points[i].map[e]]) in = false;
      t[i] = in;
    }
    x.subsets[name] = std::move(t);
  }
  x.labels.resize(n);
  for (int i = 0; i < n; ++i) {
    std::string l = "[";
    for (int e = 0; e < b.size; ++e)
      l += b.label(e) + ">" + p.generator.label(out.points[i].map[e]) +
           (e + 1 < b.size ? " " : "");
    x.labels[i] = l + "]";
  }
  return out;
}

DualAlgebra dual_algebra(const VarietyProfile& p, const StructuredSpace& x,
                         const Budgets& budgets) {
  require_duality(p, "dual_algebra");
  AxiomResult ax = check_space_axioms(x);
  if (!ax.ok)
    throw DataError("dual_algebra: space fails axiom " + ax.failed_axiom + " (" + ax.detail + ")");
  if (x.kind != p.space_kind)
    throw SignatureError("dual_algebra: space kind does not match variety");
  DualAlgebra out;
  out.elements = morphisms(x, p.gen_space, budgets);
  const int n = static_cast<int>(out.elements.size());
  const FiniteAlgebra& m = p.generator;
  auto index_of = [&](const std::vector<int>& v) {
    auto it = std::lower_bound(out.elements.begin(), out.elements.end(), v,
                               [](const SpaceMorphism& a, const std::vector<int>& b) {
                                 return a.map < b;
                               });
    if (it == out.elements.end() || it->map != v) return -1;
    return static_cast<int>(it - out.elements.begin());
  };
  FiniteAlgebra& a = out.algebra;
  a.sig = p.sig;
  a.size = n;
  a.meet.resize(static_cast<size_t>(n) * n);
  a.join.resize(static_cast<size_t>(n) * n);
  std::vector<int> tmp(x.size);
  auto closure_fail = [&](const char* op, int i, int j) {
    std::ostringstream os;
    os << "dual_algebra: pointwise " << op << " of elements " << i << "," << j
       << " is not a morphism; the duality is falsified";
    throw InvariantError(os.str());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int e = 0; e < x.size; ++e)
        tmp[e] = m.mt(out.elements[i].map[e], out.elements[j].map[e]);
      int idx = index_of(tmp);
      if (idx < 0) closure_fail("meet", i, j);
      a.meet[static_cast<size_t>(i) * n + j] = idx;
      for (int e = 0; e < x.size; ++e)
        tmp[e] = m.jn(out.elements[i].map[e], out.elements[j].map[e]);
      idx = index_of(tmp);
      if (idx < 0) closure_fail("join", i, j);
      a.join[static_cast<size_t>(i) * n + j] = idx;
    }
  if (!m.neg.empty()) {
    a.neg.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < x.size; ++e) tmp[e] = m.neg[out.elements[i].map[e]];
      int idx = index_of(tmp);
      if (idx < 0) closure_fail("neg", i, i);
      a.neg[i] = idx;
    }
  }
  if (!m.star.empty()) {
    a.star.resize(n);
    for (int i = 0; i < n; ++i) {
      for (int e = 0; e < x.size; ++e) tmp[e] = m.star[out.elements[i].map[e]];
      int idx = index_of(tmp);
      if (idx < 0) closure_fail("star", i, i);
      a.star[i] = idx;
    }
  }
  if (m.bot >= 0) {
    std::vector<int> cb(x.size, m.bot), ct(x.size, m.top);
    a.bot = index_of(cb);
    a.top = index_of(ct);
    if (a.bot < 0 || a.top < 0) closure_fail("constants", -1, -1);
  }
  return out;
}

// ---- free algebras ----------------------------------------------------------

namespace {

FreeAlgebra build_free_bounded(const VarietyProfile& p, int n, const Budgets& budgets) {
  FreeAlgebra f;
  f.sig = p.sig;
  f.n = n;
  f.power = space_power(p.gen_space, n, budgets);
  std::vector<SpaceMorphism> ms = morphisms(f.power, p.gen_space, budgets);
  f.elements.reserve(ms.size());
  for (auto& m : ms) f.elements.push_back(std::move(m.map));
  // projections as generators
  for (int g = 0; g < n; ++g) {
    std::vector<int> proj(f.power.size);
    for (int pt = 0; pt < f.power.size; ++pt)
      proj[pt] = power_coords(pt, p.gen_space.size, n)[g];
    int idx = f.index_of(proj);
    if (idx < 0)
      throw InvariantError("free_algebra: coordinate projection is not a morphism");
    f.generators.push_back(idx);
  }
  return f;
}

// The bound-free free algebra lives inside its bounded companion: same
// generators, with the two fresh bounds (the constant morphisms) removed.
FreeAlgebra build_free_bar(const VarietyProfile& p, int n, const Budgets& budgets) {
  const VarietyProfile& bp = profile(p.bar_target);
  FreeAlgebra bounded = build_free_bounded(bp, n, budgets);
  if (n == 0)
    throw DataError("free_algebra: the 0-generated " + p.name + " algebra is empty");
  std::vector<int> cb(bounded.power.size, bp.generator.bot);
  std::vector<int> ct(bounded.power.size, bp.generator.top);
  FreeAlgebra f;
  f.sig = p.sig;
  f.n = n;
  f.bar_realized = true;
  f.power = bounded.power;
  std::vector<int> old_index;
  for (size_t i = 0; i < bounded.elements.size(); ++i) {
    if (bounded.elements[i] == cb || bounded.elements[i] == ct) continue;
    old_index.push_back(static_cast<int>(i));
    f.elements.push_back(bounded.elements[i]);
  }
  for (int g : bounded.generators) {
    auto it = std::lower_bound(old_index.begin(), old_index.end(), g);
    if (it == old_index.end() || *it != g)
      throw InvariantError("free_algebra: generator collapsed with a bound");
    f.generators.push_back(static_cast<int>(it - old_index.begin()));
  }
  return f;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string free_cache_payload(const FreeAlgebra& f) {
  std::ostringstream os;
  os << sig_name(f.sig) << ";" << f.n << ";" << f.bar_realized << ";";
  for (const auto& e : f.elements) {
    for (int v : e) os << v << ",";
    os << ";";
  }
  os << "g:";
  for (int g : f.generators) os << g << ",";
  return os.str();
}

constexpr int kFreeCacheVersion = 1;

std::string cache_path(const CacheConfig& cache, Sig sig, int n) {
  return cache.dir + "/free-" + sig_name(sig) + "-" + std::to_string(n) + ".cache";
}

std::optional<FreeAlgebra> load_free_cache(const VarietyProfile& p, int n,
                                           const CacheConfig& cache, const Budgets& budgets) {
  std::ifstream in(cache_path(cache, p.sig, n));
  if (!in) return std::nullopt;
  int version = 0, fn = 0, bar = 0, count = 0, veclen = 0, gens = 0;
  std::string sig;
  std::uint64_t checksum = 0;
  in >> version >> sig >> fn >> bar >> count >> veclen >> gens >> checksum;
  if (!in || version != kFreeCacheVersion || sig != p.name || fn != n) return std::nullopt;
  FreeAlgebra f;
  f.sig = p.sig;
  f.n = n;
  f.bar_realized = bar != 0;
  f.elements.assign(count, std::vector<int>(veclen));
  for (auto& e : f.elements)
    for (int& v : e) in >> v;
  f.generators.resize(gens);
  for (int& g : f.generators) in >> g;
  if (!in) return std::nullopt;
  if (fnv1a(free_cache_payload(f)) != checksum) return std::nullopt;  // stale: recompute
  const VarietyProfile& sp = p.has_duality ? p : profile(p.bar_target);
  f.power = space_power(sp.gen_space, n, budgets);
  return f;
}

void store_free_cache(const FreeAlgebra& f, const VarietyProfile& p, const CacheConfig& cache) {
  std::error_code ec;
  std::filesystem::create_directories(cache.dir, ec);
  std::ofstream out(cache_path(cache, p.sig, f.n));
  if (!out) return;  // cache is best-effort
  int veclen = f.elements.empty() ? 0 : static_cast<int>(f.elements[0].size());
  out << kFreeCacheVersion << " " << p.name << " " << f.n << " " << (f.bar_realized ? 1 : 0)
      << " " << f.elements.size() << " " << veclen << " " << f.generators.size() << " "
      << fnv1a(free_cache_payload(f)) << "\n";
  for (const auto& e : f.elements) {
    for (size_t i = 0; i < e.size(); ++i) out << e[i] << (i + 1 < e.size() ? " " : "");
    out << "\n";
  }
  for (size_t i = 0; i < f.generators.size(); ++i)
    out << f.generators[i] << (i + 1 < f.generators.size() ? " " : "");
  out << "\n";
}

}  // namespace

int FreeAlgebra::index_of(const std::vector<int>& vec) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), vec);
  if (it == elements.end() || *it != vec) return -1;
  return static_cast<int>(it - elements.begin());
}

int FreeAlgebra::apply1(Op op, int e, const FiniteAlgebra& m) const {
  std::vector<int> v(elements[e].size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = m.apply1(op, elements[e][i]);
  int idx = index_of(v);
  if (idx < 0) throw InvariantError("free algebra not closed under pointwise op");
  return idx;
}

int FreeAlgebra::apply2(Op op, int e1, int e2, const FiniteAlgebra& m) const {
  std::vector<int> v(elements[e1].size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = m.apply2(op, elements[e1][i], elements[e2][i]);
  int idx = index_of(v);
  if (idx < 0) throw InvariantError("free algebra not closed under pointwise op");
  return idx;
}

FiniteAlgebra FreeAlgebra::materialize(const Budgets& budgets) const {
  const long long n = size();
  if (n * n > budgets.max_table_entries)
    throw BudgetError("free algebra too large to materialize tables",
                      static_cast<std::uint64_t>(n * n),
                      static_cast<std::uint64_t>(budgets.max_table_entries));
  const FiniteAlgebra& m = profile(sig_bar_target(sig)).generator;
  FiniteAlgebra a;
  a.sig = sig;
  a.size = static_cast<int>(n);
  a.name = std::string("F_") + sig_name(sig) + "(" + std::to_string(this->n) + ")";
  a.meet.resize(n * n);
  a.join.resize(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.meet[i * n + j] = apply2(Op::meet, i, j, m);
      a.join[i * n + j] = apply2(Op::join, i, j, m);
    }
  if (sig_has(sig, Op::neg)) {
    a.neg.resize(n);
    for (int i = 0; i < n; ++i) a.neg[i] = apply1(Op::neg, i, m);
  }
  if (sig_has(sig, Op::star)) {
    a.star.resize(n);
    for (int i = 0; i < n; ++i) a.star[i] = apply1(Op::star, i, m);
  }
  if (sig_has(sig, Op::bot)) {
    std::vector<int> cb(elements[0].size(), m.bot), ct(elements[0].size(), m.top);
    a.bot = index_of(cb);
    a.top = index_of(ct);
    if (a.bot < 0 || a.top < 0)
      throw InvariantError("free algebra misses a constant morphism");
  }
  return a;
}

FreeAlgebra free_algebra(const VarietyProfile& p, int n, const Budgets& budgets,
                         const CacheConfig& cache) {
  if (n < 0) throw DataError("free_algebra: negative generator count");
  if (cache.enabled) {
    if (auto f = load_free_cache(p, n, cache, budgets)) return *f;
  }
  FreeAlgebra f = p.has_duality ? build_free_bounded(p, n, budgets)
                                : build_free_bar(p, n, budgets);
  if (cache.enabled) store_free_cache(f, p, cache);
  return f;
}

long long free_size_capped(const VarietyProfile& p, int n, long long cap,
                           const Budgets& budgets) {
  const VarietyProfile& sp = p.has_duality ? p : profile(p.bar_target);
  StructuredSpace power = space_power(sp.gen_space, n, budgets);
  long long adjust = p.has_duality ? 0 : 2;  // the two bounds drop out
  long long c = count_morphisms_capped(power, sp.gen_space, cap + adjust, budgets);
  if (c > cap + adjust) return cap + 1;
  return c - adjust;
}

// ---- evaluation map ---------------------------------------------------------

EvaluationMap evaluation_map(const VarietyProfile& p, const FiniteAlgebra& b,
                             const Budgets& budgets) {
  DualSpace ds = dual_space(p, b, budgets);
  DualAlgebra da = dual_algebra(p, ds.space, budgets);
  EvaluationMap out;
  out.map.assign(b.size, -1);
  const int npts = ds.space.size;
  for (int e = 0; e < b.size; ++e) {
    std::vector<int> v(npts);
    for (int h = 0; h < npts; ++h) v[h] = ds.points[h].map[e];
    for (size_t i = 0; i < da.elements.size(); ++i)
      if (da.elements[i].map == v) {
        out.map[e] = static_cast<int>(i);
        break;
      }
    if (out.map[e] < 0) {
      out.failure = "e(" + b.label(e) + ") is not a morphism of the dual space";
      return out;
    }
  }
  if (!is_homomorphism(b, da.algebra, out.map)) {
    out.failure = "evaluation map is not a homomorphism";
    return out;
  }
  std::vector<char> hit(da.algebra.size, 0);
  for (int e = 0; e < b.size; ++e) {
    if (hit[out.map[e]]) {
      out.failure = "evaluation map is not injective";
      return out;
    }
    hit[out.map[e]] = 1;
  }
  if (b.size != da.algebra.size) {
    out.failure = "evaluation map is not surjective (" + std::to_string(b.size) + " vs " +
                  std::to_string(da.algebra.size) + " elements)";
    return out;
  }
  out.is_isomorphism = true;
  return out;
}

// ---- embeddings into free algebras ------------------------------------------

int default_n_cap(const VarietyProfile& p, const FiniteAlgebra& b, const Budgets& budgets) {
  const VarietyProfile& bp = p.has_duality ? p : profile(p.bar_target);
  FiniteAlgebra target = p.has_duality ? b : add_bounds(b);
  DualSpace ds = dual_space(bp, target, budgets);
  return ds.space.size + 2;
}

std::optional<FreeEmbedding> embeds_into_free(const VarietyProfile& p, const FiniteAlgebra& b,
                                              int n_cap, const Budgets& budgets) {
  require_duality(p, "embeds_into_free");
  DualSpace ds = dual_space(p, b, budgets);
  for (int n = 0; n <= n_cap; ++n) {
    StructuredSpace power = space_power(p.gen_space, n, budgets);
    std::optional<SpaceMorphism> eta = surjective_morphism_exists(power, ds.space, budgets);
    if (!eta) continue;
    FreeEmbedding emb;
    emb.n = n;
    emb.surjection = *eta;
    // A(eta) o e_B: element b goes to the map q |-> eta(q)(b)
    emb.embedding.resize(b.size);
    for (int e = 0; e < b.size; ++e) {
      std::vector<int> v(power.size);
      for (int q = 0; q < power.size; ++q) v[q] = ds.points[eta->map[q]].map[e];
      emb.embedding[e] = std::move(v);
    }
    // verify injectivity and the homomorphism laws pointwise
    for (int e1 = 0; e1 < b.size; ++e1)
      for (int e2 = 0; e2 < b.size; ++e2) {
        if (e1 != e2 && emb.embedding[e1] == emb.embedding[e2])
          throw InvariantError("embeds_into_free: embedding not injective");
        for (int q = 0; q < power.size; ++q) {
          if (emb.embedding[b.mt(e1, e2)][q] !=
              p.generator.mt(emb.embedding[e1][q], emb.embedding[e2][q]))
            throw InvariantError("embeds_into_free: embedding breaks meet");
          if (emb.embedding[b.jn(e1, e2)][q] !=
              p.generator.jn(emb.embedding[e1][q], emb.embedding[e2][q]))
            throw InvariantError("embeds_into_free: embedding breaks join");
        }
      }
    if (!b.neg.empty())
      for (int e = 0; e < b.size; ++e)
        for (int q = 0; q < power.size; ++q)
          if (emb.embedding[b.neg[e]][q] != p.generator.neg[emb.embedding[e][q]])
            throw InvariantError("embeds_into_free: embedding breaks negation");
    if (!b.star.empty())
      for (int e = 0; e < b.size; ++e)
        for (int q = 0; q < power.size; ++q)
          if (emb.embedding[b.star[e]][q] != p.generator.star[emb.embedding[e][q]])
            throw InvariantError("embeds_into_free: embedding breaks star");
    if (b.bot >= 0)
      for (int q = 0; q < power.size; ++q)
        if (emb.embedding[b.bot][q] != p.generator.bot ||
            emb.embedding[b.top][q] != p.generator.top)
          throw InvariantError("embeds_into_free: embedding breaks a bound");
    return emb;
  }
  return std::nullopt;
}

std::optional<FreePowerEmbedding> embeds_into_free_power(const VarietyProfile& p,
                                                         const FiniteAlgebra& b, int n_cap,
                                                         int parts_cap, const Budgets& budgets) {
  require_duality(p, "embeds_into_free_power");
  DualSpace ds = dual_space(p, b, budgets);
  if (ds.space.size == 0) return FreePowerEmbedding{};  // empty product witness
  // Cover every dual point by the image of some morphism from a power; a
  // tuple of such maps is one morphism from their coproduct, and it is onto.
  FreePowerEmbedding out;
  std::vector<char> covered(ds.space.size, 0);
  for (int z = 0; z < ds.space.size; ++z) {
    if (covered[z]) continue;
    bool found = false;
    for (int n = 0; n <= n_cap && !found; ++n) {
      StructuredSpace power = space_power(p.gen_space, n, budgets);
      std::optional<SpaceMorphism> h =
          covering_morphism_exists(power, ds.space, {z}, budgets);
      if (h) {
        for (int q = 0; q < power.size; ++q) covered[h->map[q]] = 1;
        out.part_powers.push_back(n);
        out.part_maps.push_back(*h);
        found = true;
      }
    }
    if (!found) return std::nullopt;
    if (static_cast<int>(out.part_powers.size()) > parts_cap) return std::nullopt;
  }
  return out;
}

// ---- identity validity ------------------------------------------------------

bool identity_valid(const VarietyProfile& p, const Identity& id, const Budgets& budgets) {
  std::vector<std::string> vars;
  collect_vars(id.lhs, vars);
  collect_vars(id.rhs, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const FiniteAlgebra& m = p.generator;
  const int k = static_cast<int>(vars.size());
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= m.size;
    if (count > budgets.max_assignments)
      throw BudgetError("identity_valid: free-algebra point space exceeds budget",
                        static_cast<std::uint64_t>(count),
                        static_cast<std::uint64_t>(budgets.max_assignments));
  }
  // Both sides evaluated at the free generators: the generators are the
  // coordinate projections of M~^k, so the value of a term at the
  // projections is its table on M^k, one point at a time.
  std::vector<std::pair<std::string, int>> assignment;
  for (const auto& v : vars) assignment.emplace_back(v, 0);
  for (long long code = 0; code < count; ++code) {
    long long cc = code;
    for (int i = k - 1; i >= 0; --i) {
      assignment[i].second = static_cast<int>(cc % m.size);
      cc /= m.size;
    }
    if (eval_term(m, id.lhs, assignment) != eval_term(m, id.rhs, assignment)) return false;
  }
  return true;
}

}  // namespace uaw
