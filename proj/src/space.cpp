#include "uaw/space.hpp"

#include <algorithm>
#include <sstream>

namespace uaw {

const char* space_kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::priestley: return "priestley";
    case SpaceKind::stone: return "stone";
    case SpaceKind::demorgan: return "demorgan";
    case SpaceKind::kleene: return "kleene";
  }
  return "?";
}

std::optional<SpaceKind> space_kind_by_name(const std::string& name) {
  for (SpaceKind k : {SpaceKind::priestley, SpaceKind::stone, SpaceKind::demorgan,
                      SpaceKind::kleene})
    if (name == space_kind_name(k)) return k;
  return std::nullopt;
}

bool StructuredSpace::rel(const std::string& name, int x, int y) const {
  auto it = rels.find(name);
  return it != rels.end() && it->second[x * size + y] != 0;
}

bool StructuredSpace::in_subset(const std::string& name, int x) const {
  auto it = subsets.find(name);
  return it != subsets.end() && it->second[x] != 0;
}

std::string StructuredSpace::label(int x) const {
  if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty())
    return labels[x];
  return std::to_string(x);
}

std::vector<int> StructuredSpace::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size; ++x) {
    bool min = true;
    for (int y = 0; y < size && min; ++y)
      if (y != x && leq(y, x)) min = false;
    if (min) out.push_back(x);
  }
  return out;
}

std::vector<int> StructuredSpace::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size; ++x) {
    bool max = true;
    for (int y = 0; y < size && max; ++y)
      if (y != x && leq(x, y)) max = false;
    if (max) out.push_back(x);
  }
  return out;
}

std::optional<int> StructuredSpace::bottom() const {
  for (int x = 0; x < size; ++x) {
    bool below_all = true;
    for (int y = 0; y < size && below_all; ++y)
      if (!leq(x, y)) below_all = false;
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<int> StructuredSpace::top_point() const {
  for (int x = 0; x < size; ++x) {
    bool above_all = true;
    for (int y = 0; y < size && above_all; ++y)
      if (!leq(y, x)) above_all = false;
    if (above_all) return x;
  }
  return std::nullopt;
}

bool StructuredSpace::operator==(const StructuredSpace& o) const {
  return kind == o.kind && size == o.size && order == o.order && unary == o.unary &&
         rels == o.rels && subsets == o.subsets;
}

bool is_space_morphism(const StructuredSpace& x, const StructuredSpace& z,
                       const std::vector<int>& map) {
  if (x.kind != z.kind || static_cast<int>(map.size()) != x.size) return false;
  for (int v : map)
    if (v < 0 || v >= z.size) return false;
  for (int p = 0; p < x.size; ++p)
    for (int q = 0; q < x.size; ++q)
      if (x.leq(p, q) && !z.leq(map[p], map[q])) return false;
  for (const auto& [name, table] : x.unary) {
    auto it = z.unary.find(name);
    if (it == z.unary.end()) return false;
    for (int p = 0; p < x.size; ++p)
      if (map[table[p]] != it->second[map[p]]) return false;
  }
  for (const auto& [name, table] : x.rels) {
    if (!z.rels.count(name)) return false;
    for (int p = 0; p < x.size; ++p)
      for (int q = 0; q < x.size; ++q)
        if (table[p * x.size + q] && !z.rel(name, map[p], map[q])) return false;
  }
  for (const auto& [name, members] : x.subsets) {
    if (!z.subsets.count(name)) return false;
    for (int p = 0; p < x.size; ++p)
      if (members[p] && !z.in_subset(name, p >= 0 ? map[p] : -1)) return false;
  }
  return true;
}

StructuredSpace space_power(const StructuredSpace& s, int n, const Budgets& budgets) {
  if (n < 0) throw DataError("space_power: negative exponent");
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    size *= s.size;
    if (size > budgets.max_carrier)
      throw BudgetError("space_power: carrier exceeds budget",
                        static_cast<std::uint64_t>(size),
                        static_cast<std::uint64_t>(budgets.max_carrier));
  }
  const int m = static_cast<int>(size);
  StructuredSpace p;
  p.kind = s.kind;
  p.size = m;
  auto coords = [&](int idx) {
    std::vector<int> c(n);
    for (int i = n - 1; i >= 0; --i) {
      c[i] = idx % s.size;
      idx /= s.size;
    }
    return c;
  };
  std::vector<std::vector<int>> cs(m);
  for (int i = 0; i < m; ++i) cs[i] = coords(i);
  p.order.assign(static_cast<size_t>(m) * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool le = true;
      for (int i = 0; i < n && le; ++i)
        if (!s.leq(cs[a][i], cs[b][i])) le = false;
      p.order[a * m + b] = le;
    }
  for (const auto& [name, table] : s.unary) {
    std::vector<int> t(m);
    for (int a = 0; a < m; ++a) {
      int idx = 0;
      for (int i = 0; i < n; ++i) idx = idx * s.size + table[cs[a][i]];
      t[a] = idx;
    }
    p.unary[name] = std::move(t);
  }
  for (const auto& [name, table] : s.rels) {
    std::vector<char> t(static_cast<size_t>(m) * m, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        bool rel = true;
        for (int i = 0; i < n && rel; ++i)
          if (!table[cs[a][i] * s.size + cs[b][i]]) rel = false;
        t[a * m + b] = rel;
      }
    p.rels[name] = std::move(t);
  }
  for (const auto& [name, members] : s.subsets) {
    std::vector<char> t(m, 0);
    for (int a = 0; a < m; ++a) {
      bool in = true;
      for (int i = 0; i < n && in; ++i)
        if (!members[cs[a][i]]) in = false;
      t[a] = in;
    }
    p.subsets[name] = std::move(t);
  }
  if (!s.labels.empty() && m <= 4096) {
    p.labels.resize(m);
    for (int a = 0; a < m; ++a) {
      std::string l = "(";
      for (int i = 0; i < n; ++i) l += s.label(cs[a][i]) + (i + 1 < n ? "," : "");
      p.labels[a] = l + ")";
    }
  }
  return p;
}

Coproduct space_coproduct(const std::vector<const StructuredSpace*>& parts) {
  Coproduct out;
  StructuredSpace& c = out.space;
  if (parts.empty()) {
    c.size = 0;
    return out;
  }
  c.kind = parts[0]->kind;
  int total = 0;
  for (const StructuredSpace* p : parts) {
    if (p->kind != c.kind) throw SignatureError("space_coproduct: kind mismatch");
    total += p->size;
  }
  c.size = total;
  c.order.assign(static_cast<size_t>(total) * total, 0);
  for (const StructuredSpace* p : parts) {
    for (const auto& [name, _] : p->unary) c.unary[name].assign(total, 0);
    for (const auto& [name, _] : p->rels)
      c.rels[name].assign(static_cast<size_t>(total) * total, 0);
    for (const auto& [name, _] : p->subsets) c.subsets[name].assign(total, 0);
  }
  c.labels.assign(total, "");
  int off = 0;
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const StructuredSpace& p = *parts[pi];
    SpaceMorphism inj;
    inj.map.resize(p.size);
    for (int a = 0; a < p.size; ++a) {
      inj.map[a] = off + a;
      c.labels[off + a] = std::to_string(pi) + ":" + p.label(a);
      for (int b = 0; b < p.size; ++b)
        c.order[(off + a) * total + (off + b)] = p.order[a * p.size + b];
    }
    for (const auto& [name, table] : p.unary)
      for (int a = 0; a < p.size; ++a) c.unary[name][off + a] = off + table[a];
    for (const auto& [name, table] : p.rels)
      for (int a = 0; a < p.size; ++a)
        for (int b = 0; b < p.size; ++b)
          c.rels[name][(off + a) * total + (off + b)] = table[a * p.size + b];
    for (const auto& [name, members] : p.subsets)
      for (int a = 0; a < p.size; ++a) c.subsets[name][off + a] = members[a];
    out.injections.push_back(std::move(inj));
    off += p.size;
  }
  return out;
}

// ---- morphism search --------------------------------------------------------

namespace {

// Backtracking over point images with forward checking: every unassigned
// point keeps a bitmask of still-possible images, narrowed on each
// assignment through precomputed target masks.  Unary operations propagate
// forced assignments immediately; branching picks the unassigned point with
// the fewest candidates (ties by index, so runs are deterministic).
struct MorphismSearch {
  const StructuredSpace& X;
  const StructuredSpace& Z;
  const Budgets& budgets;
  bool require_cover = false;
  std::uint64_t need_mask = 0;  // target points that must be covered

  std::uint64_t full_mask = 0;
  std::vector<std::uint64_t> cand;         // current candidate masks
  std::vector<std::uint64_t> up_mask, down_mask;  // per target value
  struct RelMasks {
    const std::vector<char>* xt;
    std::vector<std::uint64_t> fwd, bwd;  // {w : (v,w) in r}, {w : (w,v) in r}
  };
  std::vector<RelMasks> rel_masks;
  struct UnaryPair {
    const std::vector<int>* xt;
    const std::vector<int>* zt;
  };
  std::vector<UnaryPair> unary_pairs;
  std::vector<char> x_leq;  // copy of X.order for fast access
  std::vector<int> assigned;
  std::uint64_t covered = 0;
  int num_assigned = 0;
  bool no_solutions = false;
  long long nodes = 0;

  bool enumerate_all = false;
  bool count_only = false;
  long long solution_cap = -1;
  long long solution_count = 0;
  std::vector<std::vector<int>> solutions;
  std::optional<std::vector<int>> first;

  MorphismSearch(const StructuredSpace& x, const StructuredSpace& z, const Budgets& b)
      : X(x), Z(z), budgets(b) {
    if (x.kind != z.kind) throw SignatureError("morphisms: space kind mismatch");
    if (z.size > 64)
      throw BudgetError("morphisms: target too large for mask search", z.size, 64);
    for (const auto& [name, _] : x.unary)
      if (!z.unary.count(name))
        throw SignatureError("morphisms: target lacks unary op " + name);
    for (const auto& [name, _] : x.rels)
      if (!z.rels.count(name))
        throw SignatureError("morphisms: target lacks relation " + name);
    for (const auto& [name, _] : x.subsets)
      if (!z.subsets.count(name))
        throw SignatureError("morphisms: target lacks subset " + name);

    full_mask = z.size == 64 ? ~0ULL : ((1ULL << z.size) - 1);
    cand.assign(X.size, full_mask);
    for (const auto& [name, members] : X.subsets) {
      std::uint64_t allowed = 0;
      for (int v = 0; v < Z.size; ++v)
        if (Z.in_subset(name, v)) allowed |= 1ULL << v;
      for (int p = 0; p < X.size; ++p)
        if (members[p]) cand[p] &= allowed;
    }
    for (const auto& [name, table] : X.unary) {
      const auto& zt = Z.unary.at(name);
      unary_pairs.push_back({&table, &zt});
      // a point fixed by a unary op can only land on a fixpoint of that op
      std::uint64_t fixed = 0;
      for (int v = 0; v < Z.size; ++v)
        if (zt[v] == v) fixed |= 1ULL << v;
      for (int p = 0; p < X.size; ++p)
        if (table[p] == p) cand[p] &= fixed;
    }
    for (const auto& [name, table] : X.rels) {
      const auto& zt = Z.rels.at(name);
      RelMasks rm;
      rm.xt = &table;
      rm.fwd.assign(Z.size, 0);
      rm.bwd.assign(Z.size, 0);
      std::uint64_t refl = 0;
      for (int v = 0; v < Z.size; ++v)
        for (int w = 0; w < Z.size; ++w) {
          if (zt[v * Z.size + w]) rm.fwd[v] |= 1ULL << w;
          if (zt[w * Z.size + v]) rm.bwd[v] |= 1ULL << w;
        }
      for (int v = 0; v < Z.size; ++v)
        if (zt[v * Z.size + v]) refl |= 1ULL << v;
      for (int p = 0; p < X.size; ++p)
        if (table[p * X.size + p]) cand[p] &= refl;
      rel_masks.push_back(std::move(rm));
    }
    up_mask.assign(Z.size, 0);
    down_mask.assign(Z.size, 0);
    for (int v = 0; v < Z.size; ++v)
      for (int w = 0; w < Z.size; ++w) {
        if (Z.leq(v, w)) up_mask[v] |= 1ULL << w;
        if (Z.leq(w, v)) down_mask[v] |= 1ULL << w;
      }
    x_leq = X.order;
    assigned.assign(X.size, -1);
    for (int p = 0; p < X.size; ++p)
      if (cand[p] == 0) no_solutions = true;
  }

  // Narrows every unassigned point against p -> v.  Returns false on a
  // wipeout.  Changed masks are recorded for the undo log.
  bool narrow(int p, int v, std::vector<std::pair<int, std::uint64_t>>& mask_trail) {
    for (int q = 0; q < X.size; ++q) {
      if (assigned[q] >= 0 || q == p) continue;
      std::uint64_t allow = full_mask;
      if (x_leq[p * X.size + q]) allow &= up_mask[v];
      if (x_leq[q * X.size + p]) allow &= down_mask[v];
      for (const auto& rm : rel_masks) {
        if ((*rm.xt)[p * X.size + q]) allow &= rm.fwd[v];
        if ((*rm.xt)[q * X.size + p]) allow &= rm.bwd[v];
      }
      std::uint64_t next = cand[q] & allow;
      if (next != cand[q]) {
        mask_trail.emplace_back(q, cand[q]);
        cand[q] = next;
        if (next == 0) return false;
      }
    }
    return true;
  }

  struct Trail {
    std::vector<int> points;
    std::vector<std::pair<int, std::uint64_t>> masks;
  };

  bool assign(int p, int v, Trail& trail) {
    std::vector<std::pair<int, int>> work{{p, v}};
    while (!work.empty()) {
      auto [q, w] = work.back();
      work.pop_back();
      if (assigned[q] >= 0) {
        if (assigned[q] != w) return false;
        continue;
      }
      if (!(cand[q] >> w & 1)) return false;
      assigned[q] = w;
      ++num_assigned;
      covered |= 1ULL << w;
      trail.points.push_back(q);
      if (!narrow(q, w, trail.masks)) return false;
      for (const auto& up : unary_pairs) work.push_back({(*up.xt)[q], (*up.zt)[w]});
    }
    return true;
  }

  void undo(const Trail& trail, std::uint64_t covered_before) {
    for (auto it = trail.masks.rbegin(); it != trail.masks.rend(); ++it)
      cand[it->first] = it->second;
    for (int q : trail.points) {
      assigned[q] = -1;
      --num_assigned;
    }
    covered = covered_before;
  }

  bool cover_feasible() const {
    if (!require_cover) return true;
    std::uint64_t reachable = covered;
    for (int p = 0; p < X.size; ++p)
      if (assigned[p] < 0) reachable |= cand[p];
    return (need_mask & ~reachable) == 0;
  }

  // returns false to stop the whole search
  bool emit() {
    if (enumerate_all) {
      ++solution_count;
      if (!count_only) solutions.push_back(assigned);
      if (solution_cap >= 0 && solution_count > solution_cap) return false;
      return true;
    }
    first = assigned;
    return false;
  }

  int pick_point() const {
    int best = -1, best_count = 65;
    for (int p = 0; p < X.size; ++p) {
      if (assigned[p] >= 0) continue;
      int c = __builtin_popcountll(cand[p]);
      if (c < best_count) {
        best_count = c;
        best = p;
        if (c <= 1) break;
      }
    }
    return best;
  }

  bool run() {
    if (no_solutions) return true;
    if (++nodes > budgets.search_nodes)
      throw BudgetError("morphism search node budget exceeded",
                        static_cast<std::uint64_t>(nodes),
                        static_cast<std::uint64_t>(budgets.search_nodes));
    if (!cover_feasible()) return true;
    if (num_assigned == X.size) {
      if (require_cover && (need_mask & ~covered) != 0) return true;
      return emit();
    }
    int p = pick_point();
    std::uint64_t options = cand[p];
    while (options) {
      int v = __builtin_ctzll(options);
      options &= options - 1;
      Trail trail;
      std::uint64_t covered_before = covered;
      bool ok = assign(p, v, trail);
      if (ok) {
        if (!run()) {
          undo(trail, covered_before);
          return false;
        }
      }
      undo(trail, covered_before);
    }
    return true;
  }
};

}  // namespace

std::vector<SpaceMorphism> morphisms(const StructuredSpace& x, const StructuredSpace& z,
                                     const Budgets& budgets) {
  MorphismSearch s(x, z, budgets);
  s.enumerate_all = true;
  s.solution_cap = budgets.max_free_elements;
  if (!s.run() && s.solution_cap >= 0 && s.solution_count > s.solution_cap)
    throw BudgetError("morphisms: more results than the element budget",
                      static_cast<std::uint64_t>(s.solution_count),
                      static_cast<std::uint64_t>(s.solution_cap), true);
  std::sort(s.solutions.begin(), s.solutions.end());
  std::vector<SpaceMorphism> out;
  out.reserve(s.solutions.size());
  for (auto& m : s.solutions) out.push_back(SpaceMorphism{std::move(m)});
  return out;
}

long long count_morphisms_capped(const StructuredSpace& x, const StructuredSpace& z,
                                 long long cap, const Budgets& budgets) {
  MorphismSearch s(x, z, budgets);
  s.enumerate_all = true;
  s.count_only = true;
  s.solution_cap = cap;
  s.run();
  return s.solution_count;
}

std::optional<SpaceMorphism> covering_morphism_exists(const StructuredSpace& x,
                                                      const StructuredSpace& z,
                                                      const std::vector<int>& must_cover,
                                                      const Budgets& budgets) {
  if (z.size == 0) {
    // no map into the empty space unless the source is empty too
    if (x.size == 0) return SpaceMorphism{};
    return std::nullopt;
  }
  MorphismSearch s(x, z, budgets);
  s.require_cover = true;
  for (int v : must_cover) s.need_mask |= 1ULL << v;
  s.run();
  if (s.first) return SpaceMorphism{*s.first};
  return std::nullopt;
}

std::optional<SpaceMorphism> surjective_morphism_exists(const StructuredSpace& x,
                                                        const StructuredSpace& z,
                                                        const Budgets& budgets) {
  std::vector<int> all(z.size);
  for (int v = 0; v < z.size; ++v) all[v] = v;
  return covering_morphism_exists(x, z, all, budgets);
}

// ---- axioms -----------------------------------------------------------------

namespace {

AxiomResult axiom_fail(const std::string& id, const std::string& detail) {
  AxiomResult r;
  r.ok = false;
  r.failed_axiom = id;
  r.detail = detail;
  return r;
}

}  // namespace

AxiomResult check_space_axioms(const StructuredSpace& x) {
  const int n = x.size;
  if (static_cast<int>(x.order.size()) != n * n)
    return axiom_fail("order-shape", "order table has wrong size");
  for (int a = 0; a < n; ++a)
    if (!x.leq(a, a)) return axiom_fail("order-reflexive", "at " + x.label(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && x.leq(a, b) && x.leq(b, a))
        return axiom_fail("order-antisymmetric", "at " + x.label(a) + "," + x.label(b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!x.leq(a, b)) continue;
      for (int c = 0; c < n; ++c)
        if (x.leq(b, c) && !x.leq(a, c))
          return axiom_fail("order-transitive",
                            "at " + x.label(a) + "," + x.label(b) + "," + x.label(c));
    }
  switch (x.kind) {
    case SpaceKind::priestley: break;
    case SpaceKind::stone: {
      auto it = x.unary.find("d");
      if (it == x.unary.end() || static_cast<int>(it->second.size()) != n)
        return axiom_fail("stone-d-present", "unary op d missing or wrong size");
      const auto& d = it->second;
      for (int a = 0; a < n; ++a) {
        if (!x.leq(d[a], a)) return axiom_fail("stone-d-below", "at " + x.label(a));
        for (int b = 0; b < n; ++b) {
          if (b != d[a] && x.leq(b, d[a]))
            return axiom_fail("stone-d-minimal", "at " + x.label(a));
          bool b_min = true;
          for (int c = 0; c < n; ++c)
            if (c != b && x.leq(c, b)) b_min = false;
          if (b_min && x.leq(b, a) && b != d[a])
            return axiom_fail("stone-d-unique-minimal",
                              "two minimal elements below " + x.label(a));
        }
      }
      break;
    }
    case SpaceKind::demorgan: {
      auto it = x.unary.find("f");
      if (it == x.unary.end() || static_cast<int>(it->second.size()) != n)
        return axiom_fail("demorgan-f-present", "unary op f missing or wrong size");
      const auto& f = it->second;
      for (int a = 0; a < n; ++a)
        if (f[f[a]] != a) return axiom_fail("demorgan-f-involution", "at " + x.label(a));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (x.leq(a, b) && !x.leq(f[b], f[a]))
            return axiom_fail("demorgan-f-order-reversing",
                              "at " + x.label(a) + "," + x.label(b));
      break;
    }
    case SpaceKind::kleene: {
      if (!x.rels.count("sim"))
        return axiom_fail("kleene-sim-present", "relation sim missing");
      if (!x.subsets.count("Y"))
        return axiom_fail("kleene-y-present", "subset Y missing");
      for (int a = 0; a < n; ++a)
        if (!x.rel("sim", a, a)) return axiom_fail("kleene-sim-reflexive", "at " + x.label(a));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (x.rel("sim", a, b) && x.in_subset("Y", a) && !x.leq(a, b))
            return axiom_fail("kleene-sim-y-below",
                              "at " + x.label(a) + "~" + x.label(b));
          if (!x.rel("sim", a, b)) continue;
          for (int c = 0; c < n; ++c)
            if (x.leq(b, c) && !x.rel("sim", c, a))
              return axiom_fail("kleene-sim-up", "at " + x.label(a) + "," + x.label(b) +
                                                     "," + x.label(c));
        }
      break;
    }
  }
  return {};
}

// ---- dot --------------------------------------------------------------------

std::string emit_dot(const StructuredSpace& x, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  os << "  rankdir=BT;\n  node [shape=circle];\n";
  for (int a = 0; a < x.size; ++a) {
    bool marked = false;
    for (const auto& [name, members] : x.subsets)
      if (members[a]) marked = true;
    os << "  n" << a << " [label=\"" << x.label(a) << "\"";
    if (marked) os << " peripheries=2";
    os << "];\n";
  }
  // Hasse edges: covers of the order
  for (int a = 0; a < x.size; ++a)
    for (int b = 0; b < x.size; ++b) {
      if (a == b || !x.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < x.size && cover; ++c)
        if (c != a && c != b && x.leq(a, c) && x.leq(c, b)) cover = false;
      if (cover) os << "  n" << a << " -> n" << b << ";\n";
    }
  for (const auto& [name, table] : x.unary)
    for (int a = 0; a < x.size; ++a)
      os << "  n" << a << " -> n" << table[a] << " [color=gray, label=\"" << name
         << "\", constraint=false];\n";
  for (const auto& [name, table] : x.rels)
    for (int a = 0; a < x.size; ++a)
      for (int b = a + 1; b < x.size; ++b)
        if (table[a * x.size + b])
          os << "  n" << a << " -> n" << b << " [color=gray, style=dashed, dir=none, label=\""
             << name << "\", constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace uaw
