#ifndef UAW_DUALITY_HPP
#define UAW_DUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "uaw/clause.hpp"
#include "uaw/variety.hpp"

namespace uaw {

/// The dual space of an algebra: points are the homomorphisms B -> M in
/// canonical order, structure induced pointwise from M~.
struct DualSpace {
  StructuredSpace space;
  std::vector<Homomorphism> points;  // points[i] is the i-th element
};

/// Requires a profile with a duality and a variety member; h1 <= h2 iff
/// h1(b) <= h2(b) for all b, and likewise for ops, relations and subsets.
DualSpace dual_space(const VarietyProfile& p, const FiniteAlgebra& b,
                     const Budgets& budgets = {});

/// The dual algebra of a space: elements are the morphisms X -> M~ in
/// canonical order, operations pointwise in M.  A pointwise operation that
/// leaves the morphism set would falsify the duality; that raises
/// InvariantError.
struct DualAlgebra {
  FiniteAlgebra algebra;
  std::vector<SpaceMorphism> elements;
};

DualAlgebra dual_algebra(const VarietyProfile& p, const StructuredSpace& x,
                         const Budgets& budgets = {});

/// Free n-generated algebra realized on the dual side: elements index the
/// morphisms M~^n -> M~ and the generators are the coordinate projections.
/// For dl/dml/kl this is the bar target's free algebra with the two fresh
/// bounds removed (their companions are free on the same generators).
struct FreeAlgebra {
  Sig sig;
  int n = 0;
  bool bar_realized = false;              // built inside the bounded companion
  StructuredSpace power;                  // M~^n of the duality actually used
  std::vector<std::vector<int>> elements; // sorted morphism value-vectors
  std::vector<int> generators;            // element indices of projections

  int size() const { return static_cast<int>(elements.size()); }
  int apply1(Op op, int e, const FiniteAlgebra& m) const;
  int apply2(Op op, int e1, int e2, const FiniteAlgebra& m) const;
  int index_of(const std::vector<int>& vec) const;  // -1 if absent

  /// Materializes operation tables (budgeted; |F|^2 entries).
  FiniteAlgebra materialize(const Budgets& budgets = {}) const;
};

struct CacheConfig {
  bool enabled = false;
  std::string dir;
};

FreeAlgebra free_algebra(const VarietyProfile& p, int n,
                         const Budgets& budgets = {},
                         const CacheConfig& cache = {});

/// Counts |F(n)| without materializing anything, giving up once the count
/// exceeds `cap` (returns cap+1 in that case).
long long free_size_capped(const VarietyProfile& p, int n, long long cap,
                           const Budgets& budgets = {});

/// e_B(b)(h) = h(b) together with the bijective-homomorphism verdict.  For
/// these strong dualities the verdict must be true for every member; a
/// false verdict is a reportable engine falsifier, not an exception.
struct EvaluationMap {
  std::vector<int> map;  // b -> index in dual_algebra(dual_space(b))
  bool is_isomorphism = false;
  std::string failure;   // empty when is_isomorphism
};

EvaluationMap evaluation_map(const VarietyProfile& p, const FiniteAlgebra& b,
                             const Budgets& budgets = {});

/// Searches n = 0..n_cap for a surjection M~^n ->> X(B); a hit yields the
/// embedding A(eta) o e_B, re-verified injective and operation-preserving.
struct FreeEmbedding {
  int n = 0;
  SpaceMorphism surjection;                // M~^n ->> X(B)
  std::vector<std::vector<int>> embedding; // b -> morphism vector over M~^n
};

std::optional<FreeEmbedding> embeds_into_free(const VarietyProfile& p,
                                              const FiniteAlgebra& b, int n_cap,
                                              const Budgets& budgets = {});

/// Witness that B embeds into a finite product of free algebras: one
/// surjection from a coproduct of powers M~^{n_i} (n_i <= n_cap, at most
/// parts_cap parts) onto X(B).  The trivial algebra gets the empty-product
/// witness (no parts).
struct FreePowerEmbedding {
  std::vector<int> part_powers;             // n_i per coproduct part
  std::vector<SpaceMorphism> part_maps;     // M~^{n_i} -> X(B)
};

std::optional<FreePowerEmbedding> embeds_into_free_power(
    const VarietyProfile& p, const FiniteAlgebra& b, int n_cap, int parts_cap,
    const Budgets& budgets = {});

/// Identity validity in the variety, decided in the free algebra on the
/// identity's variables: both sides are evaluated at the free generators
/// (coordinate projections), i.e. through the finite-arity quotient map of
/// the formula algebra, and compared.
bool identity_valid(const VarietyProfile& p, const Identity& id,
                    const Budgets& budgets = {});

/// Default witness-search cap: |X(B)| + 2.
int default_n_cap(const VarietyProfile& p, const FiniteAlgebra& b,
                  const Budgets& budgets = {});

}  // namespace uaw

#endif
