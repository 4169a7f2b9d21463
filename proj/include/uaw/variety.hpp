#ifndef UAW_VARIETY_HPP
#define UAW_VARIETY_HPP

#include <string>
#include <vector>

#include "uaw/algebra.hpp"
#include "uaw/space.hpp"

namespace uaw {

/// Everything the engine needs to know about one of the seven quasivarieties:
/// the generator algebra M, its alter ego M~ (for the four bounded ones), the
/// clause bases, the exact quasi-identity bound n0 = |M|, and the bar target
/// for the bound-free ones.
struct VarietyProfile {
  Sig sig;
  std::string name;
  FiniteAlgebra generator;                 // M
  StructuredSpace gen_space;               // M~, empty when !has_duality
  SpaceKind space_kind;
  std::vector<std::string> basis_clauses;  // registry ids; also the IS(F) test
  std::vector<std::string> basis_quasi;    // registry ids; also the ISP(F) test
  int n0;                                  // |M|
  bool has_duality;
  Sig bar_target;                          // = sig for bounded profiles
};

const VarietyProfile& profile(Sig sig);

// The concrete generator algebras: the two-element bounded lattice, the
// three-element Stone and Kleene algebras, the four-element De Morgan
// algebra, each with element labels.
const FiniteAlgebra& builtin_2();
const FiniteAlgebra& builtin_S();
const FiniteAlgebra& builtin_D();
const FiniteAlgebra& builtin_K();

/// Resolves "2", "S", "D", "K", "trivial" or a power like "D^2" against a
/// variety, taking the bound-free reduct when the variety has no constants.
/// Returns nothing if the name is not a builtin.
std::optional<FiniteAlgebra> builtin_algebra(const std::string& name, Sig sig,
                                             const Budgets& budgets = {});

/// Drops the constants of a bounded algebra, yielding its dl/dml/kl reduct.
FiniteAlgebra unbounded_reduct(const FiniteAlgebra& a);

struct Enumeration {
  std::vector<FiniteAlgebra> members;  // deduplicated up to isomorphism
  int max_power = 0;
  int max_size = 0;
  // Power bound that would make the enumeration provably complete for this
  // size cap; the search is exhaustive relative to max_power only.
  long long complete_power_bound = 0;
  bool complete() const { return max_power >= complete_power_bound; }
};

/// All subalgebras of M^k for k <= max_power with at most max_size elements,
/// up to isomorphism, in canonical order (size, then table shape).
Enumeration enumerate_members(const VarietyProfile& p, int max_power,
                              int max_size, const Budgets& budgets = {});

}  // namespace uaw

#endif
