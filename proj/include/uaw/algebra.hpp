#ifndef UAW_ALGEBRA_HPP
#define UAW_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uaw/errors.hpp"

namespace uaw {

// The seven built-in signatures.  bdl/st/dma/ka are bounded, dl/dml/kl are
// the bound-free companions handled through the bar construction.
enum class Sig { bdl, dl, st, dma, dml, ka, kl };

enum class Op { meet, join, neg, star, bot, top };

const char* sig_name(Sig s);
std::optional<Sig> sig_by_name(const std::string& name);
const char* op_name(Op op);
std::optional<Op> op_by_name(const std::string& name);
int op_arity(Op op);

// Operations of a signature, in fixed order: meet, join, then any of
// neg/star, then bot/top.
const std::vector<Op>& sig_ops(Sig s);
bool sig_has(Sig s, Op op);
bool sig_is_bounded(Sig s);
// dl -> bdl, dml -> dma, kl -> ka; identity on bounded signatures.
Sig sig_bar_target(Sig s);

/// A finite algebra over one of the built-in signatures.  The carrier is
/// 0..size-1; binary tables are row-major (meet[x*size+y]).  `labels` is an
/// optional display name per element and never affects semantics.
struct FiniteAlgebra {
  Sig sig = Sig::bdl;
  int size = 0;
  std::string name;
  std::vector<int> meet, join;  // size*size
  std::vector<int> neg, star;   // size, or empty if absent from sig
  int bot = -1, top = -1;       // -1 if absent from sig
  std::vector<std::string> labels;

  int mt(int x, int y) const { return meet[x * size + y]; }
  int jn(int x, int y) const { return join[x * size + y]; }
  bool leq(int x, int y) const { return mt(x, y) == x; }
  int apply1(Op op, int x) const;
  int apply2(Op op, int x, int y) const;
  int constant(Op op) const;

  std::string label(int x) const;
  bool trivial() const { return size == 1; }

  // Throws DataError with a field diagnostic if tables are malformed.
  void check_well_formed(const std::string& context = "algebra") const;

  bool operator==(const FiniteAlgebra& other) const;
};

/// Mapping table of a homomorphism source -> target (same signature).
struct Homomorphism {
  std::vector<int> map;
  bool operator==(const Homomorphism& o) const { return map == o.map; }
};

// ---- term evaluation -------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Evaluates `term` in `alg` under `assignment` (variable -> carrier index).
/// Throws SignatureError for operations outside alg's signature and
/// DataError for unassigned variables.
int eval_term(const FiniteAlgebra& alg, const TermPtr& term,
              const std::vector<std::pair<std::string, int>>& assignment);

// ---- structural operations -------------------------------------------------

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     const std::vector<int>& map);

/// All homomorphisms a -> b in lexicographic-by-map order.  Backtracks over
/// a generating set of `a`; falls back to scanning all maps only for
/// one-element sources.
std::vector<Homomorphism> homomorphisms(const FiniteAlgebra& a,
                                        const FiniteAlgebra& b);

/// Smallest generating set found by greedy closure, ascending indices.
std::vector<int> greedy_generators(const FiniteAlgebra& a);

/// Least subuniverse containing `seed` and all constants, re-indexed in
/// ascending order of the original indices.  Second component embeds the
/// result back into `a`.
std::pair<FiniteAlgebra, Homomorphism> subalgebra_generated(
    const FiniteAlgebra& a, const std::vector<int>& seed);

FiniteAlgebra direct_power(const FiniteAlgebra& a, int n,
                           const Budgets& budgets = {});
FiniteAlgebra direct_product(const std::vector<const FiniteAlgebra*>& factors,
                             const Budgets& budgets = {});
FiniteAlgebra trivial_algebra(Sig sig);

/// Mixed-radix decoding of a direct-power element: index -> coordinates,
/// first coordinate most significant.
std::vector<int> power_coords(int index, int base_size, int n);
int power_index(const std::vector<int>& coords, int base_size);

/// First isomorphism in the deterministic search order, if any.
std::optional<Homomorphism> is_isomorphic(const FiniteAlgebra& a,
                                          const FiniteAlgebra& b);

/// Adds fresh bottom/top to a dl/dml/kl algebra, giving bdl/dma/ka.  Old
/// elements keep their indices; bot = size, top = size + 1.
FiniteAlgebra add_bounds(const FiniteAlgebra& a);

struct ValidationResult {
  bool ok = true;
  std::string witness;  // first failed law, with elements
  explicit operator bool() const { return ok; }
};

/// Checks the defining laws of the algebra's own signature class: lattice
/// axioms, distributivity, bounds, involution + De Morgan, the Kleene
/// inequality, and the max-characterization of the Stone pseudocomplement.
ValidationResult validate_variety(const FiniteAlgebra& a);

}  // namespace uaw

#endif
