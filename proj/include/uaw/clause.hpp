#ifndef UAW_CLAUSE_HPP
#define UAW_CLAUSE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "uaw/algebra.hpp"

namespace uaw {

/// Term AST.  `phi <= psi` is stored desugared as meet(phi,psi) = phi at
/// parse time; there is no separate node for it.
struct Term {
  enum class Kind { var, bot, top, neg, star, meet, join };
  Kind kind;
  std::string var;  // Kind::var only
  TermPtr a, b;
};

TermPtr t_var(const std::string& name);
TermPtr t_bot();
TermPtr t_top();
TermPtr t_neg(TermPtr x);
TermPtr t_star(TermPtr x);
TermPtr t_meet(TermPtr x, TermPtr y);
TermPtr t_join(TermPtr x, TermPtr y);

int term_cmp(const TermPtr& x, const TermPtr& y);
bool term_eq(const TermPtr& x, const TermPtr& y);
void collect_vars(const TermPtr& t, std::vector<std::string>& out);

struct Identity {
  TermPtr lhs, rhs;
};
int identity_cmp(const Identity& x, const Identity& y);
bool identity_eq(const Identity& x, const Identity& y);

/// A clause premises => conclusions over deduplicated, order-normalized
/// identity sets, so equality is structural.  |conclusions| == 1 marks a
/// quasi-identity, empty premises a positive clause, empty conclusions a
/// negative clause.
struct Clause {
  std::vector<Identity> premises;
  std::vector<Identity> conclusions;

  void normalize();  // sort + dedup both sides
  bool is_quasi_identity() const { return conclusions.size() == 1; }
  bool is_positive() const { return premises.empty(); }
  bool is_negative() const { return conclusions.empty(); }
  std::vector<std::string> variables() const;  // sorted by name
  bool operator==(const Clause& o) const;
};

// ---- text form --------------------------------------------------------------
//
// term   := var | "bot" | "top" | "~" term | term "/\" term | term "\/" term
//         | term "*" (postfix) | "(" term ")"
// ident  := term "=" term | term "<=" term
// clause := ("true" | ident {"," ident}) "=>" ("false" | ident {"|" ident})
//
// Precedence, tightest first: postfix *, ~, /\, \/.  Whitespace insensitive.

struct ParseError : DataError {
  int offset;  // 0-based byte offset into the input
  ParseError(const std::string& what, int off) : DataError(what), offset(off) {}
};

TermPtr parse_term(const std::string& text);
Clause parse_clause(const std::string& text);

std::string print_term(const TermPtr& t);
std::string print_identity(const Identity& i);
std::string print_clause(const Clause& c);

// ---- satisfaction ------------------------------------------------------------

struct SatResult {
  bool ok = true;
  // First failing assignment (variables sorted by name, values ascending).
  std::vector<std::pair<std::string, int>> witness;
  explicit operator bool() const { return ok; }
};

/// True iff every assignment of the clause's variables into `a` that makes
/// all premises hold makes some conclusion hold.  Variables occurring only
/// in the conclusions are quantified like all others.
SatResult satisfies(const FiniteAlgebra& a, const Clause& c,
                    const Budgets& budgets = {});

struct ClassResult {
  bool ok = true;
  int failing_index = -1;  // position in the input list
  SatResult failure;
  explicit operator bool() const { return ok; }
};

ClassResult valid_in_class(const std::vector<FiniteAlgebra>& algebras,
                           const Clause& c, const Budgets& budgets = {});

// ---- the named clause registry ----------------------------------------------

struct RegistryEntry {
  std::string id;  // "C1".."C8"
  Clause clause;
  std::string text;
};

/// C1..C8 in order: non-triviality, meet-prime bottom, join-prime top, the
/// negation-fixpoint clauses, the two De Morgan quasi-identities, and the
/// Kleene quasi-identity.
const std::vector<RegistryEntry>& clause_registry();
const RegistryEntry& registry_entry(const std::string& id);
std::optional<std::string> registry_lookup(const Clause& c);

std::string format_assignment(const std::vector<std::pair<std::string, int>>& assignment,
                              const FiniteAlgebra& a);

}  // namespace uaw

#endif
