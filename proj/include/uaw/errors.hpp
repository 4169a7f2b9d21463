#ifndef UAW_ERRORS_HPP
#define UAW_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uaw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad flags, bad command line, bad arguments.
struct UsageError : Error {
  using Error::Error;
};

// Malformed input files or values (carries a field/position diagnostic).
struct DataError : Error {
  using Error::Error;
};

// Operation mixes algebras/spaces of different signatures or kinds, or a
// term uses an operation outside the signature at hand.
struct SignatureError : Error {
  using Error::Error;
};

// A configured search/size budget would be exceeded.  `requested` is the
// exact quantity that was refused when it is known, otherwise a lower bound
// (and `lower_bound_only` is set).
struct BudgetError : Error {
  std::uint64_t requested = 0;
  std::uint64_t limit = 0;
  bool lower_bound_only = false;
  BudgetError(const std::string& what, std::uint64_t req, std::uint64_t lim,
              bool lower_only = false)
      : Error(what), requested(req), limit(lim), lower_bound_only(lower_only) {}
};

// Something the duality guarantees failed to hold (e.g. a pointwise
// operation fell outside the enumerated morphism set).  Never expected;
// reaching this is a bug in the engine, not in the inputs.
struct InvariantError : Error {
  using Error::Error;
};

struct Budgets {
  long long max_carrier = 1'000'000;         // carrier size for powers/products
  long long search_nodes = 50'000'000;       // morphism backtracking nodes
  long long max_free_elements = 200'000;     // free-algebra element enumeration
  long long max_assignments = 100'000'000;   // clause assignment evaluations
  long long max_table_entries = 10'000'000;  // materialized operation tables
};

}  // namespace uaw

#endif
