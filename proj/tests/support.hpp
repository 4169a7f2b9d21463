#ifndef UAW_TESTS_SUPPORT_HPP
#define UAW_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "uaw/clause.hpp"

namespace uaw::testsupport {

// Random terms/clauses over a signature's operations, depth-bounded.
// Deterministic for a fixed seed.
class ClauseGen {
 public:
  ClauseGen(Sig sig, unsigned seed, int max_vars = 3)
      : sig_(sig), rng_(seed), max_vars_(max_vars) {}

  TermPtr term(int depth = 3) {
    static const std::vector<std::string> names = {"x", "y", "z", "w"};
    if (depth == 0 || chance(3)) {
      if (sig_has(sig_, Op::bot) && chance(6)) return chance(2) ? t_bot() : t_top();
      return t_var(names[rng_() % max_vars_]);
    }
    switch (rng_() % 6) {
      case 0: return t_meet(term(depth - 1), term(depth - 1));
      case 1: return t_join(term(depth - 1), term(depth - 1));
      case 2:
        if (sig_has(sig_, Op::neg)) return t_neg(term(depth - 1));
        return t_meet(term(depth - 1), term(depth - 1));
      case 3:
        if (sig_has(sig_, Op::star)) return t_star(term(depth - 1));
        return t_join(term(depth - 1), term(depth - 1));
      default:
        return chance(2) ? t_meet(term(depth - 1), term(depth - 1))
                         : t_join(term(depth - 1), term(depth - 1));
    }
  }

  Identity identity() { return Identity{term(), term()}; }

  Clause clause(int max_premises = 2, int max_conclusions = 2) {
    Clause c;
    int np = static_cast<int>(rng_() % (max_premises + 1));
    int nc = static_cast<int>(rng_() % (max_conclusions + 1));
    for (int i = 0; i < np; ++i) c.premises.push_back(identity());
    for (int i = 0; i < nc; ++i) c.conclusions.push_back(identity());
    c.normalize();
    return c;
  }

  Clause quasi_identity(int max_premises = 2) {
    Clause c;
    int np = static_cast<int>(rng_() % (max_premises + 1));
    for (int i = 0; i < np; ++i) c.premises.push_back(identity());
    c.conclusions.push_back(identity());
    c.normalize();
    // normalization may merge duplicate conclusions but never drops the one
    return c;
  }

 private:
  bool chance(unsigned inv) { return rng_() % inv == 0; }
  Sig sig_;
  std::mt19937 rng_;
  int max_vars_;
};

}  // namespace uaw::testsupport

#endif
