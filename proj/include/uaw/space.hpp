#ifndef UAW_SPACE_HPP
#define UAW_SPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uaw/errors.hpp"

namespace uaw {

enum class SpaceKind { priestley, stone, demorgan, kleene };

const char* space_kind_name(SpaceKind k);
std::optional<SpaceKind> space_kind_by_name(const std::string& name);

/// A finite structured space: partial order plus named unary operations,
/// binary relations and distinguished subsets.  Every space here is finite,
/// so the topology is discrete and never represented.
struct StructuredSpace {
  SpaceKind kind = SpaceKind::priestley;
  int size = 0;
  std::vector<char> order;  // size*size, order[x*size+y] == 1 iff x <= y
  std::map<std::string, std::vector<int>> unary;    // e.g. "d", "f"
  std::map<std::string, std::vector<char>> rels;    // e.g. "sim" (size*size)
  std::map<std::string, std::vector<char>> subsets; // e.g. "Y" (size)
  std::vector<std::string> labels;

  bool leq(int x, int y) const { return order[x * size + y] != 0; }
  bool rel(const std::string& name, int x, int y) const;
  bool in_subset(const std::string& name, int x) const;
  std::string label(int x) const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;  // global minimum, if any
  std::optional<int> top_point() const;

  bool operator==(const StructuredSpace& o) const;
};

struct SpaceMorphism {
  std::vector<int> map;
  bool operator==(const SpaceMorphism& o) const { return map == o.map; }
};

/// Order-preserving, commutes with every named unary op, preserves every
/// named relation and maps each named subset into its counterpart.
bool is_space_morphism(const StructuredSpace& x, const StructuredSpace& z,
                       const std::vector<int>& map);

/// Pointwise power; n = 0 gives the one-point space (subset membership is a
/// vacuous "all coordinates", so the point lies in every named subset).
StructuredSpace space_power(const StructuredSpace& s, int n,
                            const Budgets& budgets = {});

struct Coproduct {
  StructuredSpace space;
  std::vector<SpaceMorphism> injections;
};

/// Disjoint union; order/relations stay component-wise, subsets are unioned.
Coproduct space_coproduct(const std::vector<const StructuredSpace*>& parts);

/// All morphisms x -> z, sorted lexicographically by mapping table.
std::vector<SpaceMorphism> morphisms(const StructuredSpace& x,
                                     const StructuredSpace& z,
                                     const Budgets& budgets = {});

/// Number of morphisms x -> z, stopping at cap (returns cap + 1 when there
/// are more than cap).
long long count_morphisms_capped(const StructuredSpace& x,
                                 const StructuredSpace& z, long long cap,
                                 const Budgets& budgets = {});

/// First onto morphism in the deterministic search order, or absent after
/// an exhaustive search.  Throws BudgetError if the node budget runs out.
std::optional<SpaceMorphism> surjective_morphism_exists(
    const StructuredSpace& x, const StructuredSpace& z,
    const Budgets& budgets = {});

/// Like `surjective_morphism_exists` but only the listed points need to be
/// covered by the image.
std::optional<SpaceMorphism> covering_morphism_exists(
    const StructuredSpace& x, const StructuredSpace& z,
    const std::vector<int>& must_cover, const Budgets& budgets = {});

struct AxiomResult {
  bool ok = true;
  std::string failed_axiom;  // first violated axiom id
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Evaluates the kind's axiom list: partial order always; Stone's unique
/// minimal-element map d; the De Morgan order-reversing involution f; the
/// Kleene conditions on sim and Y.
AxiomResult check_space_axioms(const StructuredSpace& x);

/// Graphviz rendering: Hasse edges for the order, gray labeled edges for
/// unary ops, double circles for subset members.  Byte-stable.
std::string emit_dot(const StructuredSpace& x, const std::string& graph_name = "space");

}  // namespace uaw

#endif
