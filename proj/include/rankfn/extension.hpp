#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankfn/oracle.hpp"
#include "rankfn/structure.hpp"

namespace rankfn {

// A one-point extension type of a base structure F (vertices 0..m-1): for
// each relation i and slot j < arity(i), the set A_i^j of (arity-1)-tuples b
// over F such that inserting the new point z at slot j of b yields a tuple,
// plus one bit per unary predicate for z.
struct ExtensionType {
  std::uint32_t unary_mask = 0;
  std::vector<std::vector<TupleList>> slots;  // [relation][slot], each sorted

  static ExtensionType empty_for(const RelationalSignature& sig);
  // Neighborhood subset S for a single symmetric binary relation.
  static ExtensionType graph_subset(const RelationalSignature& sig, std::uint32_t S, int m,
                                    std::uint32_t unary_mask = 0);
  // Out-neighborhood subset S (arcs z->a for a in S, a->z otherwise).
  static ExtensionType tournament_subset(const RelationalSignature& sig, std::uint32_t S, int m);
  // Insertion at chain position pos: order[t] is the local id at position t.
  static ExtensionType linear_position(const RelationalSignature& sig,
                                       const std::vector<int>& order, int pos);

  bool is_empty() const;
  bool is_full(int base_size) const;
  void validate(const RelationalSignature& sig, int base_size) const;

  static int cmp(const ExtensionType& a, const ExtensionType& b);
  bool operator==(const ExtensionType& o) const { return cmp(*this, o) == 0; }
  bool operator<(const ExtensionType& o) const { return cmp(*this, o) < 0; }

  std::string describe(const RelationalSignature& sig) const;
};

inline constexpr std::uint64_t kDefaultTypeBudget = 1ull << 20;

// All combinatorially possible types of F in canonical order (unary pattern
// ascending, then slot sets by sorted-tuple lexicographic order).  The class
// oracle selects the parametrization: neighborhood subsets for graph-like
// classes, out-sets for tournaments, positions for linear orders, and the
// general slot-set enumeration otherwise.
std::vector<ExtensionType> enumerate_extension_types(const FiniteStructure& F,
                                                     const ClassOracle& oracle,
                                                     std::uint64_t budget = kDefaultTypeBudget);

// The general slot-set enumeration regardless of oracle (cross-check path).
std::vector<ExtensionType> enumerate_extension_types_general(
    const FiniteStructure& F, std::uint64_t budget = kDefaultTypeBudget);

// F extended by the new point z = |F| exactly as T prescribes.
FiniteStructure apply_type(const FiniteStructure& F, const ExtensionType& T);

bool is_good(const ExtensionType& T, const FiniteStructure& F, const ClassOracle& oracle);

// All z in X minus F whose relation pattern over F realizes T (T is a type of
// the induced structure on F; local ids map through ascending order on F).
std::vector<int> realizations(const FiniteStructure& X, const std::vector<int>& F,
                              const ExtensionType& T);

// The extension type that z realizes over the base mask (local ids).
ExtensionType vertex_type(const FiniteStructure& X, std::uint32_t base_mask, int z);

// Exact byte keys: two vertices (or a vertex and a type) get equal keys over
// `base_mask` iff they induce the same one-point extension of the base.
bool fast_keys_applicable(const FiniteStructure& X);
std::string pattern_key_of_vertex(const FiniteStructure& X, std::uint32_t base_mask, int z);
std::string pattern_key_of_type(const FiniteStructure& X, std::uint32_t base_mask,
                                const ExtensionType& T);

}  // namespace rankfn
