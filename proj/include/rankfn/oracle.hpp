#pragma once

#include <cstdint>
#include <string>

#include "rankfn/structure.hpp"

namespace rankfn {

enum class ClassKind {
  AllIrreflexive,  // no axioms beyond irreflexivity of non-unary relations
  Graph,
  KnFreeGraph,
  Tournament,
  LinearOrder,
  PartialOrder,
  UnaryOnly,
};

// How one-point extension types of a base structure are parametrized.
enum class TypeStyle {
  GraphSubset,     // neighborhood subset (one adjacency bit per base vertex)
  TournamentSubset,  // out-neighborhood subset
  LinearPosition,  // insertion position 0..m
  General,         // full slot-set data per Def of types
};

// Membership test for a hereditary, isomorphism-invariant class of finite
// structures, plus the combinatorial data the rank engine needs.
class ClassOracle {
 public:
  static ClassOracle all_irreflexive();
  static ClassOracle graph();
  static ClassOracle kn_free(int n);  // K_n-free graphs, n >= 3
  static ClassOracle tournament();
  static ClassOracle linear_order();
  static ClassOracle partial_order();
  static ClassOracle unary_only(int k);
  // Accepts "graph", "tournament", "linear-order", "partial-order",
  // "all-irreflexive", "k<n>-free", "unary-<k>".
  static ClassOracle by_name(const std::string& name);

  ClassKind kind() const { return kind_; }
  int param() const { return param_; }
  std::string name() const;

  bool membership(const FiniteStructure& X) const;
  void require_member(const FiniteStructure& X) const;

  TypeStyle style() const;
  // Number of class-good one-point extension types of the substructure of
  // `host` induced on `mask`, saturated at 2^40.
  std::uint64_t count_good_types(const FiniteStructure& host, std::uint32_t mask) const;
  // Classes eligible for the layered universal-structure builder.
  bool has_fap_fep() const;

 private:
  ClassOracle(ClassKind kind, int param) : kind_(kind), param_(param) {}

  ClassKind kind_;
  int param_;
};

}  // namespace rankfn
