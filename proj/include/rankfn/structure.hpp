#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <vector>

#include "rankfn/signature.hpp"

namespace rankfn {

using Tuple = std::vector<int>;
using TupleList = std::vector<Tuple>;

// A finite relational structure on vertices 0..size-1.  Tuples are stored
// fully oriented (a graph edge contributes both (u,v) and (v,u)) and every
// tuple of a non-unary relation has pairwise distinct entries.
class FiniteStructure {
 public:
  FiniteStructure(std::shared_ptr<const RelationalSignature> sig, int size);

  int size() const { return size_; }
  const RelationalSignature& signature() const { return *sig_; }
  const std::shared_ptr<const RelationalSignature>& sig_ptr() const { return sig_; }

  void add_tuple(int rel, Tuple t);
  void add_tuple(const std::string& rel_name, Tuple t);
  // Adds both orientations (u,v) and (v,u) of a binary relation.
  void add_edge(int rel, int u, int v);
  bool has_tuple(int rel, const Tuple& t) const;
  const std::set<Tuple>& tuples(int rel) const { return tuples_[rel]; }

  void set_unary(int unary, int v, bool value = true);
  bool has_unary(int unary, int v) const;
  const std::set<int>& unary_set(int unary) const { return unary_[unary]; }
  // Bit j set iff vertex v satisfies unary predicate j.
  std::uint32_t unary_pattern(int v) const;

  // True iff some tuple of some relation contains both x and y (x != y).
  bool adjacent(int x, int y) const;
  bool is_complete(const std::vector<int>& S) const;

  struct Induced;
  Induced induced(const std::vector<int>& S) const;
  Induced induced_mask(std::uint32_t mask) const;

  // New structure with vertex v renamed perm[v].
  FiniteStructure relabel(const std::vector<int>& perm) const;

  std::uint64_t total_tuples() const;
  bool operator==(const FiniteStructure& o) const;
  bool operator!=(const FiniteStructure& o) const { return !(*this == o); }

 private:
  void check_vertex(int v) const;

  std::shared_ptr<const RelationalSignature> sig_;
  int size_;
  std::vector<std::set<Tuple>> tuples_;
  std::vector<std::set<int>> unary_;
};

struct FiniteStructure::Induced {
  FiniteStructure structure;
  std::vector<int> old_ids;  // new id i corresponds to old_ids[i], ascending
};

std::vector<int> mask_to_vertices(std::uint32_t mask);
std::uint32_t vertices_to_mask(const std::vector<int>& vs, int size);

}  // namespace rankfn
