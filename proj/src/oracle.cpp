#include "rankfn/oracle.hpp"

#include <bit>
#include <cassert>

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

constexpr std::uint64_t kCountSat = 1ull << 40;

// Saturating 2^e.
std::uint64_t pow2_sat(std::uint64_t e) { return e >= 40 ? kCountSat : (1ull << e); }

std::uint64_t falling_factorial(std::uint64_t m, int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (m < static_cast<std::uint64_t>(i) + 1) return 0;
    std::uint64_t f = m - i;
    if (v > (1ull << 40) / (f == 0 ? 1 : f)) return 1ull << 40;  // saturate early
    v *= f;
  }
  return v;
}

bool is_single_binary(const RelationalSignature& sig) {
  return sig.num_relations() == 1 && sig.arity(0) == 2;
}

// Adjacency masks of the single binary relation, restricted to nothing.
struct BinMasks {
  std::vector<std::uint32_t> out, in;
  explicit BinMasks(const FiniteStructure& X) {
    out.assign(X.size(), 0);
    in.assign(X.size(), 0);
    for (const Tuple& t : X.tuples(0)) {
      out[t[0]] |= (1u << t[1]);
      in[t[1]] |= (1u << t[0]);
    }
  }
};

bool graph_shaped(const FiniteStructure& X) {
  if (!is_single_binary(X.signature())) return false;
  for (const Tuple& t : X.tuples(0)) {
    if (!X.has_tuple(0, {t[1], t[0]})) return false;
  }
  return true;
}

// True iff the graph restricted to `allowed` contains a clique of size goal.
bool has_clique(const std::vector<std::uint32_t>& adj, std::uint32_t allowed, int goal) {
  if (goal <= 0) return true;
  if (std::popcount(allowed) < goal) return false;
  std::uint32_t rest = allowed;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (has_clique(adj, rest & adj[v], goal - 1)) return true;
  }
  return false;
}

bool tournament_shaped(const FiniteStructure& X) {
  if (!is_single_binary(X.signature()) || X.signature().num_unaries() != 0) return false;
  for (int u = 0; u < X.size(); ++u) {
    for (int v = u + 1; v < X.size(); ++v) {
      bool a = X.has_tuple(0, {u, v});
      bool b = X.has_tuple(0, {v, u});
      if (a == b) return false;
    }
  }
  return true;
}

bool transitive(const FiniteStructure& X) {
  BinMasks m(X);
  for (int u = 0; u < X.size(); ++u) {
    std::uint32_t todo = m.out[u];
    while (todo) {
      int v = std::countr_zero(todo);
      todo &= todo - 1;
      if ((m.out[v] & ~m.out[u]) != 0) return false;
    }
  }
  return true;
}

}  // namespace

ClassOracle ClassOracle::all_irreflexive() { return ClassOracle(ClassKind::AllIrreflexive, 0); }
ClassOracle ClassOracle::graph() { return ClassOracle(ClassKind::Graph, 0); }
ClassOracle ClassOracle::kn_free(int n) {
  if (n < 3) throw InputError("K_n-free graphs require n >= 3");
  return ClassOracle(ClassKind::KnFreeGraph, n);
}
ClassOracle ClassOracle::tournament() { return ClassOracle(ClassKind::Tournament, 0); }
ClassOracle ClassOracle::linear_order() { return ClassOracle(ClassKind::LinearOrder, 0); }
ClassOracle ClassOracle::partial_order() { return ClassOracle(ClassKind::PartialOrder, 0); }
ClassOracle ClassOracle::unary_only(int k) {
  if (k < 0) throw InputError("unary class needs k >= 0");
  return ClassOracle(ClassKind::UnaryOnly, k);
}

ClassOracle ClassOracle::by_name(const std::string& name) {
  if (name == "graph") return graph();
  if (name == "tournament") return tournament();
  if (name == "linear-order") return linear_order();
  if (name == "partial-order") return partial_order();
  if (name == "all-irreflexive") return all_irreflexive();
  if (name.size() > 6 && name[0] == 'k' && name.substr(name.size() - 5) == "-free") {
    return kn_free(std::stoi(name.substr(1, name.size() - 6)));
  }
  if (name.rfind("unary-", 0) == 0) return unary_only(std::stoi(name.substr(6)));
  throw InputError("unknown class '" + name + "'");
}

std::string ClassOracle::name() const {
  switch (kind_) {
    case ClassKind::AllIrreflexive:
      return "all-irreflexive";
    case ClassKind::Graph:
      return "graph";
    case ClassKind::KnFreeGraph:
      return "k" + std::to_string(param_) + "-free";
    case ClassKind::Tournament:
      return "tournament";
    case ClassKind::LinearOrder:
      return "linear-order";
    case ClassKind::PartialOrder:
      return "partial-order";
    case ClassKind::UnaryOnly:
      return "unary-" + std::to_string(param_);
  }
  return "?";
}

bool ClassOracle::membership(const FiniteStructure& X) const {
  switch (kind_) {
    case ClassKind::AllIrreflexive:
      return true;  // distinctness is enforced at construction
    case ClassKind::Graph:
      return graph_shaped(X);
    case ClassKind::KnFreeGraph: {
      if (!graph_shaped(X)) return false;
      if (X.size() > 32) throw ResourceError("K_n-free membership capped at 32 vertices");
      BinMasks m(X);
      std::uint32_t all = X.size() == 32 ? ~0u : ((1u << X.size()) - 1);
      return !has_clique(m.out, all, param_);
    }
    case ClassKind::Tournament:
      return tournament_shaped(X);
    case ClassKind::LinearOrder:
      return tournament_shaped(X) && transitive(X);
    case ClassKind::PartialOrder: {
      if (!is_single_binary(X.signature()) || X.signature().num_unaries() != 0) return false;
      for (const Tuple& t : X.tuples(0)) {
        if (X.has_tuple(0, {t[1], t[0]})) return false;  // antisymmetry
      }
      return transitive(X);
    }
    case ClassKind::UnaryOnly:
      return X.signature().num_relations() == 0 && X.signature().num_unaries() == param_;
  }
  return false;
}

void ClassOracle::require_member(const FiniteStructure& X) const {
  if (!membership(X)) {
    throw InputError("structure is not a member of class '" + name() + "'");
  }
}

TypeStyle ClassOracle::style() const {
  switch (kind_) {
    case ClassKind::Graph:
    case ClassKind::KnFreeGraph:
      return TypeStyle::GraphSubset;
    case ClassKind::Tournament:
      return TypeStyle::TournamentSubset;
    case ClassKind::LinearOrder:
      return TypeStyle::LinearPosition;
    default:
      return TypeStyle::General;
  }
}

std::uint64_t ClassOracle::count_good_types(const FiniteStructure& host,
                                            std::uint32_t mask) const {
  const int m = std::popcount(mask);
  const int k = host.signature().num_unaries();
  switch (kind_) {
    case ClassKind::Graph:
      return pow2_sat(static_cast<std::uint64_t>(m) + k);
    case ClassKind::KnFreeGraph: {
      if (m > 20) throw ResourceError("K_n-free type counting capped at 20 base vertices");
      // Good neighborhoods are the subsets without a K_{n-1}.
      BinMasks bm(host);
      std::vector<int> verts = mask_to_vertices(mask);
      std::vector<std::uint32_t> adj(m, 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if (i != j && ((bm.out[verts[i]] >> verts[j]) & 1)) adj[i] |= (1u << j);
        }
      }
      std::uint64_t count = 0;
      for (std::uint32_t S = 0; S < (1u << m); ++S) {
        if (!has_clique(adj, S, param_ - 1)) ++count;
      }
      std::uint64_t total = count * pow2_sat(k);
      return total > kCountSat ? kCountSat : total;
    }
    case ClassKind::Tournament:
      return pow2_sat(m);
    case ClassKind::LinearOrder:
      return static_cast<std::uint64_t>(m) + 1;
    case ClassKind::UnaryOnly:
      return pow2_sat(k);
    case ClassKind::AllIrreflexive: {
      std::uint64_t log2 = k;
      for (const RelationDecl& r : host.signature().relations()) {
        std::uint64_t slots_per = falling_factorial(m, r.arity - 1);
        log2 += static_cast<std::uint64_t>(r.arity) * slots_per;
        if (log2 >= 40) return kCountSat;
      }
      return pow2_sat(log2);
    }
    case ClassKind::PartialOrder: {
      if (m > 14) throw ResourceError("partial-order type counting capped at 14 base vertices");
      BinMasks bm(host);
      std::vector<int> verts = mask_to_vertices(mask);
      std::vector<std::uint32_t> below(m, 0), above(m, 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          if ((bm.out[verts[j]] >> verts[i]) & 1) below[i] |= (1u << j);  // verts[j] < verts[i]
          if ((bm.out[verts[i]] >> verts[j]) & 1) above[i] |= (1u << j);
        }
      }
      // Good types are pairs (D, U): D the set below the new point, U the set
      // above it.  Validity: D down-closed, U up-closed, D x U inside <.
      std::uint64_t count = 0;
      const std::uint32_t full = (m == 0) ? 0u : ((1u << m) - 1);
      for (std::uint32_t D = 0; D <= full; ++D) {
        bool down_closed = true;
        std::uint32_t allowed_above = full;
        for (std::uint32_t rest = D; rest;) {
          int i = std::countr_zero(rest);
          rest &= rest - 1;
          if ((below[i] & ~D) != 0) {
            down_closed = false;
            break;
          }
          allowed_above &= above[i];
        }
        if (!down_closed) {
          if (D == full) break;
          continue;
        }
        const std::uint32_t candidates = full & ~D & allowed_above;
        for (std::uint32_t U = candidates;; U = (U - 1) & candidates) {
          bool up_closed = true;
          for (std::uint32_t rest = U; rest;) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            if ((above[i] & ~U) != 0) {
              up_closed = false;
              break;
            }
          }
          if (up_closed) ++count;
          if (U == 0) break;
        }
        if (D == full) break;
      }
      return count > kCountSat ? kCountSat : count;
    }
  }
  return 0;
}

bool ClassOracle::has_fap_fep() const {
  return kind_ == ClassKind::AllIrreflexive || kind_ == ClassKind::Graph;
}

}  // namespace rankfn
