#include "rankfn/extension.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

std::vector<TupleList> empty_slots_for(const RelationalSignature& sig, int rel) {
  return std::vector<TupleList>(sig.arity(rel));
}

// Chain order of a linear-order structure: order[t] = vertex at position t.
std::vector<int> chain_order(const FiniteStructure& F) {
  const int m = F.size();
  std::vector<int> outdeg(m, 0);
  for (const Tuple& t : F.tuples(0)) ++outdeg[t[0]];
  std::vector<int> order(m, -1);
  for (int v = 0; v < m; ++v) {
    int pos = m - 1 - outdeg[v];
    if (pos < 0 || pos >= m || order[pos] != -1) {
      throw InputError("structure is not a linear order");
    }
    order[pos] = v;
  }
  return order;
}

}  // namespace

ExtensionType ExtensionType::empty_for(const RelationalSignature& sig) {
  ExtensionType t;
  for (int i = 0; i < sig.num_relations(); ++i) t.slots.push_back(empty_slots_for(sig, i));
  return t;
}

ExtensionType ExtensionType::graph_subset(const RelationalSignature& sig, std::uint32_t S, int m,
                                          std::uint32_t unary_mask) {
  if (sig.num_relations() != 1 || sig.arity(0) != 2) {
    throw InputError("graph types require a single binary relation");
  }
  ExtensionType t = empty_for(sig);
  t.unary_mask = unary_mask;
  for (int v = 0; v < m; ++v) {
    if ((S >> v) & 1) {
      t.slots[0][0].push_back({v});
      t.slots[0][1].push_back({v});
    }
  }
  return t;
}

ExtensionType ExtensionType::tournament_subset(const RelationalSignature& sig, std::uint32_t S,
                                               int m) {
  if (sig.num_relations() != 1 || sig.arity(0) != 2) {
    throw InputError("tournament types require a single binary relation");
  }
  ExtensionType t = empty_for(sig);
  for (int v = 0; v < m; ++v) {
    if ((S >> v) & 1) {
      t.slots[0][0].push_back({v});  // z -> v
    } else {
      t.slots[0][1].push_back({v});  // v -> z
    }
  }
  return t;
}

ExtensionType ExtensionType::linear_position(const RelationalSignature& sig,
                                             const std::vector<int>& order, int pos) {
  if (sig.num_relations() != 1 || sig.arity(0) != 2) {
    throw InputError("linear-order types require a single binary relation");
  }
  const int m = static_cast<int>(order.size());
  if (pos < 0 || pos > m) throw InputError("position out of range");
  ExtensionType t = empty_for(sig);
  for (int i = pos; i < m; ++i) t.slots[0][0].push_back({order[i]});  // z < order[i]
  for (int i = 0; i < pos; ++i) t.slots[0][1].push_back({order[i]});  // order[i] < z
  std::sort(t.slots[0][0].begin(), t.slots[0][0].end());
  std::sort(t.slots[0][1].begin(), t.slots[0][1].end());
  return t;
}

bool ExtensionType::is_empty() const {
  for (const auto& rel : slots) {
    for (const TupleList& l : rel) {
      if (!l.empty()) return false;
    }
  }
  return true;
}

bool ExtensionType::is_full(int base_size) const {
  std::vector<bool> seen(base_size, false);
  for (const auto& rel : slots) {
    for (const TupleList& l : rel) {
      for (const Tuple& t : l) {
        for (int v : t) seen[v] = true;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void ExtensionType::validate(const RelationalSignature& sig, int base_size) const {
  if (static_cast<int>(slots.size()) != sig.num_relations()) {
    throw InputError("type has wrong number of relations");
  }
  if (sig.num_unaries() < 32 && (unary_mask >> sig.num_unaries()) != 0) {
    throw InputError("type unary pattern out of range");
  }
  for (int i = 0; i < sig.num_relations(); ++i) {
    if (static_cast<int>(slots[i].size()) != sig.arity(i)) {
      throw InputError("type has wrong slot count for relation '" + sig.relations()[i].name +
                       "'");
    }
    for (const TupleList& l : slots[i]) {
      if (!std::is_sorted(l.begin(), l.end())) throw InputError("type slot sets must be sorted");
      for (const Tuple& t : l) {
        if (static_cast<int>(t.size()) != sig.arity(i) - 1) {
          throw InputError("type tuple arity mismatch");
        }
        for (std::size_t a = 0; a < t.size(); ++a) {
          if (t[a] < 0 || t[a] >= base_size) throw InputError("type tuple entry out of range");
          for (std::size_t b = a + 1; b < t.size(); ++b) {
            if (t[a] == t[b]) throw InputError("type tuple entries must be distinct");
          }
        }
      }
    }
  }
}

int ExtensionType::cmp(const ExtensionType& a, const ExtensionType& b) {
  if (a.unary_mask != b.unary_mask) return a.unary_mask < b.unary_mask ? -1 : 1;
  if (a.slots != b.slots) return a.slots < b.slots ? -1 : 1;
  return 0;
}

std::string ExtensionType::describe(const RelationalSignature& sig) const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j < sig.num_unaries(); ++j) {
    if ((unary_mask >> j) & 1) {
      out << (first ? "" : " ") << sig.unaries()[j] << "(z)";
      first = false;
    }
  }
  for (int i = 0; i < sig.num_relations(); ++i) {
    for (int j = 0; j < sig.arity(i); ++j) {
      for (const Tuple& t : slots[i][j]) {
        out << (first ? "" : " ") << sig.relations()[i].name << "(";
        first = false;
        for (int a = 0, z_done = 0; a < sig.arity(i); ++a) {
          if (a) out << ",";
          if (a == j && !z_done) {
            out << "z";
            z_done = 1;
          } else {
            out << t[a - (a > j ? 1 : 0)];
          }
        }
        out << ")";
      }
    }
  }
  if (first) out << "isolated";
  return out.str();
}

namespace {

void budget_check(std::uint64_t count, std::uint64_t budget, const std::string& what) {
  if (count > budget) {
    throw ResourceError("type enumeration for " + what + " needs " + std::to_string(count) +
                        " types, over the budget of " + std::to_string(budget));
  }
}

std::vector<ExtensionType> finish(std::vector<ExtensionType> types) {
  std::sort(types.begin(), types.end(),
            [](const ExtensionType& a, const ExtensionType& b) { return a < b; });
  return types;
}

}  // namespace

std::vector<ExtensionType> enumerate_extension_types_general(const FiniteStructure& F,
                                                             std::uint64_t budget) {
  const RelationalSignature& sig = F.signature();
  const int m = F.size();
  const int k = sig.num_unaries();

  // Universe of injective (arity-1)-tuples per slot, in lexicographic order.
  std::vector<std::vector<TupleList>> universes(sig.num_relations());
  std::uint64_t log2_total = k;
  for (int i = 0; i < sig.num_relations(); ++i) {
    const int c = sig.arity(i);
    TupleList univ;
    Tuple cur(c - 1, 0);
    std::vector<bool> used(m, false);
    // Depth-first generation of injective tuples in lexicographic order.
    auto gen = [&](auto&& self, int depth) -> void {
      if (depth == c - 1) {
        univ.push_back(cur);
        return;
      }
      for (int v = 0; v < m; ++v) {
        if (used[v]) continue;
        used[v] = true;
        cur[depth] = v;
        self(self, depth + 1);
        used[v] = false;
      }
    };
    if (c - 1 <= m) gen(gen, 0);
    log2_total += static_cast<std::uint64_t>(c) * univ.size();
    if (log2_total > 62 || (1ull << log2_total) > budget) {
      throw ResourceError("type enumeration for relation '" + sig.relations()[i].name +
                          "' of arity " + std::to_string(c) + " exceeds the budget of " +
                          std::to_string(budget) + " types");
    }
    universes[i] = std::vector<TupleList>(c, univ);
  }
  budget_check(1ull << log2_total, budget, "base of size " + std::to_string(m));

  // Odometer over subset masks per (relation, slot), unary pattern outermost.
  std::vector<std::pair<int, int>> slot_index;
  for (int i = 0; i < sig.num_relations(); ++i) {
    for (int j = 0; j < sig.arity(i); ++j) slot_index.push_back({i, j});
  }
  std::vector<ExtensionType> out;
  std::vector<std::uint64_t> odo(slot_index.size(), 0);
  for (std::uint32_t u = 0; u < (1u << k); ++u) {
    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      ExtensionType t = ExtensionType::empty_for(sig);
      t.unary_mask = u;
      for (std::size_t s = 0; s < slot_index.size(); ++s) {
        auto [i, j] = slot_index[s];
        const TupleList& univ = universes[i][j];
        for (std::size_t b = 0; b < univ.size(); ++b) {
          if ((odo[s] >> b) & 1) t.slots[i][j].push_back(univ[b]);
        }
      }
      out.push_back(std::move(t));
      // Advance the odometer, last slot fastest.
      std::size_t s = slot_index.size();
      while (s > 0) {
        --s;
        auto [i, j] = slot_index[s];
        if (++odo[s] < (1ull << universes[i][j].size())) break;
        odo[s] = 0;
        if (s == 0) {
          s = SIZE_MAX;
          break;
        }
      }
      if (slot_index.empty() || s == SIZE_MAX) break;
    }
  }
  return finish(std::move(out));
}

std::vector<ExtensionType> enumerate_extension_types(const FiniteStructure& F,
                                                     const ClassOracle& oracle,
                                                     std::uint64_t budget) {
  const RelationalSignature& sig = F.signature();
  const int m = F.size();
  const int k = sig.num_unaries();
  switch (oracle.style()) {
    case TypeStyle::GraphSubset: {
      if (m + k > 62) throw ResourceError("graph type enumeration base too large");
      budget_check(1ull << (m + k), budget, "base of size " + std::to_string(m));
      std::vector<ExtensionType> out;
      out.reserve(1ull << (m + k));
      for (std::uint32_t u = 0; u < (1u << k); ++u) {
        for (std::uint32_t S = 0; S < (1u << m); ++S) {
          out.push_back(ExtensionType::graph_subset(sig, S, m, u));
        }
      }
      return finish(std::move(out));
    }
    case TypeStyle::TournamentSubset: {
      if (m > 62) throw ResourceError("tournament type enumeration base too large");
      budget_check(1ull << m, budget, "base of size " + std::to_string(m));
      std::vector<ExtensionType> out;
      out.reserve(1ull << m);
      for (std::uint32_t S = 0; S < (1u << m); ++S) {
        out.push_back(ExtensionType::tournament_subset(sig, S, m));
      }
      return finish(std::move(out));
    }
    case TypeStyle::LinearPosition: {
      std::vector<int> order = chain_order(F);
      std::vector<ExtensionType> out;
      for (int pos = 0; pos <= m; ++pos) {
        out.push_back(ExtensionType::linear_position(sig, order, pos));
      }
      return finish(std::move(out));
    }
    case TypeStyle::General:
      return enumerate_extension_types_general(F, budget);
  }
  return {};
}

FiniteStructure apply_type(const FiniteStructure& F, const ExtensionType& T) {
  const RelationalSignature& sig = F.signature();
  T.validate(sig, F.size());
  const int z = F.size();
  FiniteStructure G(F.sig_ptr(), z + 1);
  for (int r = 0; r < sig.num_relations(); ++r) {
    for (const Tuple& t : F.tuples(r)) G.add_tuple(r, t);
  }
  for (int j = 0; j < sig.num_unaries(); ++j) {
    for (int v : F.unary_set(j)) G.set_unary(j, v);
    if ((T.unary_mask >> j) & 1) G.set_unary(j, z);
  }
  for (int i = 0; i < sig.num_relations(); ++i) {
    for (int j = 0; j < sig.arity(i); ++j) {
      for (const Tuple& b : T.slots[i][j]) {
        Tuple full;
        full.reserve(b.size() + 1);
        full.insert(full.end(), b.begin(), b.begin() + j);
        full.push_back(z);
        full.insert(full.end(), b.begin() + j, b.end());
        G.add_tuple(i, std::move(full));
      }
    }
  }
  return G;
}

bool is_good(const ExtensionType& T, const FiniteStructure& F, const ClassOracle& oracle) {
  return oracle.membership(apply_type(F, T));
}

bool fast_keys_applicable(const FiniteStructure& X) {
  return X.signature().all_binary() && X.signature().num_relations() <= 2 &&
         X.signature().num_unaries() <= 8 && X.size() <= 24;
}

namespace {

void append_mask24(std::string& out, std::uint32_t mask) {
  out.push_back(static_cast<char>(mask & 0xff));
  out.push_back(static_cast<char>((mask >> 8) & 0xff));
  out.push_back(static_cast<char>((mask >> 16) & 0xff));
}

void append_tuples(std::string& out, const TupleList& list) {
  out.push_back(static_cast<char>(list.size() & 0xff));
  out.push_back(static_cast<char>((list.size() >> 8) & 0xff));
  for (const Tuple& t : list) {
    for (int e : t) out.push_back(static_cast<char>(e));
  }
}

}  // namespace

std::string pattern_key_of_vertex(const FiniteStructure& X, std::uint32_t base_mask, int z) {
  const RelationalSignature& sig = X.signature();
  std::string key;
  key.push_back(static_cast<char>(X.unary_pattern(z)));
  if (fast_keys_applicable(X)) {
    for (int r = 0; r < sig.num_relations(); ++r) {
      std::uint32_t out_bits = 0, in_bits = 0;
      for (const Tuple& t : X.tuples(r)) {
        if (t[0] == z && ((base_mask >> t[1]) & 1)) out_bits |= (1u << t[1]);
        if (t[1] == z && ((base_mask >> t[0]) & 1)) in_bits |= (1u << t[0]);
      }
      append_mask24(key, out_bits);
      append_mask24(key, in_bits);
    }
    return key;
  }
  for (int i = 0; i < sig.num_relations(); ++i) {
    const int c = sig.arity(i);
    std::vector<TupleList> per_slot(c);
    for (const Tuple& t : X.tuples(i)) {
      int slot = -1;
      bool others_in_base = true;
      for (int a = 0; a < c; ++a) {
        if (t[a] == z) {
          slot = a;
        } else if (!((base_mask >> t[a]) & 1)) {
          others_in_base = false;
          break;
        }
      }
      if (slot < 0 || !others_in_base) continue;
      Tuple rest;
      rest.reserve(c - 1);
      for (int a = 0; a < c; ++a) {
        if (a != slot) rest.push_back(t[a]);
      }
      per_slot[slot].push_back(std::move(rest));
    }
    for (TupleList& l : per_slot) {
      std::sort(l.begin(), l.end());
      append_tuples(key, l);
    }
  }
  return key;
}

std::string pattern_key_of_type(const FiniteStructure& X, std::uint32_t base_mask,
                                const ExtensionType& T) {
  const RelationalSignature& sig = X.signature();
  const std::vector<int> verts = mask_to_vertices(base_mask);
  T.validate(sig, static_cast<int>(verts.size()));
  std::string key;
  key.push_back(static_cast<char>(T.unary_mask));
  if (fast_keys_applicable(X)) {
    for (int r = 0; r < sig.num_relations(); ++r) {
      std::uint32_t out_bits = 0, in_bits = 0;
      for (const Tuple& t : T.slots[r][0]) out_bits |= (1u << verts[t[0]]);
      for (const Tuple& t : T.slots[r][1]) in_bits |= (1u << verts[t[0]]);
      append_mask24(key, out_bits);
      append_mask24(key, in_bits);
    }
    return key;
  }
  for (int i = 0; i < sig.num_relations(); ++i) {
    for (int j = 0; j < sig.arity(i); ++j) {
      TupleList mapped;
      mapped.reserve(T.slots[i][j].size());
      for (const Tuple& t : T.slots[i][j]) {
        Tuple h;
        h.reserve(t.size());
        for (int e : t) h.push_back(verts[e]);
        mapped.push_back(std::move(h));
      }
      std::sort(mapped.begin(), mapped.end());
      append_tuples(key, mapped);
    }
  }
  return key;
}

ExtensionType vertex_type(const FiniteStructure& X, std::uint32_t base_mask, int z) {
  const RelationalSignature& sig = X.signature();
  const std::vector<int> verts = mask_to_vertices(base_mask);
  std::vector<int> local(X.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  ExtensionType T = ExtensionType::empty_for(sig);
  T.unary_mask = X.unary_pattern(z);
  for (int i = 0; i < sig.num_relations(); ++i) {
    const int c = sig.arity(i);
    for (const Tuple& t : X.tuples(i)) {
      int slot = -1;
      bool others_in_base = true;
      for (int a = 0; a < c; ++a) {
        if (t[a] == z) {
          slot = a;
        } else if (local[t[a]] < 0) {
          others_in_base = false;
          break;
        }
      }
      if (slot < 0 || !others_in_base) continue;
      Tuple rest;
      rest.reserve(c - 1);
      for (int a = 0; a < c; ++a) {
        if (a != slot) rest.push_back(local[t[a]]);
      }
      T.slots[i][slot].push_back(std::move(rest));
    }
    for (TupleList& l : T.slots[i]) std::sort(l.begin(), l.end());
  }
  return T;
}

std::vector<int> realizations(const FiniteStructure& X, const std::vector<int>& F,
                              const ExtensionType& T) {
  const std::uint32_t mask = vertices_to_mask(F, X.size());
  const std::string target = pattern_key_of_type(X, mask, T);
  std::vector<int> out;
  for (int z = 0; z < X.size(); ++z) {
    if ((mask >> z) & 1) continue;
    if (pattern_key_of_vertex(X, mask, z) == target) out.push_back(z);
  }
  return out;
}

}  // namespace rankfn
