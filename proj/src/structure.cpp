#include "rankfn/structure.hpp"

#include <algorithm>
#include <cassert>

#include "rankfn/errors.hpp"

namespace rankfn {

FiniteStructure::FiniteStructure(std::shared_ptr<const RelationalSignature> sig, int size)
    : sig_(std::move(sig)), size_(size) {
  if (!sig_) throw InputError("structure requires a signature");
  if (size_ < 0) throw InputError("structure size must be >= 0");
  tuples_.resize(sig_->num_relations());
  unary_.resize(sig_->num_unaries());
}

void FiniteStructure::check_vertex(int v) const {
  if (v < 0 || v >= size_) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(size_) + ")");
  }
}

void FiniteStructure::add_tuple(int rel, Tuple t) {
  if (rel < 0 || rel >= sig_->num_relations()) throw InputError("relation index out of range");
  const int arity = sig_->arity(rel);
  if (static_cast<int>(t.size()) != arity) {
    throw InputError("tuple arity mismatch for relation '" + sig_->relations()[rel].name + "'");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    check_vertex(t[i]);
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) {
        throw InputError("tuple entries must be pairwise distinct in relation '" +
                         sig_->relations()[rel].name + "'");
      }
    }
  }
  tuples_[rel].insert(std::move(t));
}

void FiniteStructure::add_tuple(const std::string& rel_name, Tuple t) {
  int rel = sig_->relation_index(rel_name);
  if (rel < 0) throw InputError("unknown relation '" + rel_name + "'");
  add_tuple(rel, std::move(t));
}

void FiniteStructure::add_edge(int rel, int u, int v) {
  add_tuple(rel, {u, v});
  add_tuple(rel, {v, u});
}

bool FiniteStructure::has_tuple(int rel, const Tuple& t) const {
  return tuples_[rel].count(t) > 0;
}

void FiniteStructure::set_unary(int unary, int v, bool value) {
  if (unary < 0 || unary >= sig_->num_unaries()) throw InputError("unary index out of range");
  check_vertex(v);
  if (value) {
    unary_[unary].insert(v);
  } else {
    unary_[unary].erase(v);
  }
}

bool FiniteStructure::has_unary(int unary, int v) const { return unary_[unary].count(v) > 0; }

std::uint32_t FiniteStructure::unary_pattern(int v) const {
  std::uint32_t p = 0;
  for (int j = 0; j < sig_->num_unaries(); ++j) {
    if (has_unary(j, v)) p |= (1u << j);
  }
  return p;
}

bool FiniteStructure::adjacent(int x, int y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw InputError("adjacency is defined for distinct vertices");
  for (int r = 0; r < sig_->num_relations(); ++r) {
    for (const Tuple& t : tuples_[r]) {
      bool has_x = false, has_y = false;
      for (int e : t) {
        has_x |= (e == x);
        has_y |= (e == y);
      }
      if (has_x && has_y) return true;
    }
  }
  return false;
}

bool FiniteStructure::is_complete(const std::vector<int>& S) const {
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = i + 1; j < S.size(); ++j) {
      if (!adjacent(S[i], S[j])) return false;
    }
  }
  return true;
}

FiniteStructure::Induced FiniteStructure::induced(const std::vector<int>& S) const {
  std::vector<int> ids = S;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids) check_vertex(v);

  std::vector<int> new_id(size_, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<int>(i);

  FiniteStructure sub(sig_, static_cast<int>(ids.size()));
  for (int r = 0; r < sig_->num_relations(); ++r) {
    for (const Tuple& t : tuples_[r]) {
      Tuple mapped;
      mapped.reserve(t.size());
      bool inside = true;
      for (int e : t) {
        if (new_id[e] < 0) {
          inside = false;
          break;
        }
        mapped.push_back(new_id[e]);
      }
      if (inside) sub.tuples_[r].insert(std::move(mapped));
    }
  }
  for (int j = 0; j < sig_->num_unaries(); ++j) {
    for (int v : unary_[j]) {
      if (new_id[v] >= 0) sub.unary_[j].insert(new_id[v]);
    }
  }
  return Induced{std::move(sub), std::move(ids)};
}

FiniteStructure::Induced FiniteStructure::induced_mask(std::uint32_t mask) const {
  return induced(mask_to_vertices(mask));
}

FiniteStructure FiniteStructure::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != size_) throw InputError("relabeling size mismatch");
  FiniteStructure out(sig_, size_);
  for (int r = 0; r < sig_->num_relations(); ++r) {
    for (const Tuple& t : tuples_[r]) {
      Tuple mapped;
      mapped.reserve(t.size());
      for (int e : t) mapped.push_back(perm[e]);
      out.add_tuple(r, std::move(mapped));
    }
  }
  for (int j = 0; j < sig_->num_unaries(); ++j) {
    for (int v : unary_[j]) out.set_unary(j, perm[v]);
  }
  return out;
}

std::uint64_t FiniteStructure::total_tuples() const {
  std::uint64_t n = 0;
  for (const auto& s : tuples_) n += s.size();
  return n;
}

bool FiniteStructure::operator==(const FiniteStructure& o) const {
  return size_ == o.size_ && *sig_ == *o.sig_ && tuples_ == o.tuples_ && unary_ == o.unary_;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
  std::vector<int> vs;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1u) vs.push_back(v);
  }
  return vs;
}

std::uint32_t vertices_to_mask(const std::vector<int>& vs, int size) {
  std::uint32_t m = 0;
  for (int v : vs) {
    if (v < 0 || v >= size) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0," +
                       std::to_string(size) + ")");
    }
    m |= (1u << v);
  }
  return m;
}

}  // namespace rankfn
