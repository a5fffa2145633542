#include "rankfn/structure_algo.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>
#include <numeric>

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

struct BinaryView {
  // Adjacency masks per relation; valid when the signature is all-binary
  // and |X| <= 64.
  int n = 0;
  int num_rel = 0;
  std::vector<std::vector<std::uint64_t>> out;  // out[r][v]: bits w with (v,w) in R_r
  std::vector<std::vector<std::uint64_t>> in;
  std::vector<std::uint8_t> unary;

  static bool applicable(const FiniteStructure& X) {
    return X.signature().all_binary() && X.size() <= 64 && X.signature().num_unaries() <= 8;
  }

  explicit BinaryView(const FiniteStructure& X)
      : n(X.size()), num_rel(X.signature().num_relations()) {
    out.assign(num_rel, std::vector<std::uint64_t>(n, 0));
    in.assign(num_rel, std::vector<std::uint64_t>(n, 0));
    unary.assign(n, 0);
    for (int r = 0; r < num_rel; ++r) {
      for (const Tuple& t : X.tuples(r)) {
        out[r][t[0]] |= (1ull << t[1]);
        in[r][t[1]] |= (1ull << t[0]);
      }
    }
    for (int v = 0; v < n; ++v) unary[v] = static_cast<std::uint8_t>(X.unary_pattern(v));
  }
};

// Checks that phi (defined on all of A) is an induced embedding, including
// relations of arity >= 3 in both directions.
bool full_embedding_check(const FiniteStructure& A, const FiniteStructure& X,
                          const std::vector<int>& phi) {
  const auto& sig = A.signature();
  std::vector<int> image_flag(X.size(), -1);
  for (int a = 0; a < A.size(); ++a) image_flag[phi[a]] = a;
  for (int r = 0; r < sig.num_relations(); ++r) {
    for (const Tuple& t : A.tuples(r)) {
      Tuple mapped;
      mapped.reserve(t.size());
      for (int e : t) mapped.push_back(phi[e]);
      if (!X.has_tuple(r, mapped)) return false;
    }
    for (const Tuple& t : X.tuples(r)) {
      Tuple pre;
      pre.reserve(t.size());
      bool inside = true;
      for (int e : t) {
        if (image_flag[e] < 0) {
          inside = false;
          break;
        }
        pre.push_back(image_flag[e]);
      }
      if (inside && !A.has_tuple(r, pre)) return false;
    }
  }
  for (int j = 0; j < sig.num_unaries(); ++j) {
    for (int a = 0; a < A.size(); ++a) {
      if (A.has_unary(j, a) != X.has_unary(j, phi[a])) return false;
    }
  }
  return true;
}

struct EmbedSearch {
  const FiniteStructure& A;
  const FiniteStructure& X;
  bool binary_fast;
  std::unique_ptr<BinaryView> av, xv;
  std::vector<int> order;  // A's vertices, highest incidence first
  std::vector<int> phi;    // A vertex -> X vertex, -1 unset
  std::vector<bool> used;
  bool collect_all = false;
  std::vector<std::vector<int>> found;

  EmbedSearch(const FiniteStructure& a, const FiniteStructure& x) : A(a), X(x) {
    binary_fast = BinaryView::applicable(A) && BinaryView::applicable(X);
    if (binary_fast) {
      av = std::make_unique<BinaryView>(A);
      xv = std::make_unique<BinaryView>(X);
    }
    order.resize(A.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg(A.size(), 0);
    for (int r = 0; r < A.signature().num_relations(); ++r) {
      for (const Tuple& t : A.tuples(r)) {
        for (int e : t) ++deg[e];
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    phi.assign(A.size(), -1);
    used.assign(X.size(), false);
  }

  bool pair_consistent(int a, int x) const {
    if (A.unary_pattern(a) != X.unary_pattern(x)) return false;
    if (binary_fast) {
      for (int r = 0; r < av->num_rel; ++r) {
        for (int b = 0; b < A.size(); ++b) {
          int y = phi[b];
          if (y < 0) continue;
          if (((av->out[r][a] >> b) & 1) != ((xv->out[r][x] >> y) & 1)) return false;
          if (((av->in[r][a] >> b) & 1) != ((xv->in[r][x] >> y) & 1)) return false;
        }
      }
      return true;
    }
    // General signatures: binary sub-check is skipped, the leaf check decides.
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == order.size()) {
      if (binary_fast || full_embedding_check(A, X, phi)) {
        if (collect_all) {
          found.push_back(phi);
          return false;  // keep searching
        }
        return true;
      }
      return false;
    }
    int a = order[depth];
    for (int x = 0; x < X.size(); ++x) {
      if (used[x]) continue;
      if (!pair_consistent(a, x)) continue;
      phi[a] = x;
      used[x] = true;
      if (dfs(depth + 1)) return true;
      phi[a] = -1;
      used[x] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const FiniteStructure& A,
                                               const FiniteStructure& X) {
  if (A.signature() != X.signature()) {
    throw InputError("embedding requires matching signatures");
  }
  if (A.size() > X.size()) return std::nullopt;
  EmbedSearch s(A, X);
  if (s.dfs(0)) return s.phi;
  return std::nullopt;
}

bool embeds(const FiniteStructure& A, const FiniteStructure& X) {
  return find_embedding(A, X).has_value();
}

bool isomorphic(const FiniteStructure& A, const FiniteStructure& B) {
  if (A.size() != B.size() || A.total_tuples() != B.total_tuples()) return false;
  return embeds(A, B);
}

std::vector<std::vector<int>> automorphisms(const FiniteStructure& X) {
  if (X.size() > 10) throw ResourceError("automorphism enumeration capped at 10 vertices");
  EmbedSearch s(X, X);
  s.collect_all = true;
  s.dfs(0);
  // The search assigns by `order`; results are already full permutations.
  return s.found;
}

std::string encode_structure(const FiniteStructure& X) {
  if (X.size() > 255) throw ResourceError("structure encoding capped at 255 vertices");
  std::string out;
  out.push_back(static_cast<char>(X.size()));
  for (int r = 0; r < X.signature().num_relations(); ++r) {
    std::size_t count = X.tuples(r).size();
    out.push_back(static_cast<char>(count & 0xff));
    out.push_back(static_cast<char>((count >> 8) & 0xff));
    for (const Tuple& t : X.tuples(r)) {
      for (int e : t) out.push_back(static_cast<char>(e));
    }
  }
  for (int j = 0; j < X.signature().num_unaries(); ++j) {
    out.push_back(static_cast<char>(X.unary_set(j).size()));
    for (int v : X.unary_set(j)) out.push_back(static_cast<char>(v));
  }
  return out;
}

namespace {

// Lexicographically minimal row-by-row encoding over all vertex orderings.
// Row t: [unary byte of v] then one byte per (earlier position, relation)
// holding (v->p)<<1 | (p->v).
class CanonicalBinary {
 public:
  explicit CanonicalBinary(const FiniteStructure& X) : view_(X), n_(X.size()) {
    row_offset_.resize(n_ + 1);
    row_offset_[0] = 0;
    for (int t = 0; t < n_; ++t) {
      row_offset_[t + 1] = row_offset_[t] + 1 + t * view_.num_rel;
    }
    cur_.assign(row_offset_[n_], 0);
  }

  std::string run() {
    if (n_ == 0) return std::string();
    perm_.clear();
    used_ = 0;
    have_best_ = false;
    dfs(0);
    return std::string(best_.begin(), best_.end());
  }

 private:
  void build_row(int v, std::vector<std::uint8_t>& row) const {
    row.clear();
    row.push_back(view_.unary[v]);
    for (int q = 0; q < static_cast<int>(perm_.size()); ++q) {
      int p = perm_[q];
      for (int r = 0; r < view_.num_rel; ++r) {
        std::uint8_t b = static_cast<std::uint8_t>((((view_.out[r][v] >> p) & 1) << 1) |
                                                   ((view_.in[r][v] >> p) & 1));
        row.push_back(b);
      }
    }
  }

  bool twins(int v, int w) const {
    if (view_.unary[v] != view_.unary[w]) return false;
    const std::uint64_t pairbits = (1ull << v) | (1ull << w);
    for (int r = 0; r < view_.num_rel; ++r) {
      if ((view_.out[r][v] & ~pairbits) != (view_.out[r][w] & ~pairbits)) return false;
      if ((view_.in[r][v] & ~pairbits) != (view_.in[r][w] & ~pairbits)) return false;
      if (((view_.out[r][v] >> w) & 1) != ((view_.out[r][w] >> v) & 1)) return false;
    }
    return true;
  }

  void dfs(int depth) {
    if (depth == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    // Rows for unused candidates; keep only the minimal row.
    std::vector<int> cands;
    std::vector<std::uint8_t> row, min_row;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1) continue;
      build_row(v, row);
      if (cands.empty() || row < min_row) {
        min_row = row;
        cands.assign(1, v);
      } else if (row == min_row) {
        cands.push_back(v);
      }
    }
    if (have_best_) {
      const std::size_t off = row_offset_[depth];
      int c = std::memcmp(min_row.data(), best_.data() + off, min_row.size());
      if (c > 0) return;  // cannot improve on the incumbent
    }
    // Twin candidates lead to identical completions; keep one per class.
    std::vector<int> kept;
    for (int v : cands) {
      bool dup = false;
      for (int w : kept) {
        if (twins(v, w)) {
          dup = true;
          break;
        }
      }
      if (!dup) kept.push_back(v);
    }
    const std::size_t off = row_offset_[depth];
    for (int v : kept) {
      std::copy(min_row.begin(), min_row.end(), cur_.begin() + off);
      perm_.push_back(v);
      used_ |= (1ull << v);
      dfs(depth + 1);
      used_ &= ~(1ull << v);
      perm_.pop_back();
    }
  }

  BinaryView view_;
  int n_;
  std::vector<std::size_t> row_offset_;
  std::vector<int> perm_;
  std::uint64_t used_ = 0;
  std::vector<std::uint8_t> cur_, best_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_key(const FiniteStructure& X) {
  if (BinaryView::applicable(X)) {
    std::string key;
    key.push_back(static_cast<char>(X.size()));
    key += CanonicalBinary(X).run();
    return key;
  }
  if (X.size() > 8) {
    throw ResourceError("canonical form for arity >= 3 signatures capped at 8 vertices");
  }
  std::vector<int> perm(X.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool have = false;
  do {
    std::string enc = encode_structure(X.relabel(perm));
    if (!have || enc < best) {
      best = std::move(enc);
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) return encode_structure(X);
  return best;
}

}  // namespace rankfn
