#include "rankfn/amalgam.hpp"

#include <algorithm>
#include <set>

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

// Verifies that phi (a -> b vertex map on the listed vertices) carries the
// induced substructure on `dom` exactly onto the induced substructure on its
// image, unary predicates included.
void require_partial_iso(const FiniteStructure& B, const FiniteStructure& C,
                         const std::vector<int>& dom, const std::vector<int>& phi_of_dom) {
  if (dom.size() != phi_of_dom.size()) throw InputError("glue map size mismatch");
  auto ib = B.induced(dom);
  auto ic = C.induced(phi_of_dom);
  if (ib.old_ids.size() != dom.size() || ic.old_ids.size() != phi_of_dom.size()) {
    throw InputError("glue map must list distinct vertices");
  }
  // Rebuild the map on induced coordinates and compare relabeled structures.
  std::vector<int> pos_b(B.size(), -1), pos_c(C.size(), -1);
  for (std::size_t i = 0; i < ib.old_ids.size(); ++i) pos_b[ib.old_ids[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < ic.old_ids.size(); ++i) pos_c[ic.old_ids[i]] = static_cast<int>(i);
  std::vector<int> perm(dom.size(), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) perm[pos_b[dom[i]]] = pos_c[phi_of_dom[i]];
  if (ib.structure.relabel(perm) != ic.structure) {
    throw InputError("glue map is not an isomorphism of the shared part");
  }
}

}  // namespace

FreeAmalgam free_amalgam(const FiniteStructure& B, const FiniteStructure& C,
                         const std::vector<int>& A_in_B, const std::vector<int>& A_in_C,
                         const std::vector<std::pair<int, int>>& glue) {
  if (B.signature() != C.signature()) throw InputError("amalgam requires matching signatures");
  if (glue.size() != A_in_B.size() || A_in_B.size() != A_in_C.size()) {
    throw InputError("glue must pair up A_in_B with A_in_C");
  }
  std::vector<int> dom, img;
  for (auto [b, c] : glue) {
    dom.push_back(b);
    img.push_back(c);
  }
  {
    std::set<int> db(dom.begin(), dom.end()), sb(A_in_B.begin(), A_in_B.end());
    std::set<int> dc(img.begin(), img.end()), sc(A_in_C.begin(), A_in_C.end());
    if (db != sb || dc != sc) throw InputError("glue must cover exactly the shared vertex sets");
  }
  require_partial_iso(B, C, dom, img);

  std::vector<int> c_image(C.size(), -1);
  for (auto [b, c] : glue) c_image[c] = b;
  int next = B.size();
  for (int v = 0; v < C.size(); ++v) {
    if (c_image[v] < 0) c_image[v] = next++;
  }
  FiniteStructure whole(B.sig_ptr(), next);
  for (int r = 0; r < B.signature().num_relations(); ++r) {
    for (const Tuple& t : B.tuples(r)) whole.add_tuple(r, t);
    for (const Tuple& t : C.tuples(r)) {
      Tuple mapped;
      mapped.reserve(t.size());
      for (int e : t) mapped.push_back(c_image[e]);
      if (!whole.has_tuple(r, mapped)) whole.add_tuple(r, std::move(mapped));
    }
  }
  for (int j = 0; j < B.signature().num_unaries(); ++j) {
    for (int v : B.unary_set(j)) whole.set_unary(j, v);
    for (int v : C.unary_set(j)) whole.set_unary(j, c_image[v]);
  }
  std::vector<int> b_image(B.size());
  for (int v = 0; v < B.size(); ++v) b_image[v] = v;
  return FreeAmalgam{std::move(whole), std::move(b_image), std::move(c_image)};
}

FiniteStructure ordered_sum(const std::vector<FiniteStructure>& parts, SumKind kind) {
  const ClassOracle oracle =
      kind == SumKind::LinearOrder ? ClassOracle::linear_order() : ClassOracle::tournament();
  if (parts.empty()) throw InputError("ordered sum needs at least one part");
  for (const FiniteStructure& p : parts) {
    if (p.signature() != parts[0].signature()) {
      throw InputError("ordered sum requires matching signatures");
    }
    oracle.require_member(p);
  }
  int total = 0;
  for (const FiniteStructure& p : parts) total += p.size();
  FiniteStructure whole(parts[0].sig_ptr(), total);
  int offset = 0;
  std::vector<int> offsets;
  for (const FiniteStructure& p : parts) {
    offsets.push_back(offset);
    for (const Tuple& t : p.tuples(0)) whole.add_tuple(0, {t[0] + offset, t[1] + offset});
    offset += p.size();
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int a = 0; a < parts[i].size(); ++a) {
        for (int b = 0; b < parts[j].size(); ++b) {
          whole.add_tuple(0, {offsets[i] + a, offsets[j] + b});
        }
      }
    }
  }
  return whole;
}

std::vector<int> KernelAmalgam::leaf_with_kernel(int k) const {
  std::vector<int> ids = kernel_ids;
  ids.insert(ids.end(), leaf_ids[k].begin(), leaf_ids[k].end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

KernelAmalgam kernel_amalgam(const FiniteStructure& H, const std::vector<KernelLeaf>& leaves,
                             AmalgamMode mode) {
  if (mode == AmalgamMode::TournamentSum) {
    const ClassOracle t = ClassOracle::tournament();
    t.require_member(H);
    for (const KernelLeaf& leaf : leaves) t.require_member(leaf.structure);
  }
  const int h = H.size();
  for (const KernelLeaf& leaf : leaves) {
    if (leaf.structure.signature() != H.signature()) {
      throw InputError("kernel amalgam requires matching signatures");
    }
    if (static_cast<int>(leaf.embedding.size()) != h) {
      throw InputError("leaf embedding must cover the kernel");
    }
    std::vector<int> dom(h);
    for (int i = 0; i < h; ++i) dom[i] = i;
    require_partial_iso(H, leaf.structure, dom, leaf.embedding);
  }

  int total = h;
  for (const KernelLeaf& leaf : leaves) total += leaf.structure.size() - h;
  FiniteStructure whole(H.sig_ptr(), total);

  for (int r = 0; r < H.signature().num_relations(); ++r) {
    for (const Tuple& t : H.tuples(r)) whole.add_tuple(r, t);
  }
  for (int j = 0; j < H.signature().num_unaries(); ++j) {
    for (int v : H.unary_set(j)) whole.set_unary(j, v);
  }

  std::vector<std::vector<int>> leaf_ids;
  int next = h;
  std::vector<std::vector<int>> images;  // leaf vertex -> whole vertex
  for (const KernelLeaf& leaf : leaves) {
    std::vector<int> image(leaf.structure.size(), -1);
    for (int i = 0; i < h; ++i) image[leaf.embedding[i]] = i;
    std::vector<int> own;
    for (int v = 0; v < leaf.structure.size(); ++v) {
      if (image[v] < 0) {
        image[v] = next++;
        own.push_back(image[v]);
      }
    }
    for (int r = 0; r < H.signature().num_relations(); ++r) {
      for (const Tuple& t : leaf.structure.tuples(r)) {
        Tuple mapped;
        mapped.reserve(t.size());
        for (int e : t) mapped.push_back(image[e]);
        if (!whole.has_tuple(r, mapped)) whole.add_tuple(r, std::move(mapped));
      }
    }
    for (int j = 0; j < H.signature().num_unaries(); ++j) {
      for (int v : leaf.structure.unary_set(j)) whole.set_unary(j, image[v]);
    }
    leaf_ids.push_back(std::move(own));
    images.push_back(std::move(image));
  }

  if (mode == AmalgamMode::TournamentSum) {
    for (std::size_t i = 0; i < leaf_ids.size(); ++i) {
      for (std::size_t j = i + 1; j < leaf_ids.size(); ++j) {
        for (int u : leaf_ids[i]) {
          for (int w : leaf_ids[j]) whole.add_tuple(0, {u, w});
        }
      }
    }
  }
  return KernelAmalgam{std::move(whole), [&] {
                         std::vector<int> ks(h);
                         for (int i = 0; i < h; ++i) ks[i] = i;
                         return ks;
                       }(),
                       std::move(leaf_ids), mode};
}

}  // namespace rankfn
