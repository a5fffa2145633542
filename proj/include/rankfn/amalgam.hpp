#pragma once

#include <utility>
#include <vector>

#include "rankfn/oracle.hpp"
#include "rankfn/structure.hpp"

namespace rankfn {

// Free amalgam of B and C over A: glue is a bijection A_in_B -> A_in_C that
// must be an isomorphism between the induced substructures.  The result keeps
// B's vertex ids and appends C minus A; no tuple mixes the two outer parts.
struct FreeAmalgam;
FreeAmalgam free_amalgam(const FiniteStructure& B, const FiniteStructure& C,
                         const std::vector<int>& A_in_B, const std::vector<int>& A_in_C,
                         const std::vector<std::pair<int, int>>& glue);

struct FreeAmalgam {
  FiniteStructure whole;
  std::vector<int> b_image;  // vertex of B -> vertex of the amalgam
  std::vector<int> c_image;  // vertex of C -> vertex of the amalgam
};

enum class SumKind { LinearOrder, Tournament };

// A_0 + A_1 + ...: within-part relations kept, every cross pair oriented from
// the earlier part to the later part.
FiniteStructure ordered_sum(const std::vector<FiniteStructure>& parts, SumKind kind);

enum class AmalgamMode { Free, TournamentSum };

struct KernelLeaf {
  FiniteStructure structure;
  std::vector<int> embedding;  // kernel vertex i sits at embedding[i]
};

struct KernelAmalgam {
  FiniteStructure whole;
  std::vector<int> kernel_ids;            // always 0..|H|-1
  std::vector<std::vector<int>> leaf_ids;  // per leaf, the non-kernel vertices
  AmalgamMode mode = AmalgamMode::Free;
  // whole-vertex ids of leaf k together with the kernel.
  std::vector<int> leaf_with_kernel(int k) const;
};

// Glues the leaves over a shared copy of the kernel H.  Free mode adds no
// cross-leaf tuples; TournamentSum additionally orients every cross-leaf pair
// from the earlier leaf to the later one.
KernelAmalgam kernel_amalgam(const FiniteStructure& H, const std::vector<KernelLeaf>& leaves,
                             AmalgamMode mode);

}  // namespace rankfn
