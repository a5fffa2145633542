#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankfn/structure.hpp"

namespace rankfn {

// Backtracking search for an induced embedding of A into X: an injective map
// preserving every relation and unary predicate exactly on the image.
std::optional<std::vector<int>> find_embedding(const FiniteStructure& A,
                                               const FiniteStructure& X);
bool embeds(const FiniteStructure& A, const FiniteStructure& X);
bool isomorphic(const FiniteStructure& A, const FiniteStructure& B);

// All automorphisms of X, as permutation vectors (perm[v] = image of v).
// Guarded: |X| <= 10.
std::vector<std::vector<int>> automorphisms(const FiniteStructure& X);

// Deterministic byte encoding of the labeled structure (tuples sorted).
std::string encode_structure(const FiniteStructure& X);

// Minimum of encode_structure over all relabelings: a complete isomorphism
// invariant.  Branch-and-bound for all-binary signatures; brute force over
// permutations otherwise (guarded |X| <= 8).
std::string canonical_key(const FiniteStructure& X);

}  // namespace rankfn
