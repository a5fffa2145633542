#pragma once

#include <memory>
#include <vector>

#include "rankfn/oracle.hpp"
#include "rankfn/structure.hpp"

namespace rankfn {

struct EnumLimits {
  int max_size = 7;                 // practical cap for graphs
  std::uint64_t type_budget = 1ull << 20;
};

// All oracle-accepted structures of size n over the given signature, one
// representative per isomorphism class (canonical-form deduplication) when
// up_to_iso, otherwise all labeled structures on 0..n-1.
std::vector<FiniteStructure> enumerate_structures(
    std::shared_ptr<const RelationalSignature> sig, const ClassOracle& oracle, int n,
    bool up_to_iso, const EnumLimits& limits = {});

// Per-size lists for sizes 0..max_n, sharing the augmentation work.
std::vector<std::vector<FiniteStructure>> enumerate_up_to(
    std::shared_ptr<const RelationalSignature> sig, const ClassOracle& oracle, int max_n,
    bool up_to_iso, const EnumLimits& limits = {});

}  // namespace rankfn
