#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rankfn/enumerate.hpp"
#include "rankfn/extension.hpp"
#include "rankfn/oracle.hpp"
#include "rankfn/structure.hpp"

namespace rankfn {

// Hard cap on hosts admitted for exact rank computation; the environment
// variable RANK_MAX_HOST overrides it.
int rank_host_cap();

// Memoized exact rank computation over one fixed host.  Subsets are bitmasks;
// the rank of a subset F is 0 if some class-good one-point extension type of
// F has no realization in the host, and otherwise
//   1 + min over good types of (max over realizations z of rank(F + z)).
// Values are deterministic and bounded by |host| - |F|.
class RankEngine {
 public:
  RankEngine(FiniteStructure host, ClassOracle oracle);

  int size() const { return n_; }
  const FiniteStructure& host() const { return host_; }
  const ClassOracle& oracle() const { return oracle_; }

  int rank_subset(std::uint32_t mask);
  int rank_subset(const std::vector<int>& F);
  int rank() { return rank_subset(std::uint32_t{0}); }

  // A good type of F with no realization; present exactly when the rank is 0.
  std::optional<ExtensionType> rank_zero_witness(std::uint32_t mask);
  // The canonically first good type whose worst realization attains the min
  // in the rank recursion (the unrealizable witness when the rank is 0).
  ExtensionType pessimal_type(std::uint32_t mask);

  // Computed subset ranks; -1 marks entries not yet evaluated.
  const std::vector<std::int8_t>& table() const { return memo_; }

 private:
  int compute(std::uint32_t mask);
  // Fast two-word pattern keys for hosts with at most two binary relations.
  std::array<std::uint64_t, 2> fast_key(std::uint32_t mask, int z) const;

  FiniteStructure host_;
  ClassOracle oracle_;
  int n_;
  std::uint32_t all_;
  bool fast_;
  std::vector<std::int8_t> memo_;
  // Per relation, per vertex adjacency masks (fast path).
  std::vector<std::vector<std::uint32_t>> out_, in_;
  std::vector<std::uint8_t> unary_;
};

int rank_of(const FiniteStructure& X, const ClassOracle& oracle);

// True iff every isomorphism class of oracle members of size <= n embeds
// into X.
bool embeds_all_up_to(const FiniteStructure& X, const ClassOracle& oracle, int n,
                      const EnumLimits& limits = {});

struct IntermediateReport {
  bool pass = true;
  std::uint32_t counterexample_mask = 0;
  int missing_rank = -1;
  std::uint64_t checks = 0;
};
// For every subset F with rank a and every b < a, some subset attains rank
// exactly b.
IntermediateReport check_intermediate_values(const FiniteStructure& X, const ClassOracle& oracle);

// Rank over a purely unary host: the minimum, over the 2^k color patterns, of
// the number of representatives outside F.
int unary_rank_check(const FiniteStructure& X, const ClassOracle& oracle, std::uint32_t F_mask);

struct NSearchResult {
  int target_rank = 0;
  int lower = 0;              // N(target) >= lower, witnessed
  int upper_theoretical = 0;  // |H_n|: containing all graphs of that size forces rank >= n
  bool conclusive = false;    // lower == upper_theoretical
  int scanned_max_size = 0;
  bool vacuous_at_stop = false;  // no scanned host embedded all graphs of size `lower`
  std::vector<std::pair<int, FiniteStructure>> witnesses;  // (N, host with rank < target)
};
// Empirical search for the minimal N such that every graph within the size
// cap containing all graphs of size N has rank >= target.
NSearchResult search_universality_number(int target_rank, int max_size,
                                         const EnumLimits& limits = {});

// |H_n| for the graph builder, computed arithmetically.
std::uint64_t graph_hn_size(int n);

}  // namespace rankfn
