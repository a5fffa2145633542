#include "rankfn/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rankfn/errors.hpp"
#include "rankfn/extension.hpp"
#include "rankfn/structure_algo.hpp"

namespace rankfn {

namespace {

// Representatives of size n+1 from representatives of size n: every iso class
// arises as a representative extended by some one-point type.
std::vector<FiniteStructure> augment(const std::vector<FiniteStructure>& reps,
                                     const ClassOracle& oracle, const EnumLimits& limits) {
  std::vector<FiniteStructure> out;
  std::set<std::string> seen;
  for (const FiniteStructure& rep : reps) {
    for (const ExtensionType& t : enumerate_extension_types(rep, oracle, limits.type_budget)) {
      FiniteStructure cand = apply_type(rep, t);
      if (!oracle.membership(cand)) continue;
      std::string key = canonical_key(cand);
      if (seen.insert(std::move(key)).second) out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<FiniteStructure>> enumerate_up_to(
    std::shared_ptr<const RelationalSignature> sig, const ClassOracle& oracle, int max_n,
    bool up_to_iso, const EnumLimits& limits) {
  if (max_n > limits.max_size) {
    throw ResourceError("structure enumeration of size " + std::to_string(max_n) +
                        " exceeds the cap of " + std::to_string(limits.max_size));
  }
  std::vector<std::vector<FiniteStructure>> by_size;
  FiniteStructure empty(sig, 0);
  if (!oracle.membership(empty)) throw InputError("oracle rejects the empty structure");
  by_size.push_back({empty});
  for (int n = 1; n <= max_n; ++n) {
    by_size.push_back(augment(by_size.back(), oracle, limits));
  }
  if (up_to_iso) return by_size;

  // Labeled structures: expand each representative's relabeling orbit.
  if (max_n > 6) throw ResourceError("labeled enumeration capped at 6 vertices");
  std::vector<std::vector<FiniteStructure>> labeled;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<FiniteStructure> all;
    std::set<std::string> seen;
    std::vector<int> perm(n);
    for (const FiniteStructure& rep : by_size[n]) {
      std::iota(perm.begin(), perm.end(), 0);
      do {
        FiniteStructure cand = rep.relabel(perm);
        std::string key = encode_structure(cand);
        if (seen.insert(std::move(key)).second) all.push_back(std::move(cand));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    labeled.push_back(std::move(all));
  }
  return labeled;
}

std::vector<FiniteStructure> enumerate_structures(std::shared_ptr<const RelationalSignature> sig,
                                                  const ClassOracle& oracle, int n,
                                                  bool up_to_iso, const EnumLimits& limits) {
  auto by_size = enumerate_up_to(std::move(sig), oracle, n, up_to_iso, limits);
  return std::move(by_size[n]);
}

}  // namespace rankfn
