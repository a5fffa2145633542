#include "rankfn/signature.hpp"

#include <algorithm>
#include <set>

#include "rankfn/errors.hpp"

namespace rankfn {

RelationalSignature::RelationalSignature(std::vector<RelationDecl> relations,
                                         std::vector<std::string> unaries)
    : relations_(std::move(relations)), unaries_(std::move(unaries)) {
  std::set<std::string> seen;
  for (const RelationDecl& r : relations_) {
    if (r.arity < 2) throw InputError("relation '" + r.name + "' must have arity >= 2");
    if (!seen.insert(r.name).second) throw InputError("duplicate symbol name '" + r.name + "'");
  }
  for (const std::string& u : unaries_) {
    if (!seen.insert(u).second) throw InputError("duplicate symbol name '" + u + "'");
  }
}

int RelationalSignature::relation_index(const std::string& name) const {
  for (int i = 0; i < num_relations(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return -1;
}

int RelationalSignature::unary_index(const std::string& name) const {
  for (int i = 0; i < num_unaries(); ++i) {
    if (unaries_[i] == name) return i;
  }
  return -1;
}

bool RelationalSignature::all_binary() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const RelationDecl& r) { return r.arity == 2; });
}

int RelationalSignature::max_arity() const {
  int m = 1;
  for (const RelationDecl& r : relations_) m = std::max(m, r.arity);
  return m;
}

bool RelationalSignature::operator==(const RelationalSignature& o) const {
  if (unaries_ != o.unaries_ || relations_.size() != o.relations_.size()) return false;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name != o.relations_[i].name || relations_[i].arity != o.relations_[i].arity)
      return false;
  }
  return true;
}

std::shared_ptr<const RelationalSignature> RelationalSignature::graph() {
  static auto sig = std::make_shared<const RelationalSignature>(
      std::vector<RelationDecl>{{"E", 2}}, std::vector<std::string>{});
  return sig;
}

std::shared_ptr<const RelationalSignature> RelationalSignature::digraph() {
  static auto sig = std::make_shared<const RelationalSignature>(
      std::vector<RelationDecl>{{"A", 2}}, std::vector<std::string>{});
  return sig;
}

std::shared_ptr<const RelationalSignature> RelationalSignature::tournament() {
  return digraph();
}

std::shared_ptr<const RelationalSignature> RelationalSignature::linear_order() {
  static auto sig = std::make_shared<const RelationalSignature>(
      std::vector<RelationDecl>{{"L", 2}}, std::vector<std::string>{});
  return sig;
}

std::shared_ptr<const RelationalSignature> RelationalSignature::unary_only(int k) {
  std::vector<std::string> unaries;
  for (int i = 0; i < k; ++i) unaries.push_back("U" + std::to_string(i));
  return std::make_shared<const RelationalSignature>(std::vector<RelationDecl>{},
                                                     std::move(unaries));
}

std::shared_ptr<const RelationalSignature> RelationalSignature::uniform_relation(int arity) {
  return std::make_shared<const RelationalSignature>(
      std::vector<RelationDecl>{{"R", arity}}, std::vector<std::string>{});
}

}  // namespace rankfn
