#pragma once

#include <memory>
#include <string>
#include <vector>

namespace rankfn {

struct RelationDecl {
  std::string name;
  int arity = 2;  // always >= 2; arity-1 symbols live in `unaries`
};

// A finite relational language: relation symbols of arity >= 2 plus a list of
// unary predicate names.  Names are unique across both lists.
class RelationalSignature {
 public:
  RelationalSignature(std::vector<RelationDecl> relations, std::vector<std::string> unaries);

  const std::vector<RelationDecl>& relations() const { return relations_; }
  const std::vector<std::string>& unaries() const { return unaries_; }
  int num_relations() const { return static_cast<int>(relations_.size()); }
  int num_unaries() const { return static_cast<int>(unaries_.size()); }
  int arity(int rel) const { return relations_[rel].arity; }
  int relation_index(const std::string& name) const;  // -1 if absent
  int unary_index(const std::string& name) const;     // -1 if absent
  bool all_binary() const;
  int max_arity() const;

  bool operator==(const RelationalSignature& o) const;
  bool operator!=(const RelationalSignature& o) const { return !(*this == o); }

  // Common languages.
  static std::shared_ptr<const RelationalSignature> graph();         // one symmetric edge relation E
  static std::shared_ptr<const RelationalSignature> digraph();       // one arc relation A
  static std::shared_ptr<const RelationalSignature> tournament();    // one arc relation A
  static std::shared_ptr<const RelationalSignature> linear_order();  // one order relation L
  static std::shared_ptr<const RelationalSignature> unary_only(int k);
  static std::shared_ptr<const RelationalSignature> uniform_relation(int arity);  // one relation R

 private:
  std::vector<RelationDecl> relations_;
  std::vector<std::string> unaries_;
};

}  // namespace rankfn
