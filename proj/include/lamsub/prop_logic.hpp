#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lamsub/base_logic.hpp"

namespace lamsub {

// Negation-free propositional formula over atoms with & and |.
class PropFormula {
 public:
  enum class Kind : std::uint8_t { Atom, And, Or };

  static PropFormula atom(std::string name);
  static PropFormula conj(PropFormula a, PropFormula b);
  static PropFormula disj(PropFormula a, PropFormula b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const PropFormula& lhs() const { return node_->children->first; }
  const PropFormula& rhs() const { return node_->children->second; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const std::pair<PropFormula, PropFormula>> children;
  };
  explicit PropFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// `&` binds tighter than `|`; both associate to the left.
PropFormula parse_prop(std::string_view text);
std::string to_string(const PropFormula& p);

std::vector<std::string> atoms_of(const PropFormula& p);

// Entailed iff every assignment satisfying `a` satisfies `b`; Blocked
// otherwise. Never Disentailed: every formula of the fragment is satisfiable.
Verdict prop_entails(const PropFormula& a, const PropFormula& b);

PropFormula prop_meet(const PropFormula& a, const PropFormula& b);
PropFormula prop_join(const PropFormula& a, const PropFormula& b);

class PropBase final : public BaseLogic {
 public:
  std::string_view name() const override { return "prop"; }
  BasicType parse(std::string_view text) const override;
  Verdict entails(const BasicType& a, const BasicType& b) const override;
  bool has_lattice() const override { return true; }
  std::optional<BasicType> meet(const BasicType& a, const BasicType& b) const override;
  std::optional<BasicType> join(const BasicType& a, const BasicType& b) const override;

 private:
  PairCache<Verdict> cache_;
};

}  // namespace lamsub
