#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lamsub/base_logic.hpp"

namespace lamsub {

// Feature terms: x | a | top | bot | f:phi | exists X (phi) | phi & psi.
// Variables start with an upper-case letter, atoms do not.
class FeatureTerm {
 public:
  enum class Kind : std::uint8_t { Var, Atom, Top, Bottom, Feat, Exists, Conj };

  static FeatureTerm var(std::string name);
  static FeatureTerm atom(std::string name);
  static FeatureTerm top();
  static FeatureTerm bottom();
  static FeatureTerm feat(std::string feature, FeatureTerm body);
  static FeatureTerm exists(std::string var, FeatureTerm body);
  static FeatureTerm conj(FeatureTerm a, FeatureTerm b);

  Kind kind() const { return node_->kind; }
  // Variable, atom, feature or bound-variable name.
  const std::string& name() const { return node_->name; }
  // Body of Feat/Exists, left conjunct of Conj.
  const FeatureTerm& body() const { return node_->children->first; }
  const FeatureTerm& rhs() const { return *node_->children->second; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const std::pair<FeatureTerm, std::optional<FeatureTerm>>> children;
  };
  explicit FeatureTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

FeatureTerm parse_feature_term(std::string_view text);
std::string to_string(const FeatureTerm& t);

struct SimpleConstraint {
  enum class Kind : std::uint8_t { EqAtom, EqTop, EqBottom, EqFeat };
  Kind kind;
  std::string var;
  std::string label;   // atom for EqAtom, feature for EqFeat
  std::string target;  // EqFeat only

  friend bool operator==(const SimpleConstraint&, const SimpleConstraint&) = default;
  friend auto operator<=>(const SimpleConstraint&, const SimpleConstraint&) = default;
};

std::string to_string(const SimpleConstraint& c);

// exists bound... (conjunction of simple constraints), rooted at `root`.
struct SolvedForm {
  std::string root;
  std::vector<std::string> bound;
  std::vector<SimpleConstraint> constraints;
};

std::string to_string(const SolvedForm& s);

// Union-find constraint store over feature-graph nodes. Named nodes stand
// for free variables (layer variables in the double-layer extension);
// anonymous nodes come from feature arguments and existentials.
// Once a clash is detected the store stays inconsistent.
class FeatureGraph {
 public:
  using Node = std::uint32_t;

  Node named(const std::string& var);
  Node fresh();
  std::optional<Node> lookup(const std::string& var) const;

  // Conjoins `x = t`.
  bool add(Node x, const FeatureTerm& t);
  bool unify(Node a, Node b);
  bool add_atom(Node x, const std::string& atom);
  bool add_feature(Node x, const std::string& feature, Node target);

  bool consistent() const { return ok_; }
  Node find(Node n) const;
  const std::optional<std::string>& atom(Node n) const { return atom_[find(n)]; }
  const std::map<std::string, Node>& features(Node n) const { return feats_[find(n)]; }
  std::size_t size() const { return parent_.size(); }
  const std::map<std::string, Node>& names() const { return by_name_; }
  // Display name of n's class: the least variable name in it, else `prefix`
  // plus the class's creation rank.
  std::string display_name(Node n, std::string_view prefix = "y") const;

  // Classes reachable from `roots` (and from every named node), in order of
  // their least member.
  std::vector<Node> reachable_classes(const std::vector<Node>& roots) const;

  SolvedForm solved(Node root, std::string_view prefix = "y") const;

 private:
  Node make_node(std::optional<std::string> name);
  void fail() { ok_ = false; }

  mutable std::vector<Node> parent_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::optional<std::string>> atom_;
  std::vector<std::map<std::string, Node>> feats_;
  std::vector<std::optional<std::string>> name_;
  std::map<std::string, Node> by_name_;
  std::map<std::string, Node> atom_node_;
  bool ok_ = true;
};

// Normal-form translation of `x = t`; nullopt when inconsistent.
std::optional<SolvedForm> normalize(const std::string& x, const FeatureTerm& t,
                                    std::string_view prefix = "y");

struct EntailTrace {
  Verdict verdict;
  std::size_t steps = 0;        // rule applications
  std::size_t step_bound = 0;   // |guard| * (|context| + 1)
  std::vector<SimpleConstraint> residual;  // guard after simplification
};

// Three-way entailment check by guard simplification. Both inputs must be
// consistent (DomainError otherwise).
Verdict entail_check(const FeatureTerm& context, const FeatureTerm& guard);
EntailTrace entail_check_traced(const FeatureTerm& context, const FeatureTerm& guard);

// Unification: conjunction, normalised; nullopt when inconsistent.
std::optional<FeatureTerm> ft_meet(const FeatureTerm& a, const FeatureTerm& b);
// Generalisation: the most specific term entailed by both. Free variables
// are not preserved.
FeatureTerm ft_join(const FeatureTerm& a, const FeatureTerm& b);

// Reads the graph below `root` back as a term.
FeatureTerm term_of(const FeatureGraph& g, FeatureGraph::Node root);

// Independent entailment oracle: a root-preserving homomorphism from the
// graph of `guard` into the graph of `context`.
bool simulation_oracle(const FeatureTerm& context, const FeatureTerm& guard);

class FeatureBase final : public BaseLogic {
 public:
  std::string_view name() const override { return "feature"; }
  BasicType parse(std::string_view text) const override;
  // An inconsistent left side denotes the empty set and entails anything;
  // a consistent one disentails an inconsistent right side.
  Verdict entails(const BasicType& a, const BasicType& b) const override;
  bool consistent(const BasicType& b) const override;
  bool has_lattice() const override { return true; }
  std::optional<BasicType> meet(const BasicType& a, const BasicType& b) const override;
  std::optional<BasicType> join(const BasicType& a, const BasicType& b) const override;

 private:
  PairCache<Verdict> cache_;
};

}  // namespace lamsub
