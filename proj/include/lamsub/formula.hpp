#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lamsub {

class BaseLogic;

// A basic category. The payload is the canonical text of a base-logic
// formula; its meaning belongs to whichever base logic is bound.
struct BasicType {
  std::string payload;

  friend bool operator==(const BasicType&, const BasicType&) = default;
  friend auto operator<=>(const BasicType&, const BasicType&) = default;
};

enum class Regime { NL, L, LP, NLP };

bool is_associative(Regime r);
bool is_commutative(Regime r);
std::string_view to_string(Regime r);
std::optional<Regime> regime_from_string(std::string_view s);

// Product-free Lambek type: a basic type, A/B (Over) or B\A (Under).
// Immutable; copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { Basic, Over, Under };

  static Formula basic(BasicType b);
  static Formula basic(std::string payload) { return basic(BasicType{std::move(payload)}); }
  // result/arg
  static Formula over(Formula result, Formula arg);
  // arg\result
  static Formula under(Formula arg, Formula result);

  Kind kind() const;
  bool is_basic() const { return kind() == Kind::Basic; }
  const BasicType& basic_type() const;
  const Formula& result() const;
  const Formula& arg() const;

  std::size_t connectives() const;
  // Fully parenthesised serialisation; equal keys iff structurally equal.
  const std::string& key() const;

  friend bool operator==(const Formula& a, const Formula& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    return a.key() <=> b.key();
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  BasicType basic;
  std::optional<Formula> result;
  std::optional<Formula> arg;
  std::size_t connectives;
  std::string key;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline std::size_t Formula::connectives() const { return node_->connectives; }
inline const std::string& Formula::key() const { return node_->key; }

using FormulaSet = std::set<Formula>;

// Structured antecedent built with the binary connective (written `,` in text).
class GTerm {
 public:
  static GTerm leaf(Formula f);
  static GTerm node(GTerm left, GTerm right);

  bool is_leaf() const;
  const Formula& formula() const;
  const GTerm& left() const;
  const GTerm& right() const;

  std::size_t leaf_count() const;
  std::size_t connectives() const;
  std::vector<Formula> leaves() const;
  // Fully bracketed serialisation of the literal tree.
  const std::string& key() const;

  friend bool operator==(const GTerm& a, const GTerm& b) { return a.key() == b.key(); }

 private:
  struct Node;
  explicit GTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct GTerm::Node {
  std::optional<Formula> formula;
  std::optional<GTerm> left;
  std::optional<GTerm> right;
  std::size_t leaves;
  std::size_t connectives;
  std::string key;
};

inline bool GTerm::is_leaf() const { return node_->formula.has_value(); }
inline std::size_t GTerm::leaf_count() const { return node_->leaves; }
inline std::size_t GTerm::connectives() const { return node_->connectives; }
inline const std::string& GTerm::key() const { return node_->key; }

// Left fold of a nonempty list of G-terms: ((t0, t1), t2) ...
GTerm fold_left(const std::vector<GTerm>& items);
GTerm fold_left(const std::vector<Formula>& items);

struct Sequent {
  GTerm antecedent;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

enum class Polarity : int { Negative = -1, Positive = 1 };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

enum class Step : std::uint8_t { Result, Arg, Left, Right };

// Path-based position inside a Formula (Result/Arg steps) or a GTerm
// (Left/Right steps).
struct Occurrence {
  std::vector<Step> path;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

// Path in the left fold of `count` items that addresses item `index`.
Occurrence fold_path(std::size_t count, std::size_t index);

const Formula& subformula_at(const Formula& root, const Occurrence& occ);
const GTerm& subterm_at(const GTerm& root, const Occurrence& occ);
GTerm replace_at(const GTerm& root, const Occurrence& occ, const GTerm& replacement);
Formula replace_at(const Formula& root, const Occurrence& occ, const Formula& replacement);

Polarity polarity_of(const Formula& root, const Occurrence& occ);

// Occurrences of basic types in `f`, left to right, with their polarities.
struct BasicOccurrence {
  Occurrence occ;
  BasicType type;
  Polarity polarity;
};
std::vector<BasicOccurrence> basic_occurrences(const Formula& f);

// Subtyping of complex types: covariant in results, contravariant in
// arguments, shape-preserving.
bool subtype(const Formula& a, const Formula& b, const BaseLogic& base);

// Representation of a G-term modulo the structural rules of a regime.
class CanonicalGTerm {
 public:
  Regime regime() const { return regime_; }
  // L and LP: the leaves (ordered for L, sorted for LP).
  const std::vector<Formula>& items() const { return items_; }
  // NL and NLP: the representative tree.
  const std::optional<GTerm>& tree() const { return tree_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const CanonicalGTerm& a, const CanonicalGTerm& b) {
    return a.regime_ == b.regime_ && a.key_ == b.key_;
  }

 private:
  friend CanonicalGTerm canonicalize(const GTerm& u, Regime r);
  Regime regime_ = Regime::NL;
  std::vector<Formula> items_;
  std::optional<GTerm> tree_;
  std::string key_;
};

CanonicalGTerm canonicalize(const GTerm& u, Regime r);

// Convenience: the canonical key of `u` under `r`.
std::string canonical_key(const GTerm& u, Regime r);

FormulaSet subformula_closure(const FormulaSet& fs);
FormulaSet subformula_closure(const std::vector<Formula>& fs);

std::set<BasicType> basic_types_of(const Formula& f);

}  // namespace lamsub
