#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lamsub/base_logic.hpp"
#include "lamsub/feature_logic.hpp"
#include "lamsub/formula.hpp"
#include "lamsub/prover.hpp"

namespace lamsub {

// A lexical type. `vars` and `constraints` are only used by layered
// grammars: every basic occurrence carries a layer variable and the entry
// may constrain those variables with feature terms.
struct LexicalEntry {
  Formula type;
  std::map<Occurrence, std::string> vars;
  std::vector<std::pair<std::string, FeatureTerm>> constraints;
};

struct Grammar {
  Regime regime = Regime::L;
  std::shared_ptr<const BaseLogic> base;
  std::vector<std::string> words;  // declaration order
  std::map<std::string, std::vector<LexicalEntry>> lexicon;
  std::set<std::string> conj_markers;
  std::optional<LexicalEntry> goal;
  bool layered = false;  // some entry carries annotations or constraints

  const Formula& sentence_type() const;
  std::vector<Formula> types_of(const std::string& word) const;
  bool knows(const std::string& word) const { return lexicon.contains(word) || conj_markers.contains(word); }
};

// Line-oriented grammar text:
//   regime NL|L|LP|NLP
//   base poset|prop|feature
//   atom <name>...          sub <b1> <b2>        (poset base)
//   lex <word> : <type> [| Var = <feature term>, ...]
//   conj <word>
//   goal <type>
// `#` starts a comment. Errors are ParseError carrying the line number.
Grammar parse_grammar(std::string_view text);
// Relative paths that do not exist are looked up in the directories listed
// in LAMSUB_GRAMMAR_PATH (colon separated).
Grammar load_grammar(const std::string& path);
std::string resolve_grammar_path(const std::string& path);

std::vector<std::string> split_words(std::string_view sentence);

// Lattice lifting of the base join/meet to same-shaped types.
std::optional<Formula> type_join(const Formula& a, const Formula& b, const BaseLogic& base);
std::optional<Formula> type_meet(const Formula& a, const Formula& b, const BaseLogic& base);

// All binary trees over `items`, left to right.
std::vector<GTerm> bracketings(const std::vector<GTerm>& items);

struct Coordination {
  std::size_t marker = 0;  // word index of the particle
  std::pair<std::size_t, std::size_t> left, right;  // word spans [begin, end)
  Formula type;
  ProofPtr left_proof, right_proof;
};

struct MembershipItem {
  std::size_t begin = 0, end = 0;  // word span
  Formula type;
};

struct MembershipReport {
  bool accepted = false;
  Regime regime = Regime::L;
  std::vector<std::string> words;
  std::vector<MembershipItem> assignment;  // witness, when accepted
  ProofPtr proof;
  std::vector<Coordination> coordinations;
};

// Throws DomainError for unknown words or an empty sentence, ConfigError
// when coordination is needed but the base has no lattice operations.
MembershipReport membership(const Grammar& g, const std::vector<std::string>& words);

// Coordination candidates for two conjuncts, each given by the types its
// span is known to have. Every kept type A is derivable from some type of
// each side.
std::vector<Formula> coordinate(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                const BaseLogic& base, Regime r);

std::string report_to_text(const MembershipReport& r);
nlohmann::json report_to_json(const MembershipReport& r);

// ---------------------------------------------------------------------------
// Compile-out to a family of grammars over an identity order.

// Preorder identifying only mutually entailing base formulae of `inner`.
class EquivalenceBase final : public BaseLogic {
 public:
  explicit EquivalenceBase(std::shared_ptr<const BaseLogic> inner) : inner_(std::move(inner)) {}
  std::string_view name() const override { return "identity"; }
  BasicType parse(std::string_view text) const override { return inner_->parse(text); }
  std::string render(const BasicType& b) const override { return inner_->render(b); }
  Verdict entails(const BasicType& a, const BasicType& b) const override {
    if (a == b) return Verdict::Entailed;
    return inner_->leq(a, b) && inner_->leq(b, a) ? Verdict::Entailed : Verdict::Blocked;
  }

 private:
  std::shared_ptr<const BaseLogic> inner_;
};

// Supertypes of `b` drawn from `universe`, one per equivalence class
// strictly above b, plus b itself.
std::vector<BasicType> supertypes_in(const BasicType& b, const std::vector<BasicType>& universe,
                                     const BaseLogic& base);

FormulaSet super_plus(const Formula& a, const std::vector<BasicType>& universe, const BaseLogic& base);
FormulaSet super_minus(const Formula& a, const std::vector<BasicType>& universe, const BaseLogic& base);

struct CompiledFamily {
  Regime regime = Regime::L;
  std::vector<BasicType> basics;  // the universe used for super sets
  std::map<std::string, std::vector<Formula>> lexicon;
  std::vector<Formula> start_types;
  std::shared_ptr<const BaseLogic> base;
};

// Universe: basic types of the lexicon and of the goal.
CompiledFamily compile_out(const Grammar& g);
// Index of the first start type deriving the string, if any.
std::optional<std::size_t> family_membership(const CompiledFamily& f, const std::vector<std::string>& words);

struct CompileCheck {
  std::size_t strings = 0;
  std::size_t accepted = 0;
  std::vector<std::string> mismatches;
};
// Every string over the lexicon's words of length 1..max_len.
CompileCheck check_compile_out(const Grammar& g, const CompiledFamily& f, std::size_t max_len);

// B is obtained from A by replacing negative basic occurrences by subtypes
// and positive ones by supertypes, all drawn from `universe`.
bool lemma12_oracle(const Formula& a, const Formula& b, const std::vector<BasicType>& universe,
                    const BaseLogic& base);

}  // namespace lamsub
