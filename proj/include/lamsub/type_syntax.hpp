#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lamsub/formula.hpp"

namespace lamsub {

// Concrete type syntax:
//   `A/B/C` is `(A/B)/C`, `A\B\C` is `A\(B\C)`, `\` binds tighter than `/`;
//   bare identifiers are atomic basic types, `[...]` encloses base-logic text.
// When `base` is given, basic-type text is parsed (and canonicalised) by it.
Formula parse_formula(std::string_view text, const BaseLogic* base = nullptr);

// Same syntax with optional layer annotations `^Var` after basic types.
struct AnnotatedParse {
  Formula formula;
  std::map<Occurrence, std::string> annotations;
};
AnnotatedParse parse_annotated_formula(std::string_view text, const BaseLogic* base = nullptr);

// Antecedent items separated by `,`; `( ... , ... )` groups a sub-G-term.
// Flat lists longer than two are folded left under L/LP and rejected under
// NL/NLP, where the bracketing must be explicit.
GTerm parse_gterm(std::string_view text, const BaseLogic* base, Regime regime);

// `<antecedent> => <formula>` (`⇒` is accepted as well).
Sequent parse_sequent(std::string_view text, const BaseLogic* base, Regime regime);

std::string to_string(const Formula& f);
// Flat comma list under L/LP, bracketed tree under NL/NLP.
std::string to_string(const GTerm& t, Regime r);
// Literal tree with every binary node bracketed (top level included when
// composite); parses back to the same tree.
std::string to_bracketed_string(const GTerm& t);
std::string to_string(const Sequent& s, Regime r);

}  // namespace lamsub
