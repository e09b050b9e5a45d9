#include "lamsub/prop_logic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>

#include "lamsub/error.hpp"

namespace lamsub {

PropFormula PropFormula::atom(std::string name) {
  return PropFormula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr}));
}

PropFormula PropFormula::conj(PropFormula a, PropFormula b) {
  return PropFormula(std::make_shared<const Node>(
      Node{Kind::And, {}, std::make_shared<const std::pair<PropFormula, PropFormula>>(a, b)}));
}

PropFormula PropFormula::disj(PropFormula a, PropFormula b) {
  return PropFormula(std::make_shared<const Node>(
      Node{Kind::Or, {}, std::make_shared<const std::pair<PropFormula, PropFormula>>(a, b)}));
}

namespace {

class PropParser {
 public:
  explicit PropParser(std::string_view text) : text_(text) {}

  PropFormula parse() {
    PropFormula p = disjunction();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  PropFormula disjunction() {
    PropFormula lhs = conjunction();
    while (accept('|')) lhs = PropFormula::disj(lhs, conjunction());
    return lhs;
  }

  PropFormula conjunction() {
    PropFormula lhs = primary();
    while (accept('&')) lhs = PropFormula::conj(lhs, primary());
    return lhs;
  }

  PropFormula primary() {
    skip_ws();
    if (accept('(')) {
      PropFormula inner = disjunction();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected propositional atom");
    return PropFormula::atom(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                         std::string(text_) + "'",
                     pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_atoms(const PropFormula& p, std::vector<std::string>& out) {
  if (p.kind() == PropFormula::Kind::Atom) {
    out.push_back(p.name());
    return;
  }
  collect_atoms(p.lhs(), out);
  collect_atoms(p.rhs(), out);
}

bool eval(const PropFormula& p, const std::map<std::string, std::size_t>& index,
          std::uint64_t assignment) {
  switch (p.kind()) {
    case PropFormula::Kind::Atom: return (assignment >> index.at(p.name())) & 1U;
    case PropFormula::Kind::And: return eval(p.lhs(), index, assignment) && eval(p.rhs(), index, assignment);
    case PropFormula::Kind::Or: return eval(p.lhs(), index, assignment) || eval(p.rhs(), index, assignment);
  }
  return false;
}

}  // namespace

PropFormula parse_prop(std::string_view text) { return PropParser(text).parse(); }

std::string to_string(const PropFormula& p) {
  switch (p.kind()) {
    case PropFormula::Kind::Atom: return p.name();
    case PropFormula::Kind::And: {
      auto side = [](const PropFormula& q, bool right) {
        bool wrap = q.kind() == PropFormula::Kind::Or || (right && q.kind() == PropFormula::Kind::And);
        return wrap ? "(" + to_string(q) + ")" : to_string(q);
      };
      return side(p.lhs(), false) + "&" + side(p.rhs(), true);
    }
    case PropFormula::Kind::Or: {
      std::string r = to_string(p.rhs());
      if (p.rhs().kind() == PropFormula::Kind::Or) r = "(" + r + ")";
      return to_string(p.lhs()) + "|" + r;
    }
  }
  return {};
}

std::vector<std::string> atoms_of(const PropFormula& p) {
  std::vector<std::string> out;
  collect_atoms(p, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict prop_entails(const PropFormula& a, const PropFormula& b) {
  std::vector<std::string> atoms = atoms_of(PropFormula::conj(a, b));
  if (atoms.size() > 24) throw DomainError("too many propositional atoms for enumeration");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index.emplace(atoms[i], i);
  const std::uint64_t total = std::uint64_t{1} << atoms.size();
  for (std::uint64_t v = 0; v < total; ++v) {
    if (eval(a, index, v) && !eval(b, index, v)) return Verdict::Blocked;
  }
  return Verdict::Entailed;
}

PropFormula prop_meet(const PropFormula& a, const PropFormula& b) { return PropFormula::conj(a, b); }
PropFormula prop_join(const PropFormula& a, const PropFormula& b) { return PropFormula::disj(a, b); }

BasicType PropBase::parse(std::string_view text) const {
  return BasicType{to_string(parse_prop(text))};
}

Verdict PropBase::entails(const BasicType& a, const BasicType& b) const {
  if (a == b) return Verdict::Entailed;
  if (auto hit = cache_.find(a.payload, b.payload)) return *hit;
  Verdict v = prop_entails(parse_prop(a.payload), parse_prop(b.payload));
  cache_.store(a.payload, b.payload, v);
  return v;
}

std::optional<BasicType> PropBase::meet(const BasicType& a, const BasicType& b) const {
  return BasicType{to_string(prop_meet(parse_prop(a.payload), parse_prop(b.payload)))};
}

std::optional<BasicType> PropBase::join(const BasicType& a, const BasicType& b) const {
  return BasicType{to_string(prop_join(parse_prop(a.payload), parse_prop(b.payload)))};
}

}  // namespace lamsub
