#include "lamsub/type_syntax.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "lamsub/base_logic.hpp"
#include "lamsub/error.hpp"

namespace lamsub {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Annotation tree parallel to a parsed formula.
struct Ann {
  std::optional<std::string> var;
  std::shared_ptr<Ann> result;
  std::shared_ptr<Ann> arg;
};

struct Parsed {
  Formula formula;
  std::shared_ptr<Ann> ann;
};

class TypeParser {
 public:
  TypeParser(std::string_view text, const BaseLogic* base, bool allow_annotations)
      : text_(text), base_(base), allow_annotations_(allow_annotations) {}

  Parsed formula() {
    Parsed lhs = under_expr();
    for (;;) {
      skip_ws();
      if (!peek('/')) return lhs;
      ++pos_;
      Parsed rhs = under_expr();
      lhs = Parsed{Formula::over(lhs.formula, rhs.formula),
                   std::make_shared<Ann>(Ann{std::nullopt, lhs.ann, rhs.ann})};
    }
  }

  Sequent sequent(Regime regime) {
    GTerm ant = gterm(regime);
    skip_ws();
    if (text_.substr(pos_, 2) == "=>") {
      pos_ += 2;
    } else if (text_.substr(pos_, 3) == "⇒") {
      pos_ += 3;
    } else {
      fail("expected '=>'");
    }
    Parsed succ = formula();
    expect_end();
    return Sequent{ant, succ.formula};
  }

  GTerm gterm(Regime regime) {
    std::vector<GTerm> items;
    std::size_t start = pos_;
    items.push_back(gitem(regime));
    for (;;) {
      skip_ws();
      if (!peek(',')) break;
      ++pos_;
      items.push_back(gitem(regime));
    }
    if (items.size() > 2 && !is_associative(regime)) {
      pos_ = start;
      fail("ambiguous bracketing: " + std::string(to_string(regime)) +
           " needs explicit ( , ) grouping");
    }
    return fold_left(items);
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }

 private:
  GTerm gitem(Regime regime) {
    skip_ws();
    if (peek('(') && group_has_comma()) {
      ++pos_;
      GTerm inner = gterm(regime);
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    return GTerm::leaf(formula().formula);
  }

  // At '(' : does the matching group contain a comma at its own depth?
  bool group_has_comma() const {
    int depth = 0;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      char c = text_[i];
      if (c == '(' || c == '[') {
        ++depth;
      } else if (c == ')' || c == ']') {
        if (--depth == 0) return false;
      } else if (c == ',' && depth == 1) {
        return true;
      }
    }
    return false;
  }

  Parsed under_expr() {
    Parsed lhs = primary();
    skip_ws();
    if (!peek('\\')) return lhs;
    ++pos_;
    Parsed rhs = under_expr();
    return Parsed{Formula::under(lhs.formula, rhs.formula),
                  std::make_shared<Ann>(Ann{std::nullopt, rhs.ann, lhs.ann})};
  }

  Parsed primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of type");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Parsed inner = formula();
      skip_ws();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    BasicType b;
    if (c == '[') {
      std::size_t open = pos_;
      int depth = 0;
      std::size_t i = pos_;
      for (; i < text_.size(); ++i) {
        if (text_[i] == '[') ++depth;
        if (text_[i] == ']' && --depth == 0) break;
      }
      if (i >= text_.size()) fail("unterminated '['");
      std::string_view body = trim(text_.substr(open + 1, i - open - 1));
      if (body.empty()) fail("empty basic type");
      b = make_basic(body, open);
      pos_ = i + 1;
    } else if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      b = make_basic(text_.substr(start, pos_ - start), start);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    auto ann = std::make_shared<Ann>();
    skip_ws();
    if (peek('^')) {
      if (!allow_annotations_) fail("layer annotation not allowed here");
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail("expected layer variable");
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      ann->var = std::string(text_.substr(start, pos_ - start));
    }
    return Parsed{Formula::basic(std::move(b)), ann};
  }

  BasicType make_basic(std::string_view body, std::size_t at) const {
    if (!base_) return BasicType{std::string(body)};
    try {
      return base_->parse(body);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (in basic type at column " +
                           std::to_string(at + 1) + ")",
                       at + 1);
    } catch (const DomainError& e) {
      throw ParseError(std::string(e.what()) + " (at column " + std::to_string(at + 1) + ")",
                       at + 1);
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::string_view text_;
  const BaseLogic* base_;
  bool allow_annotations_;
  std::size_t pos_ = 0;
};

void collect_annotations(const Formula& f, const Ann& a, Occurrence& at,
                         std::map<Occurrence, std::string>& out) {
  if (f.is_basic()) {
    if (a.var) out.emplace(at, *a.var);
    return;
  }
  at.path.push_back(Step::Result);
  collect_annotations(f.result(), *a.result, at, out);
  at.path.back() = Step::Arg;
  collect_annotations(f.arg(), *a.arg, at, out);
  at.path.pop_back();
}

}  // namespace

Formula parse_formula(std::string_view text, const BaseLogic* base) {
  TypeParser p(text, base, false);
  Parsed r = p.formula();
  p.expect_end();
  return r.formula;
}

AnnotatedParse parse_annotated_formula(std::string_view text, const BaseLogic* base) {
  TypeParser p(text, base, true);
  Parsed r = p.formula();
  p.expect_end();
  AnnotatedParse out{r.formula, {}};
  Occurrence at;
  collect_annotations(r.formula, *r.ann, at, out.annotations);
  return out;
}

GTerm parse_gterm(std::string_view text, const BaseLogic* base, Regime regime) {
  TypeParser p(text, base, false);
  GTerm t = p.gterm(regime);
  p.expect_end();
  return t;
}

Sequent parse_sequent(std::string_view text, const BaseLogic* base, Regime regime) {
  TypeParser p(text, base, false);
  return p.sequent(regime);
}

std::string to_string(const Formula& f) {
  if (f.is_basic()) return f.key();
  const Formula& r = f.result();
  const Formula& a = f.arg();
  auto paren = [](const Formula& g) { return g.is_basic() ? to_string(g) : "(" + to_string(g) + ")"; };
  if (f.kind() == Formula::Kind::Over) return to_string(r) + "/" + paren(a);
  std::string res = r.kind() == Formula::Kind::Over ? "(" + to_string(r) + ")" : to_string(r);
  return paren(a) + "\\" + res;
}

namespace {

std::string nested(const GTerm& t) {
  if (t.is_leaf()) return to_string(t.formula());
  return "(" + nested(t.left()) + ", " + nested(t.right()) + ")";
}

}  // namespace

std::string to_bracketed_string(const GTerm& t) { return nested(t); }

std::string to_string(const GTerm& t, Regime r) {
  if (!is_associative(r)) {
    if (t.is_leaf()) return to_string(t.formula());
    return nested(t.left()) + ", " + nested(t.right());
  }
  std::string out;
  for (const auto& f : t.leaves()) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out;
}

std::string to_string(const Sequent& s, Regime r) {
  return to_string(s.antecedent, r) + " ⇒ " + to_string(s.succedent);
}

}  // namespace lamsub
