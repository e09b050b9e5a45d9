#include "lamsub/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "lamsub/error.hpp"
#include "lamsub/prop_logic.hpp"
#include "lamsub/type_syntax.hpp"

namespace lamsub {

const Formula& Grammar::sentence_type() const {
  if (!goal) throw ConfigError("grammar has no goal type");
  return goal->type;
}

std::vector<Formula> Grammar::types_of(const std::string& word) const {
  auto it = lexicon.find(word);
  if (it == lexicon.end()) throw DomainError("unknown word '" + word + "'");
  std::vector<Formula> out;
  for (const auto& e : it->second) out.push_back(e.type);
  return out;
}

// ---------------------------------------------------------------------------
// Grammar files

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// Position of the first `c` outside brackets and parentheses.
std::size_t find_top_level(std::string_view s, char c) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '(') ++depth;
    if (s[i] == ']' || s[i] == ')') --depth;
    if (depth == 0 && s[i] == c) return i;
  }
  return std::string_view::npos;
}

std::vector<std::string> split_top_level(std::string_view s, char c) {
  std::vector<std::string> out;
  for (;;) {
    std::size_t at = find_top_level(s, c);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

struct Deferred {
  std::string keyword;
  std::string rest;
  std::size_t line;
};

LexicalEntry parse_entry(const std::string& type_text, const std::string& constraint_text,
                         const BaseLogic& base, std::size_t line, bool& layered) {
  AnnotatedParse ap = [&] {
    try {
      return parse_annotated_formula(type_text, &base);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (line " + std::to_string(line) + ")", e.column(), line);
    }
  }();
  LexicalEntry e{ap.formula, std::move(ap.annotations), {}};
  if (!e.vars.empty()) layered = true;
  if (!trim(constraint_text).empty()) {
    layered = true;
    for (const auto& part : split_top_level(constraint_text, ',')) {
      std::size_t eq = part.find('=');
      std::string var = trim(std::string_view(part).substr(0, eq));
      if (eq == std::string::npos || var.empty() || !std::isupper(static_cast<unsigned char>(var[0])))
        throw ParseError("expected 'Var = term' in constraint '" + part + "' (line " + std::to_string(line) + ")",
                         1, line);
      try {
        e.constraints.emplace_back(var, parse_feature_term(part.substr(eq + 1)));
      } catch (const ParseError& err) {
        throw ParseError(std::string(err.what()) + " (line " + std::to_string(line) + ")", err.column(), line);
      }
    }
  }
  return e;
}

// Layer variables for every basic occurrence: unannotated ones get names
// that cannot clash with user variables.
void complete_vars(LexicalEntry& e) {
  std::size_t k = 0;
  for (const auto& occ : basic_occurrences(e.type))
    if (!e.vars.contains(occ.occ)) e.vars.emplace(occ.occ, "_" + std::to_string(k++));
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  std::string base_kind;
  std::vector<std::string> atoms;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<Deferred> deferred;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string kw;
    if (!(words >> kw)) continue;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    if (kw == "regime") {
      auto r = regime_from_string(rest);
      if (!r) throw ParseError("unknown regime '" + rest + "' (line " + std::to_string(lineno) + ")", 1, lineno);
      g.regime = *r;
    } else if (kw == "base") {
      if (rest != "poset" && rest != "prop" && rest != "feature")
        throw ParseError("unknown base logic '" + rest + "' (line " + std::to_string(lineno) + ")", 1, lineno);
      base_kind = rest;
    } else if (kw == "atom") {
      std::istringstream names(rest);
      std::string a;
      while (names >> a) atoms.push_back(a);
    } else if (kw == "sub") {
      std::istringstream names(rest);
      std::string lo, hi, extra;
      if (!(names >> lo >> hi) || (names >> extra))
        throw ParseError("expected 'sub <b1> <b2>' (line " + std::to_string(lineno) + ")", 1, lineno);
      edges.emplace_back(lo, hi);
    } else if (kw == "lex" || kw == "conj" || kw == "goal") {
      deferred.push_back({kw, rest, lineno});
    } else {
      throw ParseError("unknown directive '" + kw + "' (line " + std::to_string(lineno) + ")", 1, lineno);
    }
  }

  if (base_kind.empty()) base_kind = "poset";
  if (base_kind == "poset") {
    try {
      g.base = std::make_shared<PosetBase>(atoms, edges);
    } catch (const DomainError& e) {
      throw ParseError(std::string("poset declaration: ") + e.what(), 1, 0);
    }
  } else if (base_kind == "prop") {
    g.base = std::make_shared<PropBase>();
  } else {
    g.base = std::make_shared<FeatureBase>();
  }

  for (const auto& d : deferred) {
    const std::string at = " (line " + std::to_string(d.line) + ")";
    if (d.keyword == "conj") {
      if (d.rest.empty() || d.rest.find(' ') != std::string::npos)
        throw ParseError("expected 'conj <word>'" + at, 1, d.line);
      if (g.lexicon.contains(d.rest)) throw ParseError("'" + d.rest + "' is both typed and a conjunction" + at, 1, d.line);
      if (g.conj_markers.insert(d.rest).second) g.words.push_back(d.rest);
    } else if (d.keyword == "lex") {
      std::size_t colon = d.rest.find(':');
      if (colon == std::string::npos) throw ParseError("expected 'lex <word> : <type>'" + at, 1, d.line);
      std::string word = trim(std::string_view(d.rest).substr(0, colon));
      if (word.empty() || word.find(' ') != std::string::npos)
        throw ParseError("bad word '" + word + "'" + at, 1, d.line);
      if (g.conj_markers.contains(word)) throw ParseError("'" + word + "' is both typed and a conjunction" + at, 1, d.line);
      std::string body = d.rest.substr(colon + 1);
      std::size_t bar = find_top_level(body, '|');
      std::string type_text = body.substr(0, bar);
      std::string constraint_text = bar == std::string::npos ? "" : body.substr(bar + 1);
      LexicalEntry e = parse_entry(type_text, constraint_text, *g.base, d.line, g.layered);
      if (!g.lexicon.contains(word)) g.words.push_back(word);
      g.lexicon[word].push_back(std::move(e));
    } else {
      if (g.goal) throw ParseError("duplicate goal" + at, 1, d.line);
      std::size_t bar = find_top_level(d.rest, '|');
      g.goal = parse_entry(d.rest.substr(0, bar), bar == std::string::npos ? "" : d.rest.substr(bar + 1),
                           *g.base, d.line, g.layered);
    }
  }
  if (!g.goal) throw ParseError("grammar has no 'goal' line", 1, lineno);
  if (g.layered) {
    if (g.base->name() != "feature") throw ParseError("layer annotations need 'base feature'", 1, 0);
    for (auto& [w, entries] : g.lexicon)
      for (auto& e : entries) complete_vars(e);
    complete_vars(*g.goal);
  }
  return g;
}

std::string resolve_grammar_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path) || fs::path(path).is_absolute()) return path;
  if (const char* env = std::getenv("LAMSUB_GRAMMAR_PATH")) {
    std::string dirs = env;
    std::size_t start = 0;
    while (start <= dirs.size()) {
      std::size_t end = dirs.find(':', start);
      if (end == std::string::npos) end = dirs.size();
      fs::path candidate = fs::path(dirs.substr(start, end - start)) / path;
      if (end > start && fs::exists(candidate)) return candidate.string();
      start = end + 1;
    }
  }
  return path;
}

Grammar load_grammar(const std::string& path) {
  std::string resolved = resolve_grammar_path(path);
  std::ifstream in(resolved);
  if (!in) throw ParseError("cannot read grammar file '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_grammar(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(resolved + ": " + e.what(), e.column(), e.line());
  }
}

std::vector<std::string> split_words(std::string_view sentence) {
  std::istringstream in{std::string(sentence)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------------
// Lattice lifting

std::optional<Formula> type_join(const Formula& a, const Formula& b, const BaseLogic& base) {
  if (a == b) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.is_basic()) {
    auto j = base.join(a.basic_type(), b.basic_type());
    if (!j) return std::nullopt;
    return Formula::basic(*j);
  }
  auto r = type_join(a.result(), b.result(), base);
  auto g = type_meet(a.arg(), b.arg(), base);
  if (!r || !g) return std::nullopt;
  return a.kind() == Formula::Kind::Over ? Formula::over(*r, *g) : Formula::under(*g, *r);
}

std::optional<Formula> type_meet(const Formula& a, const Formula& b, const BaseLogic& base) {
  if (a == b) return a;
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.is_basic()) {
    auto m = base.meet(a.basic_type(), b.basic_type());
    if (!m) return std::nullopt;
    return Formula::basic(*m);
  }
  auto r = type_meet(a.result(), b.result(), base);
  auto g = type_join(a.arg(), b.arg(), base);
  if (!r || !g) return std::nullopt;
  return a.kind() == Formula::Kind::Over ? Formula::over(*r, *g) : Formula::under(*g, *r);
}

std::vector<GTerm> bracketings(const std::vector<GTerm>& items) {
  if (items.size() == 1) return items;
  std::vector<GTerm> out;
  for (std::size_t cut = 1; cut < items.size(); ++cut) {
    auto lefts = bracketings({items.begin(), items.begin() + static_cast<std::ptrdiff_t>(cut)});
    auto rights = bracketings({items.begin() + static_cast<std::ptrdiff_t>(cut), items.end()});
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back(GTerm::node(l, r));
  }
  return out;
}

namespace {

std::vector<Formula> join_candidates(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                     const BaseLogic& base) {
  if (!base.has_lattice())
    throw ConfigError("coordination needs join and meet, which base logic '" + std::string(base.name()) +
                      "' does not provide");
  std::vector<Formula> out;
  for (const auto& b : left)
    for (const auto& c : right)
      if (auto a = type_join(b, c, base); a && std::find(out.begin(), out.end(), *a) == out.end())
        out.push_back(*a);
  return out;
}

// Calls visit(choice) for every element of the Cartesian product of `sets`
// until it returns true.
template <typename T>
bool for_each_choice(const std::vector<std::vector<T>>& sets, const std::function<bool(const std::vector<T>&)>& visit) {
  for (const auto& s : sets)
    if (s.empty()) return false;
  std::vector<std::size_t> idx(sets.size(), 0);
  std::vector<T> choice;
  for (;;) {
    choice.clear();
    for (std::size_t i = 0; i < sets.size(); ++i) choice.push_back(sets[i][idx[i]]);
    if (visit(choice)) return true;
    std::size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sets[k].size()) break;
      idx[k] = 0;
      if (k == 0) return false;
    }
    if (sets.empty()) return false;
  }
}

struct Slot {
  std::size_t begin, end;
  std::vector<Formula> types;
  bool conj = false;
};

struct SpanResult {
  ProofPtr proof;
  std::vector<Formula> assignment;
};

class MembershipSearch {
 public:
  MembershipSearch(const Grammar& g, std::vector<std::string> words)
      : g_(g), prover_(*g.base, SearchConfig{g.regime, false, 0, true}) {
    report_.regime = g.regime;
    report_.words = std::move(words);
    std::vector<Formula> all{g.sentence_type()};
    for (const auto& [w, entries] : g.lexicon)
      for (const auto& e : entries) all.push_back(e.type);
    FormulaSet c = subformula_closure(all);
    closure_.assign(c.begin(), c.end());
  }

  MembershipReport run() {
    if (report_.words.empty()) throw DomainError("empty sentence");
    std::vector<Slot> slots;
    for (std::size_t i = 0; i < report_.words.size(); ++i) {
      const auto& w = report_.words[i];
      if (!g_.knows(w)) throw DomainError("unknown word '" + w + "'");
      if (g_.conj_markers.contains(w)) {
        slots.push_back({i, i + 1, {}, true});
      } else {
        slots.push_back({i, i + 1, g_.types_of(w), false});
      }
    }
    report_.accepted = resolve(slots);
    if (!report_.accepted) report_.coordinations.clear();
    return report_;
  }

 private:
  static std::string slots_key(const std::vector<Slot>& slots) {
    std::string k;
    for (const auto& s : slots) {
      k += std::to_string(s.begin) + "-" + std::to_string(s.end) + (s.conj ? "c" : "") + "{";
      for (const auto& t : s.types) k += t.key() + ";";
      k += "}";
    }
    return k;
  }

  bool resolve(const std::vector<Slot>& slots) {
    std::string key = slots_key(slots);
    if (failed_.contains(key)) return false;
    std::vector<std::size_t> markers;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].conj) markers.push_back(i);
    if (markers.empty()) {
      const SpanResult& r = span(slots, g_.sentence_type());
      if (!r.proof) {
        failed_.insert(key);
        return false;
      }
      report_.proof = r.proof;
      report_.assignment.clear();
      for (std::size_t i = 0; i < slots.size(); ++i)
        report_.assignment.push_back({slots[i].begin, slots[i].end, r.assignment[i]});
      return true;
    }
    // Innermost first: a window never spans an unresolved particle.
    for (std::size_t m : markers) {
      for (std::size_t k = m; k-- > 0 && !slots[k].conj;) {
        std::vector<Slot> left(slots.begin() + static_cast<std::ptrdiff_t>(k), slots.begin() + static_cast<std::ptrdiff_t>(m));
        for (std::size_t l = m + 1; l < slots.size() && !slots[l].conj; ++l) {
          std::vector<Slot> right(slots.begin() + static_cast<std::ptrdiff_t>(m + 1),
                                  slots.begin() + static_cast<std::ptrdiff_t>(l + 1));
          for (const auto& a : join_candidates(span_types(left), span_types(right), *g_.base)) {
            const SpanResult& pl = span(left, a);
            if (!pl.proof) continue;
            const SpanResult& pr = span(right, a);
            if (!pr.proof) continue;
            std::vector<Slot> next(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(k));
            next.push_back({left.front().begin, right.back().end, {a}, false});
            next.insert(next.end(), slots.begin() + static_cast<std::ptrdiff_t>(l + 1), slots.end());
            report_.coordinations.push_back({slots[m].begin,
                                             {left.front().begin, left.back().end},
                                             {right.front().begin, right.back().end},
                                             a, pl.proof, pr.proof});
            if (resolve(next)) return true;
            report_.coordinations.pop_back();
          }
        }
      }
    }
    failed_.insert(key);
    return false;
  }

  // Types a conjunct window can take: its lexical types when it is a single
  // slot, otherwise the closure types it derives.
  std::vector<Formula> span_types(const std::vector<Slot>& window) {
    if (window.size() == 1) return window.front().types;
    std::vector<Formula> out;
    for (const auto& t : closure_)
      if (span(window, t).proof) out.push_back(t);
    return out;
  }

  const SpanResult& span(const std::vector<Slot>& window, const Formula& goal) {
    std::string key = slots_key(window) + "=>" + goal.key();
    if (auto it = spans_.find(key); it != spans_.end()) return it->second;
    SpanResult result;
    std::vector<std::vector<Formula>> sets;
    for (const auto& s : window) sets.push_back(s.types);
    for_each_choice<Formula>(sets, [&](const std::vector<Formula>& choice) {
      std::vector<GTerm> leaves;
      for (const auto& f : choice) leaves.push_back(GTerm::leaf(f));
      std::vector<GTerm> shapes = is_associative(g_.regime) ? std::vector<GTerm>{fold_left(leaves)} : bracketings(leaves);
      for (const auto& u : shapes) {
        if (auto p = prover_.prove(Sequent{u, goal})) {
          result = {p, choice};
          return true;
        }
      }
      return false;
    });
    return spans_.emplace(std::move(key), std::move(result)).first->second;
  }

  const Grammar& g_;
  Prover prover_;
  std::vector<Formula> closure_;
  std::map<std::string, SpanResult> spans_;
  std::set<std::string> failed_;
  MembershipReport report_;
};

}  // namespace

MembershipReport membership(const Grammar& g, const std::vector<std::string>& words) {
  return MembershipSearch(g, words).run();
}

std::vector<Formula> coordinate(const std::vector<Formula>& left, const std::vector<Formula>& right,
                                const BaseLogic& base, Regime r) {
  std::vector<Formula> kept;
  Prover prover(base, SearchConfig{r, false, 0, true});
  auto derivable_from = [&](const std::vector<Formula>& side, const Formula& a) {
    return std::any_of(side.begin(), side.end(),
                       [&](const Formula& b) { return prover.prove(Sequent{GTerm::leaf(b), a}) != nullptr; });
  };
  for (const auto& a : join_candidates(left, right, base))
    if (derivable_from(left, a) && derivable_from(right, a)) kept.push_back(a);
  return kept;
}

std::string report_to_text(const MembershipReport& r) {
  std::string sentence;
  for (const auto& w : r.words) sentence += (sentence.empty() ? "" : " ") + w;
  auto span_text = [&](std::size_t b, std::size_t e) {
    std::string s;
    for (std::size_t i = b; i < e; ++i) s += (i == b ? "" : " ") + r.words[i];
    return s;
  };
  std::string out = std::string(r.accepted ? "accept" : "reject") + ": " + sentence + "\n";
  if (!r.accepted) return out;
  out += "assignment:\n";
  for (const auto& item : r.assignment) out += "  " + span_text(item.begin, item.end) + " : " + to_string(item.type) + "\n";
  for (const auto& c : r.coordinations)
    out += "coordination: [" + span_text(c.left.first, c.left.second) + "] " + r.words[c.marker] + " [" +
           span_text(c.right.first, c.right.second) + "] : " + to_string(c.type) + "\n";
  out += "proof:\n";
  std::istringstream lines(proof_to_text(*r.proof, r.regime));
  std::string line;
  while (std::getline(lines, line)) out += "  " + line + "\n";
  return out;
}

nlohmann::json report_to_json(const MembershipReport& r) {
  nlohmann::json j;
  j["accepted"] = r.accepted;
  j["regime"] = std::string(to_string(r.regime));
  j["words"] = r.words;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : r.assignment)
    items.push_back({{"begin", item.begin}, {"end", item.end}, {"type", to_string(item.type)}});
  j["assignment"] = items;
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : r.coordinations)
    coords.push_back({{"marker", c.marker},
                      {"left", {c.left.first, c.left.second}},
                      {"right", {c.right.first, c.right.second}},
                      {"type", to_string(c.type)},
                      {"left_proof", proof_to_json(*c.left_proof)},
                      {"right_proof", proof_to_json(*c.right_proof)}});
  j["coordinations"] = coords;
  j["proof"] = r.proof ? proof_to_json(*r.proof) : nlohmann::json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// Compile-out

std::vector<BasicType> supertypes_in(const BasicType& b, const std::vector<BasicType>& universe,
                                     const BaseLogic& base) {
  std::vector<BasicType> out{b};
  std::vector<BasicType> reps;  // one per class strictly above b
  for (const auto& u : universe) {
    if (!base.leq(b, u) || base.leq(u, b)) continue;
    bool seen = std::any_of(reps.begin(), reps.end(),
                            [&](const BasicType& r) { return base.leq(r, u) && base.leq(u, r); });
    if (!seen) reps.push_back(u);
  }
  out.insert(out.end(), reps.begin(), reps.end());
  return out;
}

namespace {

FormulaSet super_set(const Formula& a, const std::vector<BasicType>& universe, const BaseLogic& base,
                     Polarity which) {
  std::vector<BasicOccurrence> occs;
  for (auto& o : basic_occurrences(a))
    if (o.polarity == which) occs.push_back(std::move(o));
  std::vector<std::vector<BasicType>> choices;
  for (const auto& o : occs) choices.push_back(supertypes_in(o.type, universe, base));
  FormulaSet out;
  for_each_choice<BasicType>(choices, [&](const std::vector<BasicType>& pick) {
    Formula f = a;
    for (std::size_t i = 0; i < occs.size(); ++i) f = replace_at(f, occs[i].occ, Formula::basic(pick[i]));
    out.insert(f);
    return false;
  });
  if (occs.empty()) out.insert(a);
  return out;
}

}  // namespace

FormulaSet super_plus(const Formula& a, const std::vector<BasicType>& universe, const BaseLogic& base) {
  return super_set(a, universe, base, Polarity::Positive);
}

FormulaSet super_minus(const Formula& a, const std::vector<BasicType>& universe, const BaseLogic& base) {
  return super_set(a, universe, base, Polarity::Negative);
}

CompiledFamily compile_out(const Grammar& g) {
  if (!g.conj_markers.empty()) throw ConfigError("compile-out does not cover coordination particles");
  CompiledFamily f;
  f.regime = g.regime;
  std::set<BasicType> basics = basic_types_of(g.sentence_type());
  for (const auto& [w, entries] : g.lexicon)
    for (const auto& e : entries) basics.merge(basic_types_of(e.type));
  f.basics.assign(basics.begin(), basics.end());
  for (const auto& w : g.words) {
    FormulaSet bar;
    for (const auto& t : g.types_of(w)) bar.merge(super_plus(t, f.basics, *g.base));
    f.lexicon[w].assign(bar.begin(), bar.end());
  }
  FormulaSet starts = super_minus(g.sentence_type(), f.basics, *g.base);
  f.start_types.assign(starts.begin(), starts.end());
  f.base = std::make_shared<EquivalenceBase>(g.base);
  return f;
}

namespace {

std::optional<std::size_t> family_membership(const CompiledFamily& f, const std::vector<std::string>& words,
                                             Prover& prover) {
  std::vector<std::vector<Formula>> sets;
  for (const auto& w : words) {
    auto it = f.lexicon.find(w);
    if (it == f.lexicon.end()) throw DomainError("unknown word '" + w + "'");
    sets.push_back(it->second);
  }
  std::optional<std::size_t> hit;
  for_each_choice<Formula>(sets, [&](const std::vector<Formula>& choice) {
    std::vector<GTerm> leaves;
    for (const auto& t : choice) leaves.push_back(GTerm::leaf(t));
    std::vector<GTerm> shapes = is_associative(f.regime) ? std::vector<GTerm>{fold_left(leaves)} : bracketings(leaves);
    for (std::size_t i = 0; i < f.start_types.size(); ++i)
      for (const auto& u : shapes)
        if (prover.prove(Sequent{u, f.start_types[i]})) {
          if (!hit || i < *hit) hit = i;
          return i == 0;
        }
    return false;
  });
  return hit;
}

}  // namespace

std::optional<std::size_t> family_membership(const CompiledFamily& f, const std::vector<std::string>& words) {
  Prover prover(*f.base, SearchConfig{f.regime, false, 0, true});
  return family_membership(f, words, prover);
}

CompileCheck check_compile_out(const Grammar& g, const CompiledFamily& f, std::size_t max_len) {
  CompileCheck out;
  Prover prover(*f.base, SearchConfig{f.regime, false, 0, true});
  std::vector<std::string> alphabet = g.words;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<std::string>> sets(len, alphabet);
    for_each_choice<std::string>(sets, [&](const std::vector<std::string>& words) {
      ++out.strings;
      bool direct = membership(g, words).accepted;
      bool family = family_membership(f, words, prover).has_value();
      if (direct) ++out.accepted;
      if (direct != family) {
        std::string s;
        for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
        out.mismatches.push_back(s + (direct ? " (direct only)" : " (family only)"));
      }
      return false;
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Substitution characterisation

namespace {

std::string skeleton(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Basic: return "_";
    case Formula::Kind::Over: return "(" + skeleton(f.result()) + "/" + skeleton(f.arg()) + ")";
    case Formula::Kind::Under: return "(" + skeleton(f.arg()) + "\\" + skeleton(f.result()) + ")";
  }
  return {};
}

}  // namespace

bool lemma12_oracle(const Formula& a, const Formula& b, const std::vector<BasicType>& universe,
                    const BaseLogic& base) {
  if (skeleton(a) != skeleton(b)) return false;
  auto occ_a = basic_occurrences(a);
  auto occ_b = basic_occurrences(b);
  // Substitutions act on each occurrence independently, so B is reachable
  // iff every occurrence of B lies in the substitution range of A's.
  for (std::size_t i = 0; i < occ_a.size(); ++i) {
    const BasicType& from = occ_a[i].type;
    const BasicType& to = occ_b[i].type;
    if (from == to) continue;
    bool in_range = std::any_of(universe.begin(), universe.end(), [&](const BasicType& u) {
      if (u != to) return false;
      return occ_a[i].polarity == Polarity::Positive ? base.leq(from, u) : base.leq(u, from);
    });
    if (!in_range) return false;
  }
  return true;
}

}  // namespace lamsub
