#include "lamsub/base_logic.hpp"

#include <cctype>
#include <sstream>

#include "lamsub/error.hpp"

namespace lamsub {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Entailed: return "Entailed";
    case Verdict::Disentailed: return "Disentailed";
    case Verdict::Blocked: return "Blocked";
  }
  return "?";
}

std::optional<BasicType> BaseLogic::meet(const BasicType&, const BasicType&) const {
  throw ConfigError(std::string("base logic '") + std::string(name()) + "' has no meet");
}

std::optional<BasicType> BaseLogic::join(const BasicType&, const BasicType&) const {
  throw ConfigError(std::string("base logic '") + std::string(name()) + "' has no join");
}

PosetBase::PosetBase(std::vector<std::string> atoms,
                     const std::vector<std::pair<std::string, std::string>>& edges)
    : atoms_(std::move(atoms)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!index_.emplace(atoms_[i], i).second) throw DomainError("duplicate atom " + atoms_[i]);
  }
  std::size_t n = atoms_.size();
  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (const auto& [lo, hi] : edges) {
    auto a = index_.find(lo);
    auto b = index_.find(hi);
    if (a == index_.end()) throw DomainError("undeclared atom " + lo);
    if (b == index_.end()) throw DomainError("undeclared atom " + hi);
    leq_[a->second][b->second] = true;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
}

PosetBase PosetBase::from_text(std::string_view text) {
  std::vector<std::string> atoms;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string kw;
    if (!(words >> kw)) continue;
    if (kw == "atom") {
      std::string a;
      while (words >> a) atoms.push_back(a);
    } else if (kw == "sub") {
      std::string lo, hi, extra;
      if (!(words >> lo >> hi) || (words >> extra)) {
        throw ParseError("expected 'sub <b1> <b2>'", 1, lineno);
      }
      edges.emplace_back(lo, hi);
    } else {
      throw ParseError("unknown poset directive '" + kw + "'", 1, lineno);
    }
  }
  return PosetBase(std::move(atoms), edges);
}

BasicType PosetBase::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!index_.contains(s)) throw DomainError("undeclared atom " + s);
  return BasicType{s};
}

std::size_t PosetBase::index_of(const BasicType& b) const {
  auto it = index_.find(b.payload);
  if (it == index_.end()) throw DomainError("undeclared atom " + b.payload);
  return it->second;
}

Verdict PosetBase::entails(const BasicType& a, const BasicType& b) const {
  return leq_[index_of(a)][index_of(b)] ? Verdict::Entailed : Verdict::Blocked;
}

namespace {

// The unique optimum of `candidates` w.r.t. `better(i, j)` (i at least as
// good as j for all j), if any; ties between equivalent atoms go to the
// first declared.
std::optional<std::size_t> unique_best(const std::vector<std::size_t>& candidates,
                                       const auto& better) {
  for (std::size_t c : candidates) {
    bool all = true;
    for (std::size_t d : candidates) all = all && better(c, d);
    if (all) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<BasicType> PosetBase::join(const BasicType& a, const BasicType& b) const {
  std::size_t i = index_of(a), j = index_of(b);
  std::vector<std::size_t> upper;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (leq_[i][k] && leq_[j][k]) upper.push_back(k);
  auto best = unique_best(upper, [&](std::size_t c, std::size_t d) { return leq_[c][d]; });
  if (!best) return std::nullopt;
  return BasicType{atoms_[*best]};
}

std::optional<BasicType> PosetBase::meet(const BasicType& a, const BasicType& b) const {
  std::size_t i = index_of(a), j = index_of(b);
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < atoms_.size(); ++k)
    if (leq_[k][i] && leq_[k][j]) lower.push_back(k);
  auto best = unique_best(lower, [&](std::size_t c, std::size_t d) { return leq_[d][c]; });
  if (!best) return std::nullopt;
  return BasicType{atoms_[*best]};
}

}  // namespace lamsub
