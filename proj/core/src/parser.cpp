#include "simplicheck/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "simplicheck/error.hpp"

namespace simplicheck {

Formula top_formula(const Universe& universe, TopPolicy policy) {
  switch (policy) {
    case TopPolicy::Glocal: {
      if (universe.agents().empty()) {
        throw Error(ErrorCode::UnknownAgent, "universe has no agents");
      }
      Formula a = Formula::global_atom(universe.agents().front());
      return Formula::disjunction(a, Formula::negation(a));
    }
    case TopPolicy::TwoValuedLocal: {
      auto first = universe.first_atom();
      if (!first) {
        throw Error(ErrorCode::NoAtomsDeclared,
                    "no local atom available to encode T");
      }
      Formula p = Formula::local_atom(first->second, first->first);
      return Formula::disjunction(p, Formula::negation(p));
    }
    case TopPolicy::ThreeValuedLocal:
      throw Error(ErrorCode::TopNotExpressible,
                  "no formula of the local language is defined in all faces; "
                  "T/F have no sound encoding under three-valued face "
                  "semantics");
  }
  throw Error(ErrorCode::TopNotExpressible, "unreachable");
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Universe& universe, TopPolicy policy)
      : text_(text), universe_(universe), policy_(policy) {}

  Formula run() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError,
                what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!try_consume(token)) {
      fail("expected '" + std::string(token) + "'");
    }
  }

  bool peek(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::optional<std::string> try_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string expect_ident(const char* what) {
    auto id = try_ident();
    if (!id) fail(std::string("expected ") + what);
    return *id;
  }

  AgentId expect_agent() {
    std::size_t at = pos_;
    std::string name = expect_ident("agent name");
    if (!universe_.has_agent(name)) {
      pos_ = at;
      throw Error(ErrorCode::UnknownAgent, "'" + name + "'");
    }
    return name;
  }

  std::vector<AgentId> parse_group(char close) {
    expect("{");
    skip_ws();
    if (try_consume("}")) {
      throw Error(ErrorCode::EmptyGroup, "empty agent group");
    }
    std::vector<AgentId> group;
    group.push_back(expect_agent());
    while (try_consume(",")) group.push_back(expect_agent());
    expect("}");
    expect(std::string_view(&close, 1));
    return group;
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (true) {
      if (try_consume("<->")) {
        f = Formula::equivalence(std::move(f), parse_imp());
      } else {
        return f;
      }
    }
  }

  Formula parse_imp() {
    Formula f = parse_or();
    while (true) {
      skip_ws();
      if (text_.substr(pos_, 2) == "->") {
        pos_ += 2;
        f = Formula::implication(std::move(f), parse_or());
      } else {
        return f;
      }
    }
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (try_consume("|")) {
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (true) {
      skip_ws();
      // '&' but not part of a longer token (there is none; keep simple)
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        f = Formula::conjunction(std::move(f), parse_unary());
      } else {
        return f;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (try_consume("~")) {
      return Formula::negation(parse_unary());
    }
    // '<->' never starts a unary, so a '<' here opens a modality unless it
    // is malformed.
    if (peek("<->")) fail("unexpected '<->'");
    if (peek("<")) {
      ++pos_;
      skip_ws();
      if (try_consume("D")) {
        auto group = parse_group('>');
        return Formula::diamond_d(std::move(group), parse_unary());
      }
      if (try_consume("K")) {
        AgentId agent = expect_agent();
        expect(">");
        return Formula::k_hat(std::move(agent), parse_unary());
      }
      fail("expected 'D' or 'K' after '<'");
    }
    if (peek("[")) {
      ++pos_;
      skip_ws();
      if (try_consume("D")) {
        auto group = parse_group(']');
        return Formula::box_d(std::move(group), parse_unary());
      }
      if (try_consume("K")) {
        AgentId agent = expect_agent();
        expect("]");
        return Formula::k_box(std::move(agent), parse_unary());
      }
      fail("expected 'D' or 'K' after '['");
    }
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (try_consume("(")) {
      Formula f = parse_iff();
      expect(")");
      return f;
    }
    if (try_consume("@")) {
      return Formula::global_atom(expect_agent());
    }
    std::size_t at = pos_;
    auto id = try_ident();
    if (!id) fail("expected a formula");
    if (*id == "T") return top_formula(universe_, policy_);
    if (*id == "F") return Formula::negation(top_formula(universe_, policy_));
    auto owner = universe_.owner_of(*id);
    if (!owner) {
      pos_ = at;
      throw Error(ErrorCode::UnknownAtom, "'" + *id + "'");
    }
    return Formula::local_atom(*id, *owner);
  }

  std::string_view text_;
  const Universe& universe_;
  TopPolicy policy_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Universe& universe,
              TopPolicy policy) {
  if (universe.agents().empty()) {
    throw Error(ErrorCode::UnknownAgent, "universe has no agents");
  }
  return Parser(text, universe, policy).run();
}

}  // namespace simplicheck
