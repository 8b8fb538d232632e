#pragma once

#include <string_view>

#include "simplicheck/formula.hpp"
#include "simplicheck/universe.hpp"

namespace simplicheck {

/// How the constants T / F elaborate. Under three-valued face semantics no
/// formula is defined everywhere, so no sound encoding exists and the tokens
/// are rejected.
enum class TopPolicy {
  Glocal,           // T := @a | ~@a over the first agent
  TwoValuedLocal,   // T := p | ~p over the first declared atom
  ThreeValuedLocal, // T / F are parse errors
};

/// The T encoding for a policy; throws TopNotExpressible for
/// ThreeValuedLocal and NoAtomsDeclared when TwoValuedLocal has no atom to
/// build on.
Formula top_formula(const Universe& universe, TopPolicy policy);

/// Parses the ASCII grammar
///
///   formula  :=  iff
///   iff      :=  imp ('<->' imp)*                  (left-associative)
///   imp      :=  or  ('->' or)*                    (left-associative)
///   or       :=  and ('|' and)*
///   and      :=  unary ('&' unary)*
///   unary    :=  '~' unary | modality unary | primary
///   modality :=  '<D{' agents '}>' | '[D{' agents '}]' | '<K' agent '>'
///             |  '[K' agent ']'
///   primary  :=  atom | '@' agent | 'T' | 'F' | '(' formula ')'
///
/// into the core AST, elaborating all sugar. Agents and atoms must be
/// declared in the universe.
Formula parse(std::string_view text, const Universe& universe,
              TopPolicy policy = TopPolicy::Glocal);

}  // namespace simplicheck
