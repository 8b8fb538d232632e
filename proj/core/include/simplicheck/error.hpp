#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplicheck {

enum class ErrorCode {
  // model validation
  DuplicateColorInFace,
  AtomOwnerMismatch,
  SubsumedFacet,
  UnknownVertexRef,
  FewerThanTwoAgents,
  DuplicateVertexId,
  DuplicateAtom,
  UnusedVertex,
  EmptyFace,
  EmptyModel,
  InvalidModelJson,
  // formula parsing
  SyntaxError,
  UnknownAgent,
  UnknownAtom,
  EmptyGroup,
  TopNotExpressible,
  // face queries and evaluation
  NotAFace,
  EvaluationPointNotInModel,
  FacetRequired,
  // generation and checking
  SpecTooLarge,
  InvalidFamilySpec,
  UnknownTheorem,
  NoAtomsDeclared,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplicheck
