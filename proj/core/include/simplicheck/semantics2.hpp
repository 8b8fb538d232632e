#pragma once

#include "simplicheck/semantics3.hpp"

namespace simplicheck {

/// Classical two-valued evaluator. Facet mode is the primary semantics
/// (points and witnesses are facets). Face mode interprets the same clauses
/// on arbitrary faces; it is not monotone and validates formulas it should
/// not, and exists to demonstrate exactly that, so it is fenced behind an
/// explicit flag in the CLI.
class Evaluator2 {
 public:
  Evaluator2(const SimplicialModel& model, SemanticsMode mode,
             EvalOptions options = {});

  bool eval(const Face& x, const Formula& f);

  const SimplicialModel& model() const { return model_; }
  SemanticsMode mode() const { return mode_; }

 private:
  struct PointInfo {
    std::vector<std::int32_t> color_vertex;
    std::vector<int> atoms;
  };

  int resolve_point(const Face& x) const;
  bool eval_at(int point, const Formula& f);
  std::vector<int> resolve_group(const std::vector<AgentId>& group) const;
  bool witness_ok(int x, int y, const std::vector<int>& group) const;

  const SimplicialModel& model_;
  SemanticsMode mode_;
  EvalOptions options_;
  const std::vector<Face>* points_;
  std::vector<PointInfo> info_;
  std::unordered_map<Formula, std::vector<std::int8_t>, FormulaIdHash,
                     FormulaIdEq>
      memo_;
};

bool eval2_facet(const SimplicialModel& m, const Face& x, const Formula& f);
bool eval2_face(const SimplicialModel& m, const Face& x, const Formula& f);

/// Bounded two-valued validity: f must hold at every point of every family
/// model declaring f's vocabulary. Same reporting contract as
/// check_validity3.
CheckReport check_validity2(const Formula& f, const ModelFamily& family,
                            SemanticsMode mode);

}  // namespace simplicheck
