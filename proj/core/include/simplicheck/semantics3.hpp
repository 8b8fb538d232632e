#pragma once

#include <string_view>
#include <unordered_map>
#include <vector>

#include "simplicheck/formula.hpp"
#include "simplicheck/model.hpp"
#include "simplicheck/modelgen.hpp"
#include "simplicheck/report.hpp"

namespace simplicheck {

/// Three-valued verdict. Undefined means the formula has no truth value at
/// the evaluation point (a dead agent's atom or knowledge is involved).
enum class Truth3 { True, False, Undefined };
std::string_view to_string(Truth3 v);

/// Face semantics evaluates on arbitrary faces with witnesses ranging over
/// all faces; facet semantics restricts both to facets.
enum class SemanticsMode { Face, Facet };
std::string_view to_string(SemanticsMode mode);

/// The (definability, satisfaction) pair underlying a Truth3 verdict.
/// Satisfaction implies definability at every reachable state; the pair is
/// exposed so tests can verify that rather than assume it.
struct EvalPair {
  bool defined = false;
  bool satisfied = false;
};

inline Truth3 to_truth3(EvalPair p) {
  if (!p.defined) return Truth3::Undefined;
  return p.satisfied ? Truth3::True : Truth3::False;
}

struct EvalOptions {
  /// Memoize per (subformula, face) within this evaluator. Observationally
  /// transparent; off by default.
  bool cache = false;
};

/// Memo keys: formulas compared by node identity. Keeping the Formula handle
/// in the key pins the node, so addresses cannot be recycled while a cache
/// entry refers to them.
struct FormulaIdHash {
  std::size_t operator()(const Formula& f) const {
    return std::hash<const void*>()(f.id());
  }
};
struct FormulaIdEq {
  bool operator()(const Formula& a, const Formula& b) const {
    return a.id() == b.id();
  }
};

/// Evaluates formulas on one model under one mode. Point and witness
/// candidates are the model's faces (face mode) or facets (facet mode).
/// Definability and truth witnesses for the diamond modality are searched
/// independently, in canonical face order.
class Evaluator3 {
 public:
  Evaluator3(const SimplicialModel& model, SemanticsMode mode,
             EvalOptions options = {});

  EvalPair eval_pair(const Face& x, const Formula& f);
  Truth3 eval(const Face& x, const Formula& f);

  /// The box modality D_B evaluated directly by its derived clause; agrees
  /// with the desugared ~<D{B}>~body (kept as a cross-check oracle).
  EvalPair eval_box_pair(const Face& x, const std::vector<AgentId>& group,
                         const Formula& body);

  const SimplicialModel& model() const { return model_; }
  SemanticsMode mode() const { return mode_; }

 private:
  struct PointInfo {
    std::vector<std::int32_t> color_vertex;  // agent index -> vertex or -1
    std::vector<int> atoms;                  // sorted atom indices
    bool facet = false;
  };

  int resolve_point(const Face& x) const;
  EvalPair eval_at(int point, const Formula& f);
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

Truth3 eval3(const SimplicialModel& m, const Face& x, const Formula& f,
             SemanticsMode mode);
EvalPair eval3_pair(const SimplicialModel& m, const Face& x, const Formula& f,
                    SemanticsMode mode);
Truth3 eval3_derived_box(const SimplicialModel& m, const Face& x,
                         const std::vector<AgentId>& group,
                         const Formula& body, SemanticsMode mode);

/// Bounded three-valued validity: at every point of every family model where
/// f is defined, f must be true. Models that do not declare f's vocabulary
/// are skipped. A pass means "no counterexample in family", nothing more;
/// the counterexample, when present, is the canonical-order first one.
CheckReport check_validity3(const Formula& f, const ModelFamily& family,
                            SemanticsMode mode);

}  // namespace simplicheck
