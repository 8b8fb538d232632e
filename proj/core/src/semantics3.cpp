#include "simplicheck/semantics3.hpp"

#include <algorithm>
#include <chrono>

#include "simplicheck/error.hpp"
#include "simplicheck/model_json.hpp"

namespace simplicheck {

std::string_view to_string(Truth3 v) {
  switch (v) {
    case Truth3::True: return "true";
    case Truth3::False: return "false";
    case Truth3::Undefined: return "undefined";
  }
  return "undefined";
}

std::string_view to_string(SemanticsMode mode) {
  return mode == SemanticsMode::Face ? "face" : "facet";
}

Evaluator3::Evaluator3(const SimplicialModel& model, SemanticsMode mode,
                       EvalOptions options)
    : model_(model), mode_(mode), options_(options) {
  points_ = mode_ == SemanticsMode::Face ? &model_.faces() : &model_.facets();
  info_.reserve(points_->size());
  for (const auto& point : *points_) {
    PointInfo info;
    info.color_vertex = model_.color_vertex_table(point);
    for (const auto& atom : model_.atoms_of(point)) {
      info.atoms.push_back(model_.universe().atom_index(atom));
    }
    std::sort(info.atoms.begin(), info.atoms.end());
    info.facet = model_.is_facet(point);
    info_.push_back(std::move(info));
  }
}

int Evaluator3::resolve_point(const Face& x) const {
  if (mode_ == SemanticsMode::Face) {
    int idx = model_.face_index(x);
    if (idx < 0) {
      throw Error(ErrorCode::EvaluationPointNotInModel,
                  "evaluation point is not a face of the model");
    }
    return idx;
  }
  int idx = model_.facet_index(x);
  if (idx >= 0) return idx;
  if (model_.is_face(x)) {
    throw Error(ErrorCode::FacetRequired,
                "facet semantics evaluates on facets only");
  }
  throw Error(ErrorCode::EvaluationPointNotInModel,
              "evaluation point is not a face of the model");
}

std::vector<int> Evaluator3::resolve_group(
    const std::vector<AgentId>& group) const {
  std::vector<int> indices;
  indices.reserve(group.size());
  for (const auto& agent : group) {
    int idx = model_.universe().agent_index(agent);
    if (idx < 0) {
      throw Error(ErrorCode::UnknownAgent,
                  "'" + agent + "' is not an agent of the model");
    }
    indices.push_back(idx);
  }
  return indices;
}

bool Evaluator3::witness_ok(int x, int y,
                            const std::vector<int>& group) const {
  // B subseteq chi(X cap Y): X and Y share the very same vertex for each
  // agent of B (chi is injective on faces).
  const auto& cx = info_[static_cast<std::size_t>(x)].color_vertex;
  const auto& cy = info_[static_cast<std::size_t>(y)].color_vertex;
  for (int agent : group) {
    auto a = static_cast<std::size_t>(agent);
    if (cx[a] < 0 || cx[a] != cy[a]) return false;
  }
  return true;
}

EvalPair Evaluator3::eval_at(int point, const Formula& f) {
  std::vector<std::int8_t>* slot = nullptr;
  if (options_.cache) {
    auto [it, inserted] = memo_.try_emplace(f);
    if (inserted) it->second.assign(points_->size(), 0);
    slot = &it->second;
    std::int8_t code = (*slot)[static_cast<std::size_t>(point)];
    if (code != 0) {
      return EvalPair{code >= 2, code == 3};
    }
  }

  const PointInfo& here = info_[static_cast<std::size_t>(point)];
  EvalPair result;
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom: {
      int agent = model_.universe().agent_index(f.agent());
      if (agent < 0) {
        throw Error(ErrorCode::UnknownAgent,
                    "'" + f.agent() + "' is not an agent of the model");
      }
      result.defined = here.facet;
      result.satisfied =
          result.defined && here.color_vertex[static_cast<std::size_t>(agent)] >= 0;
      break;
    }
    case Formula::Kind::LocalAtom: {
      int owner = model_.universe().agent_index(f.atom_owner());
      int atom = model_.universe().atom_index(f.atom_name());
      if (owner < 0 || atom < 0 ||
          *model_.universe().owner_of(f.atom_name()) != f.atom_owner()) {
        throw Error(ErrorCode::UnknownAtom,
                    "'" + f.atom_name() + "' is not an atom of the model");
      }
      result.defined = here.color_vertex[static_cast<std::size_t>(owner)] >= 0;
      result.satisfied =
          std::binary_search(here.atoms.begin(), here.atoms.end(), atom);
      break;
    }
    case Formula::Kind::Not: {
      EvalPair c = eval_at(point, f.child());
      result.defined = c.defined;
      result.satisfied = c.defined && !c.satisfied;
      break;
    }
    case Formula::Kind::And: {
      EvalPair l = eval_at(point, f.left());
      EvalPair r = eval_at(point, f.right());
      result.defined = l.defined && r.defined;
      result.satisfied = l.satisfied && r.satisfied;
      break;
    }
    case Formula::Kind::DiamondD: {
      std::vector<int> group = resolve_group(f.group());
      Formula body = f.child();
      bool found_defined = false;
      bool found_true = false;
      for (int y = 0; y < static_cast<int>(points_->size()); ++y) {
        if (!witness_ok(point, y, group)) continue;
        EvalPair c = eval_at(y, body);
        found_defined = found_defined || c.defined;
        found_true = found_true || c.satisfied;
        if (found_defined && found_true) break;
      }
      result.defined = found_defined;
      result.satisfied = found_true;
      break;
    }
  }

  if (slot != nullptr) {
    (*slot)[static_cast<std::size_t>(point)] =
        result.defined ? (result.satisfied ? 3 : 2) : 1;
  }
  return result;
}

EvalPair Evaluator3::eval_pair(const Face& x, const Formula& f) {
  return eval_at(resolve_point(x), f);
}

Truth3 Evaluator3::eval(const Face& x, const Formula& f) {
  return to_truth3(eval_pair(x, f));
}

EvalPair Evaluator3::eval_box_pair(const Face& x,
                                   const std::vector<AgentId>& group,
                                   const Formula& body) {
  int point = resolve_point(x);
  std::vector<int> agents = resolve_group(group);
  bool found_defined = false;
  bool all_defined_true = true;
  for (int y = 0; y < static_cast<int>(points_->size()); ++y) {
    if (!witness_ok(point, y, agents)) continue;
    EvalPair c = eval_at(y, body);
    found_defined = found_defined || c.defined;
    if (c.defined && !c.satisfied) all_defined_true = false;
  }
  return EvalPair{found_defined, found_defined && all_defined_true};
}

Truth3 eval3(const SimplicialModel& m, const Face& x, const Formula& f,
             SemanticsMode mode) {
  return Evaluator3(m, mode).eval(x, f);
}

EvalPair eval3_pair(const SimplicialModel& m, const Face& x, const Formula& f,
                    SemanticsMode mode) {
  return Evaluator3(m, mode).eval_pair(x, f);
}

Truth3 eval3_derived_box(const SimplicialModel& m, const Face& x,
                         const std::vector<AgentId>& group,
                         const Formula& body, SemanticsMode mode) {
  return to_truth3(Evaluator3(m, mode).eval_box_pair(x, group, body));
}

CheckReport check_validity3(const Formula& f, const ModelFamily& family,
                            SemanticsMode mode) {
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.theorem = std::string("bounded-validity-3-") + std::string(to_string(mode));
  report.family = family.describe();
  report.stats.formulas = 1;
  report.pass = true;

  for (const auto& m : family.models()) {
    if (!f.vocabulary_in(m.universe())) continue;
    report.stats.models += 1;
    Evaluator3 ev(m, mode, EvalOptions{.cache = true});
    const auto& points =
        mode == SemanticsMode::Face ? m.faces() : m.facets();
    for (const auto& x : points) {
      report.stats.points += 1;
      EvalPair p = ev.eval_pair(x, f);
      if (p.defined && !p.satisfied) {
        Counterexample cex;
        cex.model = model_to_json(m);
        cex.face = m.face_ids(x);
        cex.formula = print(f);
        cex.expected = "true wherever defined";
        cex.actual = "false";
        cex.check = std::string("eval3-") + std::string(to_string(mode));
        report.counterexample = std::move(cex);
        report.pass = false;
        break;
      }
    }
    if (!report.pass) break;
  }

  report.note = report.pass ? "no counterexample in family"
                            : "three-valued validity fails in family";
  report.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace simplicheck
