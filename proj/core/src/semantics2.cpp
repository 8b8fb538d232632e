#include "simplicheck/semantics2.hpp"

#include <algorithm>
#include <chrono>

#include "simplicheck/error.hpp"
#include "simplicheck/model_json.hpp"

namespace simplicheck {

Evaluator2::Evaluator2(const SimplicialModel& model, SemanticsMode mode,
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
    info_.push_back(std::move(info));
  }
}

int Evaluator2::resolve_point(const Face& x) const {
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
                "two-valued facet semantics evaluates on facets only");
  }
  throw Error(ErrorCode::EvaluationPointNotInModel,
              "evaluation point is not a face of the model");
}

std::vector<int> Evaluator2::resolve_group(
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

bool Evaluator2::witness_ok(int x, int y,
                            const std::vector<int>& group) const {
  const auto& cx = info_[static_cast<std::size_t>(x)].color_vertex;
  const auto& cy = info_[static_cast<std::size_t>(y)].color_vertex;
  for (int agent : group) {
    auto a = static_cast<std::size_t>(agent);
    if (cx[a] < 0 || cx[a] != cy[a]) return false;
  }
  return true;
}

bool Evaluator2::eval_at(int point, const Formula& f) {
  std::vector<std::int8_t>* slot = nullptr;
  if (options_.cache) {
    auto [it, inserted] = memo_.try_emplace(f);
    if (inserted) it->second.assign(points_->size(), 0);
    slot = &it->second;
    std::int8_t code = (*slot)[static_cast<std::size_t>(point)];
    if (code != 0) return code == 2;
  }

  const PointInfo& here = info_[static_cast<std::size_t>(point)];
  bool result = false;
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom: {
      int agent = model_.universe().agent_index(f.agent());
      if (agent < 0) {
        throw Error(ErrorCode::UnknownAgent,
                    "'" + f.agent() + "' is not an agent of the model");
      }
      result = here.color_vertex[static_cast<std::size_t>(agent)] >= 0;
      break;
    }
    case Formula::Kind::LocalAtom: {
      int atom = model_.universe().atom_index(f.atom_name());
      if (atom < 0 ||
          *model_.universe().owner_of(f.atom_name()) != f.atom_owner()) {
        throw Error(ErrorCode::UnknownAtom,
                    "'" + f.atom_name() + "' is not an atom of the model");
      }
      result = std::binary_search(here.atoms.begin(), here.atoms.end(), atom);
      break;
    }
    case Formula::Kind::Not:
      result = !eval_at(point, f.child());
      break;
    case Formula::Kind::And:
      result = eval_at(point, f.left()) && eval_at(point, f.right());
      break;
    case Formula::Kind::DiamondD: {
      std::vector<int> group = resolve_group(f.group());
      Formula body = f.child();
      for (int y = 0; y < static_cast<int>(points_->size()); ++y) {
        if (witness_ok(point, y, group) && eval_at(y, body)) {
          result = true;
          break;
        }
      }
      break;
    }
  }

  if (slot != nullptr) {
    (*slot)[static_cast<std::size_t>(point)] = result ? 2 : 1;
  }
  return result;
}

bool Evaluator2::eval(const Face& x, const Formula& f) {
  return eval_at(resolve_point(x), f);
}

bool eval2_facet(const SimplicialModel& m, const Face& x, const Formula& f) {
  return Evaluator2(m, SemanticsMode::Facet).eval(x, f);
}

bool eval2_face(const SimplicialModel& m, const Face& x, const Formula& f) {
  return Evaluator2(m, SemanticsMode::Face).eval(x, f);
}

CheckReport check_validity2(const Formula& f, const ModelFamily& family,
                            SemanticsMode mode) {
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.theorem =
      std::string("bounded-validity-2-") + std::string(to_string(mode));
  report.family = family.describe();
  report.stats.formulas = 1;
  report.pass = true;

  for (const auto& m : family.models()) {
    if (!f.vocabulary_in(m.universe())) continue;
    report.stats.models += 1;
    Evaluator2 ev(m, mode, EvalOptions{.cache = true});
    const auto& points = mode == SemanticsMode::Face ? m.faces() : m.facets();
    for (const auto& x : points) {
      report.stats.points += 1;
      if (!ev.eval(x, f)) {
        Counterexample cex;
        cex.model = model_to_json(m);
        cex.face = m.face_ids(x);
        cex.formula = print(f);
        cex.expected = "true";
        cex.actual = "false";
        cex.check = std::string("eval2-") + std::string(to_string(mode));
        report.counterexample = std::move(cex);
        report.pass = false;
        break;
      }
    }
    if (!report.pass) break;
  }

  report.note = report.pass ? "no counterexample in family"
                            : "two-valued validity fails in family";
  report.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace simplicheck
