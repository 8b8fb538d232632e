#pragma once

#include <memory>
#include <string>
#include <vector>

#include "simplicheck/universe.hpp"

namespace simplicheck {

/// Core epistemic formula over glocal atoms:
///
///   φ ::= @a | p | ~φ | (φ & φ) | <D{B}> φ
///
/// where @a states that agent a is alive, p is a local atom, and <D{B}> is
/// the diamond distributed-knowledge modality for a nonempty agent group B.
/// Everything else (|, ->, <->, [D{B}], <K a>, [K a], T, F) is sugar and is
/// elaborated into this grammar. Formulas are immutable values; subtrees are
/// shared.
class Formula {
 public:
  enum class Kind { GlobalAtom, LocalAtom, Not, And, DiamondD };

  static Formula global_atom(std::string agent);
  static Formula local_atom(std::string name, std::string owner);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  /// Group is deduplicated and sorted; must be nonempty.
  static Formula diamond_d(std::vector<AgentId> group, Formula body);

  // Derived connectives, elaborated per the standard abbreviations.
  static Formula disjunction(Formula lhs, Formula rhs);   // ~(~l & ~r)
  static Formula implication(Formula lhs, Formula rhs);   // ~(l & ~r)
  static Formula equivalence(Formula lhs, Formula rhs);   // (l->r) & (r->l)
  static Formula box_d(std::vector<AgentId> group, Formula body);  // ~<D>~
  static Formula k_hat(AgentId agent, Formula body);      // <D{a}>
  static Formula k_box(AgentId agent, Formula body);      // ~<D{a}>~

  Kind kind() const;
  const AgentId& agent() const;                 // GlobalAtom
  const std::string& atom_name() const;         // LocalAtom
  const AgentId& atom_owner() const;            // LocalAtom
  const std::vector<AgentId>& group() const;    // DiamondD
  Formula child() const;                        // Not / DiamondD body
  Formula left() const;                         // And
  Formula right() const;                        // And

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::size_t node_count() const;
  int depth() const;

  /// Stable identity of the underlying node, usable as a memoization key.
  const void* id() const;

  /// True when every agent and atom mentioned is declared in `u` with the
  /// same ownership.
  bool vocabulary_in(const Universe& u) const;

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class KnowledgeKind { Individual, Distributed };
enum class AtomKind { Local, Glocal };

struct LanguageClass {
  KnowledgeKind knowledge = KnowledgeKind::Individual;
  AtomKind atoms = AtomKind::Local;
  bool operator==(const LanguageClass&) const = default;
};

/// Least language class containing f: individual iff every modality group is
/// a singleton, local iff no global atom occurs.
LanguageClass classify(const Formula& f);

struct PrintOptions {
  /// When set, subtrees structurally equal to *top (resp. its negation)
  /// print as T (resp. F).
  const Formula* top = nullptr;
  /// Print singleton <D{a}> as <K a>.
  bool fold_singleton_diamond = false;
};

/// Canonical printer; parse(print(f)) == f for any core AST.
std::string print(const Formula& f);
std::string print(const Formula& f, const PrintOptions& options);

}  // namespace simplicheck
