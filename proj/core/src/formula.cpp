#include "simplicheck/formula.hpp"

#include <algorithm>

#include "simplicheck/error.hpp"

namespace simplicheck {

struct Formula::Node {
  Kind kind;
  std::string name;           // agent (GlobalAtom) or atom name (LocalAtom)
  std::string owner;          // LocalAtom only
  std::vector<AgentId> group; // DiamondD only, sorted
  std::shared_ptr<const Node> a;  // Not/DiamondD body, And lhs
  std::shared_ptr<const Node> b;  // And rhs
};

namespace {

using Node = Formula::Node;

std::shared_ptr<const Node> make(Node node) {
  return std::make_shared<const Node>(std::move(node));
}

bool node_equal(const Node* x, const Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Formula::Kind::GlobalAtom:
      return x->name == y->name;
    case Formula::Kind::LocalAtom:
      return x->name == y->name && x->owner == y->owner;
    case Formula::Kind::Not:
      return node_equal(x->a.get(), y->a.get());
    case Formula::Kind::And:
      return node_equal(x->a.get(), y->a.get()) &&
             node_equal(x->b.get(), y->b.get());
    case Formula::Kind::DiamondD:
      return x->group == y->group && node_equal(x->a.get(), y->a.get());
  }
  return false;
}

}  // namespace

Formula Formula::global_atom(std::string agent) {
  return Formula(make({Kind::GlobalAtom, std::move(agent), {}, {}, nullptr, nullptr}));
}

Formula Formula::local_atom(std::string name, std::string owner) {
  return Formula(make({Kind::LocalAtom, std::move(name), std::move(owner), {}, nullptr, nullptr}));
}

Formula Formula::negation(Formula f) {
  return Formula(make({Kind::Not, {}, {}, {}, std::move(f.node_), nullptr}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(make({Kind::And, {}, {}, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::diamond_d(std::vector<AgentId> group, Formula body) {
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());
  if (group.empty()) {
    throw Error(ErrorCode::EmptyGroup, "distributed knowledge over empty group");
  }
  return Formula(make({Kind::DiamondD, {}, {}, std::move(group), std::move(body.node_), nullptr}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula Formula::box_d(std::vector<AgentId> group, Formula body) {
  return negation(diamond_d(std::move(group), negation(std::move(body))));
}

Formula Formula::k_hat(AgentId agent, Formula body) {
  return diamond_d({std::move(agent)}, std::move(body));
}

Formula Formula::k_box(AgentId agent, Formula body) {
  return negation(diamond_d({std::move(agent)}, negation(std::move(body))));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const AgentId& Formula::agent() const { return node_->name; }
const std::string& Formula::atom_name() const { return node_->name; }
const AgentId& Formula::atom_owner() const { return node_->owner; }
const std::vector<AgentId>& Formula::group() const { return node_->group; }

Formula Formula::child() const { return Formula(node_->a); }
Formula Formula::left() const { return Formula(node_->a); }
Formula Formula::right() const { return Formula(node_->b); }

bool Formula::operator==(const Formula& other) const {
  return node_equal(node_.get(), other.node_.get());
}

std::size_t Formula::node_count() const {
  switch (kind()) {
    case Kind::GlobalAtom:
    case Kind::LocalAtom:
      return 1;
    case Kind::Not:
    case Kind::DiamondD:
      return 1 + child().node_count();
    case Kind::And:
      return 1 + left().node_count() + right().node_count();
  }
  return 1;
}

int Formula::depth() const {
  switch (kind()) {
    case Kind::GlobalAtom:
    case Kind::LocalAtom:
      return 0;
    case Kind::Not:
    case Kind::DiamondD:
      return 1 + child().depth();
    case Kind::And:
      return 1 + std::max(left().depth(), right().depth());
  }
  return 0;
}

const void* Formula::id() const { return node_.get(); }

bool Formula::vocabulary_in(const Universe& u) const {
  switch (kind()) {
    case Kind::GlobalAtom:
      return u.has_agent(agent());
    case Kind::LocalAtom: {
      auto owner = u.owner_of(atom_name());
      return owner && *owner == atom_owner();
    }
    case Kind::Not:
      return child().vocabulary_in(u);
    case Kind::And:
      return left().vocabulary_in(u) && right().vocabulary_in(u);
    case Kind::DiamondD:
      for (const auto& agent : group()) {
        if (!u.has_agent(agent)) return false;
      }
      return child().vocabulary_in(u);
  }
  return false;
}

LanguageClass classify(const Formula& f) {
  LanguageClass cls;
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom:
      cls.atoms = AtomKind::Glocal;
      break;
    case Formula::Kind::LocalAtom:
      break;
    case Formula::Kind::Not:
      cls = classify(f.child());
      break;
    case Formula::Kind::And: {
      LanguageClass l = classify(f.left());
      LanguageClass r = classify(f.right());
      cls.knowledge = (l.knowledge == KnowledgeKind::Distributed ||
                       r.knowledge == KnowledgeKind::Distributed)
                          ? KnowledgeKind::Distributed
                          : KnowledgeKind::Individual;
      cls.atoms = (l.atoms == AtomKind::Glocal || r.atoms == AtomKind::Glocal)
                      ? AtomKind::Glocal
                      : AtomKind::Local;
      break;
    }
    case Formula::Kind::DiamondD: {
      cls = classify(f.child());
      if (f.group().size() > 1) cls.knowledge = KnowledgeKind::Distributed;
      break;
    }
  }
  return cls;
}

namespace {

void print_rec(const Formula& f, const PrintOptions& opt, std::string& out);

void print_operand(const Formula& f, const PrintOptions& opt, std::string& out) {
  // Conjunctions under a unary operator or as right operand need parentheses.
  bool fold = false;
  if (opt.top != nullptr) {
    fold = f == *opt.top ||
           (f.kind() == Formula::Kind::Not && f.child() == *opt.top);
  }
  if (!fold && f.kind() == Formula::Kind::And) {
    out += '(';
    print_rec(f, opt, out);
    out += ')';
  } else {
    print_rec(f, opt, out);
  }
}

void print_rec(const Formula& f, const PrintOptions& opt, std::string& out) {
  if (opt.top != nullptr) {
    if (f == *opt.top) {
      out += 'T';
      return;
    }
    if (f.kind() == Formula::Kind::Not && f.child() == *opt.top) {
      out += 'F';
      return;
    }
  }
  switch (f.kind()) {
    case Formula::Kind::GlobalAtom:
      out += '@';
      out += f.agent();
      break;
    case Formula::Kind::LocalAtom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '~';
      print_operand(f.child(), opt, out);
      break;
    case Formula::Kind::And:
      // '&' parses left-associatively, so only right-nested conjunctions
      // need parentheses.
      print_rec(f.left(), opt, out);
      out += " & ";
      print_operand(f.right(), opt, out);
      break;
    case Formula::Kind::DiamondD:
      if (opt.fold_singleton_diamond && f.group().size() == 1) {
        out += "<K ";
        out += f.group().front();
        out += "> ";
      } else {
        out += "<D{";
        for (std::size_t i = 0; i < f.group().size(); ++i) {
          if (i > 0) out += ',';
          out += f.group()[i];
        }
        out += "}> ";
      }
      print_operand(f.child(), opt, out);
      break;
  }
}

}  // namespace

std::string print(const Formula& f) { return print(f, PrintOptions{}); }

std::string print(const Formula& f, const PrintOptions& options) {
  std::string out;
  print_rec(f, options, out);
  return out;
}

}  // namespace simplicheck
