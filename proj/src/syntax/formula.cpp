#include "elw/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace elw {

struct Formula::Node {
  Kind kind;
  VarIndex var = 0;
  std::size_t hash = 0;
  std::size_t size = 1;
  VarIndex var_bound = 0;
  bool propositional = true;
  bool has_box = false;
  // Empty for leaves; inner formula stored in `left` for box/K.
  std::vector<Formula> children;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(VarIndex index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = index;
  n->hash = mix(static_cast<std::size_t>(Kind::Var), index);
  n->var_bound = index + 1;
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bottom;
    n->hash = mix(static_cast<std::size_t>(Kind::Bottom), 0);
    return Formula(std::move(n));
  }();
  return b;
}

namespace {

template <class NodeT>
void finish_compound(NodeT& n) {
  n.hash = static_cast<std::size_t>(n.kind) * 31 + 7;
  n.size = 1;
  n.propositional = n.kind != Kind::Box && n.kind != Kind::Know;
  n.has_box = n.kind == Kind::Box;
  for (const auto& c : n.children) {
    n.hash = mix(n.hash, c.hash());
    n.size += c.size();
    n.var_bound = std::max(n.var_bound, c.var_bound());
    n.propositional = n.propositional && c.is_propositional();
    n.has_box = n.has_box || c.contains_box();
  }
}

}  // namespace

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children = {std::move(l), std::move(r)};
  finish_compound(*n);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->children = {std::move(l), std::move(r)};
  finish_compound(*n);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->children = {std::move(l), std::move(r)};
  finish_compound(*n);
  return Formula(std::move(n));
}

Formula Formula::box(Formula inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->children = {std::move(inner)};
  finish_compound(*n);
  return Formula(std::move(n));
}

Formula Formula::know(Formula inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Know;
  n->children = {std::move(inner)};
  finish_compound(*n);
  return Formula(std::move(n));
}

Formula Formula::neg(Formula f) { return implies(std::move(f), bottom()); }

Formula Formula::top() {
  static const Formula t = implies(bottom(), bottom());
  return t;
}

Formula Formula::iff(Formula l, Formula r) { return conj(implies(l, r), implies(r, l)); }

Formula Formula::ident(Formula l, Formula r) {
  return conj(box(implies(l, r)), box(implies(r, l)));
}

Kind Formula::kind() const { return node_->kind; }

VarIndex Formula::var_index() const {
  assert(node_->kind == Kind::Var);
  return node_->var;
}

const Formula& Formula::left() const {
  assert(!node_->children.empty());
  return node_->children[0];
}

const Formula& Formula::right() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}

bool Formula::is_binary() const { return node_->children.size() == 2; }
bool Formula::is_propositional() const { return node_->propositional; }
bool Formula::contains_box() const { return node_->has_box; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }
VarIndex Formula::var_bound() const { return node_->var_bound; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size ||
      a.node_->kind != b.node_->kind || a.node_->var != b.node_->var) {
    return false;
  }
  return std::equal(a.node_->children.begin(), a.node_->children.end(),
                    b.node_->children.begin(), b.node_->children.end());
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->size <=> b.node_->size; c != 0) return c;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->var <=> b.node_->var; c != 0) return c;
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (auto c = a.node_->children[i] <=> b.node_->children[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Formula substitute(const Formula& f, const Substitution& sigma) {
  if (sigma.empty()) return f;
  switch (f.kind()) {
    case Kind::Var: {
      auto it = sigma.find(f.var_index());
      return it == sigma.end() ? f : it->second;
    }
    case Kind::Bottom:
      return f;
    case Kind::And:
      return Formula::conj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Or:
      return Formula::disj(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Implies:
      return Formula::implies(substitute(f.left(), sigma), substitute(f.right(), sigma));
    case Kind::Box:
      return Formula::box(substitute(f.inner(), sigma));
    case Kind::Know:
      return Formula::know(substitute(f.inner(), sigma));
  }
  return f;
}

namespace {

struct Abstractor {
  VarIndex next;
  std::unordered_map<Formula, VarIndex, FormulaHash> assigned;
  Substitution binding;

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case Kind::Var:
      case Kind::Bottom:
        return f;
      case Kind::Box:
      case Kind::Know: {
        auto [it, fresh] = assigned.try_emplace(f, next);
        if (fresh) {
          binding.emplace(next, f);
          ++next;
        }
        return Formula::var(it->second);
      }
      case Kind::And: {
        auto l = run(f.left());
        return Formula::conj(std::move(l), run(f.right()));
      }
      case Kind::Or: {
        auto l = run(f.left());
        return Formula::disj(std::move(l), run(f.right()));
      }
      case Kind::Implies: {
        auto l = run(f.left());
        return Formula::implies(std::move(l), run(f.right()));
      }
    }
    return f;
  }
};

}  // namespace

ModalAbstraction abstract_modal(const Formula& f) {
  Abstractor a{f.var_bound(), {}, {}};
  Formula skeleton = a.run(f);
  return {std::move(skeleton), std::move(a.binding)};
}

namespace {

void collect_vars(const Formula& f, std::vector<VarIndex>& out) {
  if (f.kind() == Kind::Var) {
    out.push_back(f.var_index());
    return;
  }
  if (f.kind() == Kind::Bottom) return;
  collect_vars(f.left(), out);
  if (f.is_binary()) collect_vars(f.right(), out);
}

}  // namespace

std::vector<VarIndex> variables(const Formula& f) { return variables(std::vector<Formula>{f}); }

std::vector<VarIndex> variables(const std::vector<Formula>& fs) {
  std::vector<VarIndex> out;
  for (const auto& f : fs) collect_vars(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    if (g.kind() != Kind::Var && g.kind() != Kind::Bottom) {
      walk(g.left());
      if (g.is_binary()) walk(g.right());
    }
    seen.insert(g);
    out.push_back(g);
  };
  walk(f);
  return out;
}

Formula conjunction(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::top();
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

}  // namespace elw
