#include "prover.hpp"

#include <algorithm>

#include "elw/ipc.hpp"

namespace elw::detail {

namespace {

using Ctx = std::vector<Prover::Term>;

bool contains(const Ctx& ctx, Prover::Term t) { return std::binary_search(ctx.begin(), ctx.end(), t); }

Ctx with(Ctx ctx, std::initializer_list<Prover::Term> add) {
  ctx.insert(ctx.end(), add.begin(), add.end());
  std::sort(ctx.begin(), ctx.end());
  ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
  return ctx;
}

Ctx without(const Ctx& ctx, std::size_t i) {
  Ctx out;
  out.reserve(ctx.size());
  for (std::size_t j = 0; j < ctx.size(); ++j) {
    if (j != i) out.push_back(ctx[j]);
  }
  return out;
}

}  // namespace

std::size_t Prover::KeyHash::operator()(const std::vector<Term>& v) const {
  std::size_t h = v.size();
  for (Term t : v) h ^= static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Prover::Prover(std::size_t max_steps) : max_steps_(max_steps) {
  bottom_ = make(Kind::Bottom, 0, -1, -1);
}

Prover::Term Prover::make(Kind kind, VarIndex var, Term a, Term b) {
  std::vector<Term> key{static_cast<Term>(kind), static_cast<Term>(var), a, b};
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  const Term id = static_cast<Term>(nodes_.size());
  nodes_.push_back({kind, var, a, b});
  index_.emplace(std::move(key), id);
  return id;
}

Prover::Term Prover::intern(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return make(Kind::Var, f.var_index(), -1, -1);
    case Kind::Bottom:
      return bottom_;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      const Term a = intern(f.left());
      const Term b = intern(f.right());
      return make(f.kind(), 0, a, b);
    }
    case Kind::Box:
    case Kind::Know:
      break;
  }
  throw DomainError("IPC query contains a modal operator: " + render(f));
}

bool Prover::prove(std::vector<Term> context, Term goal) {
  std::sort(context.begin(), context.end());
  context.erase(std::unique(context.begin(), context.end()), context.end());
  if (++steps_ > max_steps_) {
    throw BudgetExceeded("IPC proof search exceeded " + std::to_string(max_steps_) + " steps");
  }
  std::vector<Term> key = context;
  key.push_back(-1);
  key.push_back(goal);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool result = search(context, goal);
  memo_.emplace(std::move(key), result);
  return result;
}

bool Prover::search(const Ctx& ctx, Term goal) {
  if (contains(ctx, bottom_) || contains(ctx, goal)) return true;

  // Invertible left rules.
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Node n = nodes_[ctx[i]];
    if (n.kind == Kind::And) return prove(with(without(ctx, i), {n.a, n.b}), goal);
    if (n.kind == Kind::Or) {
      return prove(with(without(ctx, i), {n.a}), goal) && prove(with(without(ctx, i), {n.b}), goal);
    }
    if (n.kind != Kind::Implies) continue;
    const Node ant = nodes_[n.a];
    switch (ant.kind) {
      case Kind::Bottom:
        return prove(without(ctx, i), goal);
      case Kind::Var:
        if (contains(ctx, n.a)) return prove(with(without(ctx, i), {n.b}), goal);
        break;
      case Kind::And: {
        const Term curried = make(Kind::Implies, 0, ant.a, make(Kind::Implies, 0, ant.b, n.b));
        return prove(with(without(ctx, i), {curried}), goal);
      }
      case Kind::Or: {
        const Term l = make(Kind::Implies, 0, ant.a, n.b);
        const Term r = make(Kind::Implies, 0, ant.b, n.b);
        return prove(with(without(ctx, i), {l, r}), goal);
      }
      default:
        break;
    }
  }

  // Invertible right rules.
  const Node g = nodes_[goal];
  if (g.kind == Kind::And) return prove(ctx, g.a) && prove(ctx, g.b);
  if (g.kind == Kind::Implies) return prove(with(ctx, {g.a}), g.b);

  // Non-invertible rules: disjunction on the right, nested implication on the left.
  if (g.kind == Kind::Or && (prove(ctx, g.a) || prove(ctx, g.b))) return true;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const Node n = nodes_[ctx[i]];
    if (n.kind != Kind::Implies) continue;
    const Node ant = nodes_[n.a];
    if (ant.kind != Kind::Implies) continue;
    const Ctx rest = without(ctx, i);
    const Term inner = make(Kind::Implies, 0, ant.b, n.b);
    if (prove(with(rest, {inner}), n.a) && prove(with(rest, {n.b}), goal)) return true;
  }
  return false;
}

}  // namespace elw::detail
