#include "elw/ipc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "prover.hpp"

namespace elw {

namespace {

void require_propositional(const Formula& f) {
  if (!f.is_propositional()) {
    throw DomainError("IPC query contains a modal operator: " + render(f));
  }
}

std::vector<bool> truth_set(const KripkeModel& k, const Formula& f) {
  const std::size_t n = k.worlds;
  std::vector<bool> out(n, false);
  switch (f.kind()) {
    case Kind::Var:
      for (std::size_t w = 0; w < n; ++w) out[w] = k.holds(f.var_index(), w);
      return out;
    case Kind::Bottom:
      return out;
    case Kind::And:
    case Kind::Or: {
      const auto l = truth_set(k, f.left());
      const auto r = truth_set(k, f.right());
      for (std::size_t w = 0; w < n; ++w) {
        out[w] = f.kind() == Kind::And ? (l[w] && r[w]) : (l[w] || r[w]);
      }
      return out;
    }
    case Kind::Implies: {
      const auto l = truth_set(k, f.left());
      const auto r = truth_set(k, f.right());
      for (std::size_t w = 0; w < n; ++w) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
          if (k.leq(w, v) && l[v] && !r[v]) ok = false;
        }
        out[w] = ok;
      }
      return out;
    }
    case Kind::Box:
    case Kind::Know:
      break;
  }
  throw DomainError("Kripke forcing is defined for propositional formulas only: " + render(f));
}

bool refutes(const KripkeModel& k, const std::vector<Formula>& premises, const Formula& goal) {
  for (const auto& p : premises) {
    if (!forces(k, k.root, p)) return false;
  }
  return !forces(k, k.root, goal);
}

KripkeModel restrict_to(const KripkeModel& k, const std::vector<std::size_t>& keep,
                        std::size_t new_root) {
  KripkeModel out;
  out.worlds = keep.size();
  out.order.assign(out.worlds * out.worlds, false);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.order[i * out.worlds + j] = k.leq(keep[i], keep[j]);
    }
  }
  out.root = new_root;
  out.valuation.resize(k.valuation.size());
  for (std::size_t x = 0; x < k.valuation.size(); ++x) {
    out.valuation[x].resize(out.worlds);
    for (std::size_t i = 0; i < keep.size(); ++i) out.valuation[x][i] = k.valuation[x][keep[i]];
  }
  return out;
}

// Greedily drops non-root worlds while the model still refutes the query.
KripkeModel minimize(KripkeModel k, const std::vector<Formula>& premises, const Formula& goal) {
  for (std::size_t w = k.worlds; w-- > 0;) {
    if (w == k.root || k.worlds == 1) continue;
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < k.worlds; ++v) {
      if (v != w) keep.push_back(v);
    }
    const std::size_t new_root = k.root > w ? k.root - 1 : k.root;
    KripkeModel candidate = restrict_to(k, keep, new_root);
    if (refutes(candidate, premises, goal)) k = std::move(candidate);
  }
  return k;
}

std::vector<Formula> closure_of(const std::vector<Formula>& premises, const Formula& goal) {
  std::vector<Formula> sub;
  std::unordered_map<Formula, bool, FormulaHash> seen;
  auto add_all = [&](const Formula& f) {
    for (auto& s : subformulas(f)) {
      if (seen.emplace(s, true).second) sub.push_back(s);
    }
  };
  for (const auto& p : premises) add_all(p);
  add_all(goal);
  return sub;
}

// Builds a finite model from saturated subsets of the subformula closure: each
// world is a maximal subset not deriving some target, so membership coincides
// with forcing for every closure formula.
KripkeModel saturation_model(detail::Prover& prover, const std::vector<Formula>& premises,
                             const Formula& goal, const IpcLimits& limits) {
  const std::vector<Formula> sub = closure_of(premises, goal);
  std::vector<detail::Prover::Term> terms;
  terms.reserve(sub.size());
  for (const auto& s : sub) terms.push_back(prover.intern(s));
  std::unordered_map<Formula, std::size_t, FormulaHash> position;
  for (std::size_t i = 0; i < sub.size(); ++i) position.emplace(sub[i], i);

  using Members = std::vector<bool>;
  auto saturate = [&](Members base, detail::Prover::Term target) {
    std::vector<detail::Prover::Term> ctx;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (base[i]) ctx.push_back(terms[i]);
    }
    for (std::size_t i = 0; i < sub.size(); ++i) {
      if (base[i]) continue;
      auto trial = ctx;
      trial.push_back(terms[i]);
      if (!prover.prove(trial, target)) {
        base[i] = true;
        ctx.push_back(terms[i]);
      }
    }
    return base;
  };

  const std::size_t cap = sub.size() >= 63
                              ? limits.max_worlds
                              : std::min<std::size_t>(std::size_t{1} << sub.size(), limits.max_worlds);
  std::vector<Members> worlds;
  std::map<Members, std::size_t> index;
  std::deque<std::size_t> pending;
  auto add_world = [&](Members m) {
    auto [it, fresh] = index.try_emplace(m, worlds.size());
    if (fresh) {
      if (worlds.size() >= cap) {
        throw BudgetExceeded("countermodel construction exceeded " + std::to_string(cap) +
                             " worlds");
      }
      worlds.push_back(std::move(m));
      pending.push_back(it->second);
    }
  };

  Members root_base(sub.size(), false);
  for (const auto& p : premises) root_base[position.at(p)] = true;
  add_world(saturate(root_base, prover.intern(goal)));

  while (!pending.empty()) {
    const std::size_t w = pending.front();
    pending.pop_front();
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const Formula& s = sub[i];
      if (s.kind() != Kind::Implies || worlds[w][i]) continue;
      Members base = worlds[w];
      base[position.at(s.left())] = true;
      add_world(saturate(std::move(base), terms[position.at(s.right())]));
    }
  }

  KripkeModel k;
  k.worlds = worlds.size();
  k.root = 0;
  k.order.assign(k.worlds * k.worlds, false);
  for (std::size_t v = 0; v < k.worlds; ++v) {
    for (std::size_t w = 0; w < k.worlds; ++w) {
      bool subset = true;
      for (std::size_t i = 0; i < sub.size() && subset; ++i) {
        if (worlds[v][i] && !worlds[w][i]) subset = false;
      }
      k.order[v * k.worlds + w] = subset;
    }
  }
  VarIndex bound = goal.var_bound();
  for (const auto& p : premises) bound = std::max(bound, p.var_bound());
  k.valuation.assign(bound, std::vector<bool>(k.worlds, false));
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i].kind() != Kind::Var) continue;
    for (std::size_t w = 0; w < k.worlds; ++w) k.valuation[sub[i].var_index()][w] = worlds[w][i];
  }
  return k;
}

}  // namespace

std::string kripke_defect(const KripkeModel& k) {
  const std::size_t n = k.worlds;
  if (n == 0) return "model has no worlds";
  if (k.order.size() != n * n) return "order table has the wrong size";
  if (k.root >= n) return "root is not a world";
  for (std::size_t w = 0; w < n; ++w) {
    if (!k.leq(w, w)) return "order is not reflexive at world " + std::to_string(w);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!k.leq(u, v)) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (k.leq(v, w) && !k.leq(u, w)) {
          return "order is not transitive at worlds " + std::to_string(u) + ", " +
                 std::to_string(v) + ", " + std::to_string(w);
        }
      }
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (!k.leq(k.root, w)) return "root does not reach world " + std::to_string(w);
  }
  for (std::size_t x = 0; x < k.valuation.size(); ++x) {
    if (k.valuation[x].size() != n) return "valuation of x" + std::to_string(x) + " has the wrong size";
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) {
        if (k.leq(v, w) && k.valuation[x][v] && !k.valuation[x][w]) {
          return "valuation of x" + std::to_string(x) + " is not persistent";
        }
      }
    }
  }
  return {};
}

bool forces(const KripkeModel& k, std::size_t world, const Formula& f) {
  return truth_set(k, f)[world];
}

KripkeModel cone(const KripkeModel& k, std::size_t w) {
  std::vector<std::size_t> keep;
  std::size_t new_root = 0;
  for (std::size_t v = 0; v < k.worlds; ++v) {
    if (!k.leq(w, v)) continue;
    if (v == w) new_root = keep.size();
    keep.push_back(v);
  }
  return restrict_to(k, keep, new_root);
}

std::size_t finite_model_bound(const Formula& f, const IpcLimits& limits) {
  const std::size_t n = subformulas(f).size();
  if (n >= 63) return limits.max_worlds;
  return std::min<std::size_t>(std::size_t{1} << n, limits.max_worlds);
}

bool ipc_valid(const Formula& f, const IpcLimits& limits) {
  return ipc_consequence({}, f, limits);
}

bool ipc_consequence(const std::vector<Formula>& premises, const Formula& goal,
                     const IpcLimits& limits) {
  for (const auto& p : premises) require_propositional(p);
  require_propositional(goal);
  detail::Prover prover(limits.max_steps);
  std::vector<detail::Prover::Term> ctx;
  for (const auto& p : premises) ctx.push_back(prover.intern(p));
  return prover.prove(std::move(ctx), prover.intern(goal));
}

std::optional<KripkeModel> ipc_countermodel(const Formula& f, const IpcLimits& limits) {
  return ipc_consequence_countermodel({}, f, limits);
}

std::optional<KripkeModel> ipc_consequence_countermodel(const std::vector<Formula>& premises,
                                                        const Formula& goal,
                                                        const IpcLimits& limits) {
  for (const auto& p : premises) require_propositional(p);
  require_propositional(goal);
  detail::Prover prover(limits.max_steps);
  std::vector<detail::Prover::Term> ctx;
  for (const auto& p : premises) ctx.push_back(prover.intern(p));
  if (prover.prove(ctx, prover.intern(goal))) return std::nullopt;
  KripkeModel k = saturation_model(prover, premises, goal, limits);
  return minimize(std::move(k), premises, goal);
}

std::string describe(const KripkeModel& k) {
  std::ostringstream os;
  os << "worlds: " << k.worlds << " (root w" << k.root << ")\n";
  os << "order:";
  bool any = false;
  for (std::size_t v = 0; v < k.worlds; ++v) {
    for (std::size_t w = 0; w < k.worlds; ++w) {
      if (v != w && k.leq(v, w)) {
        os << " w" << v << "<=w" << w;
        any = true;
      }
    }
  }
  if (!any) os << " (discrete)";
  os << '\n';
  for (std::size_t w = 0; w < k.worlds; ++w) {
    os << "w" << w << ":";
    bool some = false;
    for (std::size_t x = 0; x < k.valuation.size(); ++x) {
      if (k.valuation[x][w]) {
        os << " x" << x;
        some = true;
      }
    }
    if (!some) os << " (nothing)";
    os << '\n';
  }
  return os.str();
}

}  // namespace elw
