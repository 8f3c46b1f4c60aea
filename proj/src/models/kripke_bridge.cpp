#include <map>

#include "elw/models.hpp"

namespace elw {

namespace {

// Up-set lattice of k's frame with mutually accessible worlds merged.
struct UpsetAlgebra {
  std::shared_ptr<const HeytingAlgebra> algebra;
  std::vector<int> cluster_of;
  std::map<std::uint64_t, Elem> element_of;

  Elem truth_set(const std::vector<bool>& holds) const {
    std::uint64_t mask = 0;
    for (std::size_t w = 0; w < holds.size(); ++w) {
      if (holds[w]) mask |= std::uint64_t{1} << cluster_of[w];
    }
    return element_of.at(mask);
  }
};

UpsetAlgebra upset_algebra(const KripkeModel& k) {
  UpsetAlgebra out;
  out.cluster_of.assign(k.worlds, -1);
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < k.worlds; ++w) {
    if (out.cluster_of[w] >= 0) continue;
    out.cluster_of[w] = static_cast<int>(reps.size());
    for (std::size_t v = w + 1; v < k.worlds; ++v) {
      if (k.leq(w, v) && k.leq(v, w)) out.cluster_of[v] = static_cast<int>(reps.size());
    }
    reps.push_back(w);
  }
  const std::size_t c = reps.size();
  if (c > 63) throw DomainError("Kripke model has too many worlds for the up-set lattice");
  // Reversed order, so its down-sets are the up-sets of k.
  std::vector<bool> dual(c * c, false);
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) dual[a * c + b] = k.leq(reps[b], reps[a]);
  }
  out.algebra = std::make_shared<const HeytingAlgebra>(downset_lattice(Poset(c, std::move(dual))));
  const auto& labels = out.algebra->labels();
  for (std::size_t e = 0; e < labels.size(); ++e) out.element_of[labels[e]] = static_cast<Elem>(e);
  return out;
}

bool refutes_boxed_disjunction(const Countermodel& c, const Formula& phi, const Formula& psi) {
  return !satisfies(c.model, c.gamma, Formula::disj(Formula::box(phi), Formula::box(psi)));
}

KripkeModel join_under_root(const KripkeModel& a, const KripkeModel& b) {
  KripkeModel k;
  k.worlds = 1 + a.worlds + b.worlds;
  k.root = 0;
  k.order.assign(k.worlds * k.worlds, false);
  for (std::size_t w = 0; w < k.worlds; ++w) {
    k.order[w] = true;
    k.order[w * k.worlds + w] = true;
  }
  for (std::size_t v = 0; v < a.worlds; ++v) {
    for (std::size_t w = 0; w < a.worlds; ++w) k.order[(1 + v) * k.worlds + 1 + w] = a.leq(v, w);
  }
  const std::size_t off = 1 + a.worlds;
  for (std::size_t v = 0; v < b.worlds; ++v) {
    for (std::size_t w = 0; w < b.worlds; ++w) k.order[(off + v) * k.worlds + off + w] = b.leq(v, w);
  }
  k.valuation.assign(std::max(a.valuation.size(), b.valuation.size()), std::vector<bool>(k.worlds, false));
  for (std::size_t x = 0; x < k.valuation.size(); ++x) {
    for (std::size_t w = 0; w < a.worlds; ++w) k.valuation[x][1 + w] = a.holds(static_cast<VarIndex>(x), w);
    for (std::size_t w = 0; w < b.worlds; ++w) k.valuation[x][off + w] = b.holds(static_cast<VarIndex>(x), w);
  }
  return k;
}

}  // namespace

Countermodel kripke_to_el5(const KripkeModel& k) {
  if (auto defect = kripke_defect(k); !defect.empty()) throw DomainError("not a rooted Kripke model: " + defect);
  const UpsetAlgebra ups = upset_algebra(k);
  const HeytingAlgebra& h = *ups.algebra;

  // A maximal world w: the up-sets containing w form an ultrafilter.
  std::size_t top_world = 0;
  for (std::size_t w = 0; w < k.worlds; ++w) {
    bool maximal = true;
    for (std::size_t v = 0; v < k.worlds && maximal; ++v) {
      if (k.leq(w, v) && !k.leq(v, w)) maximal = false;
    }
    if (maximal) {
      top_world = w;
      break;
    }
  }
  std::vector<bool> singleton(k.worlds, false);
  for (std::size_t w = 0; w < k.worlds; ++w) singleton[w] = k.leq(top_world, w);

  ElModel m;
  m.algebra = ups.algebra;
  m.true_gen = ups.truth_set(singleton);
  m.bel.assign(h.size(), false);
  m.bel[h.top()] = true;
  m.box.assign(h.size(), h.bot());
  m.box[h.top()] = h.top();
  m.know = m.box;
  m.cls = LogicId::EL5;

  Assignment gamma(k.valuation.size(), h.bot());
  for (std::size_t x = 0; x < k.valuation.size(); ++x) gamma[x] = ups.truth_set(k.valuation[x]);
  return Countermodel{std::move(m), std::move(gamma)};
}

EmbeddingReport embedding_crosscheck(const std::vector<Formula>& premises, const Formula& chi,
                                     const SearchBudget& budget) {
  EmbeddingReport r;
  r.ipc_consequence = ipc_consequence(premises, chi);

  std::vector<Formula> boxed;
  for (const auto& p : premises) boxed.push_back(Formula::box(p));
  const Formula query = Formula::implies(conjunction(boxed), Formula::box(chi));
  auto refutes = [&](const Countermodel& c) {
    for (const auto& b : boxed) {
      if (!satisfies(c.model, c.gamma, b)) return false;
    }
    return !satisfies(c.model, c.gamma, Formula::box(chi));
  };

  const auto search = find_countermodel(query, LogicId::EL5, budget);
  r.budget_exhausted = search.stats.budget_exhausted;
  if (search.found && refutes(*search.found)) r.search_hit = search.found;

  if (!r.ipc_consequence) {
    if (auto k = ipc_consequence_countermodel(premises, chi)) {
      auto c = kripke_to_el5(*k);
      // The Kripke valuation may leave out variables of the query.
      c.gamma.resize(std::max<std::size_t>(c.gamma.size(), query.var_bound()),
                     std::get<ElModel>(c.model).algebra->bot());
      if (validate_model(c.model).ok() && refutes(c)) r.refutation = std::move(c);
    }
    r.agreement = r.refutation.has_value();
    r.detail = r.agreement ? "IPC refutes; explicit EL5 refutation built from the Kripke countermodel"
                           : "IPC refutes, but no explicit EL5 refutation was produced";
  } else {
    r.agreement = !r.search_hit.has_value();
    r.detail = r.agreement ? "IPC proves; no EL5 refutation found"
                           : "IPC proves, yet model search found an EL5 refutation";
  }
  return r;
}

DisjunctionReport restricted_dp_check(const Formula& phi, const Formula& psi) {
  DisjunctionReport r;
  if (ipc_valid(phi) || ipc_valid(psi)) {
    r.detail = "a disjunct is an IPC theorem; no refutation claimed";
    return r;
  }
  r.attempted = true;
  const KripkeModel a = *ipc_countermodel(phi);
  KripkeModel k = a;
  if (forces(a, a.root, psi)) {
    k = join_under_root(a, *ipc_countermodel(psi));
    r.joined = true;
  }
  auto c = kripke_to_el5(k);
  c.gamma.resize(std::max<std::size_t>({c.gamma.size(), phi.var_bound(), psi.var_bound()}),
                 std::get<ElModel>(c.model).algebra->bot());
  if (validate_model(c.model).ok() && refutes_boxed_disjunction(c, phi, psi)) {
    r.refutation = std::move(c);
    r.detail = r.joined ? "refuted on two countermodels joined under a fresh root"
                        : "refuted on a single countermodel of both formulas";
  } else {
    r.detail = "construction did not refute the boxed disjunction";
  }
  return r;
}

}  // namespace elw
