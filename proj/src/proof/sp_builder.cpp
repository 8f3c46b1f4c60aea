#include <algorithm>

#include "elw/proof.hpp"

namespace elw {

namespace {

using F = Formula;

class SpBuilder {
 public:
  SpBuilder(const Formula& phi, const Formula& psi, VarIndex x)
      : x_(x), left_{{x, phi}}, right_{{x, psi}}, hyp_(F::ident(phi, psi)) {}

  // Derives E -> (chi[x:=phi] == chi[x:=psi]) and returns its line.
  std::size_t derive(const Formula& chi) {
    const auto vars = variables(chi);
    if (!std::binary_search(vars.begin(), vars.end(), x_)) return constant(chi);
    switch (chi.kind()) {
      case Kind::Var:
        return b_.by_int({}, F::implies(hyp_, hyp_));
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        return binary(chi);
      case Kind::Box:
        return box(chi);
      case Kind::Know:
        return know(chi);
      case Kind::Bottom:
        break;
    }
    throw std::logic_error("sp: unexpected formula");
  }

  ProofScript build() const { return b_.build(); }

 private:
  Formula lhs(const Formula& f) const { return substitute(f, left_); }
  Formula rhs(const Formula& f) const { return substitute(f, right_); }
  Formula goal(const Formula& chi) const { return F::implies(hyp_, F::ident(lhs(chi), rhs(chi))); }

  std::size_t constant(const Formula& chi) {
    const std::size_t boxed = b_.necessitate_int(F::implies(chi, chi));
    return b_.by_int({boxed}, F::implies(hyp_, F::ident(chi, chi)));
  }

  // box(c1 -> c2) from box(a1 -> a2), box(a2 -> a1), box(b1 -> b2), box(b2 -> b1)
  // through a necessitated curried IPC theorem and four K steps.
  std::size_t boxed_step(const std::vector<Formula>& antecedents, const Formula& consequent,
                         std::vector<std::size_t>& premises) {
    Formula curried = consequent;
    for (auto it = antecedents.rbegin(); it != antecedents.rend(); ++it) curried = F::implies(*it, curried);
    premises.push_back(b_.necessitate_int(curried));
    Formula rest = curried;
    for (std::size_t i = 0; i < antecedents.size(); ++i) {
      premises.push_back(b_.k_axiom(rest.left(), rest.right()));
      rest = rest.right();
    }
    return premises.back();
  }

  std::size_t binary(const Formula& chi) {
    const std::size_t da = derive(chi.left());
    const std::size_t db = derive(chi.right());
    const F a1 = lhs(chi.left()), a2 = rhs(chi.left());
    const F b1 = lhs(chi.right()), b2 = rhs(chi.right());
    const F c1 = lhs(chi), c2 = rhs(chi);
    const std::vector<F> ante{F::implies(a1, a2), F::implies(a2, a1), F::implies(b1, b2), F::implies(b2, b1)};
    std::vector<std::size_t> premises{da, db};
    boxed_step(ante, F::implies(c1, c2), premises);
    boxed_step(ante, F::implies(c2, c1), premises);
    return b_.by_int(premises, goal(chi));
  }

  std::size_t box(const Formula& chi) {
    const std::size_t da = derive(chi.inner());
    const F a1 = lhs(chi.inner()), a2 = rhs(chi.inner());
    auto a3 = [&](const F& p, const F& q) {
      return b_.axiom(Axiom::A3, F::implies(F::box(F::implies(p, q)),
                                            F::box(F::implies(F::box(p), F::box(q)))));
    };
    const std::size_t fwd = a3(a1, a2);
    const std::size_t bwd = a3(a2, a1);
    return b_.by_int({da, fwd, bwd}, goal(chi));
  }

  std::size_t know(const Formula& chi) {
    const std::size_t da = derive(chi.inner());
    const F a1 = lhs(chi.inner()), a2 = rhs(chi.inner());
    std::vector<std::size_t> premises{da};
    auto direction = [&](const F& p, const F& q) {
      const F imp = F::implies(p, q);
      premises.push_back(b_.axiom(Axiom::A7, F::implies(F::box(imp), F::box(F::know(imp)))));
      const F dist = F::implies(F::know(imp), F::implies(F::know(p), F::know(q)));
      premises.push_back(b_.an(b_.axiom(Axiom::A6, dist)));
      premises.push_back(b_.k_axiom(dist.left(), dist.right()));
    };
    direction(a1, a2);
    direction(a2, a1);
    return b_.by_int(premises, goal(chi));
  }

  VarIndex x_;
  Substitution left_, right_;
  Formula hyp_;
  ProofBuilder b_;
};

}  // namespace

Formula sp_instance(const Formula& phi, const Formula& psi, const Formula& chi, VarIndex x) {
  return F::implies(F::ident(phi, psi),
                    F::ident(substitute(chi, {{x, phi}}), substitute(chi, {{x, psi}})));
}

ProofScript build_sp_proof(const Formula& phi, const Formula& psi, const Formula& chi, VarIndex x) {
  SpBuilder sp(phi, psi, x);
  sp.derive(chi);
  return sp.build();
}

}  // namespace elw
