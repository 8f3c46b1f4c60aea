#include "elw/proof.hpp"

namespace elw {

std::size_t ProofBuilder::push(Formula f, Justification j) {
  script_.lines.push_back({std::move(f), j});
  return script_.lines.size();
}

const Formula& ProofBuilder::formula(std::size_t line) const {
  if (line < 1 || line > script_.lines.size()) {
    throw std::out_of_range("no proof line " + std::to_string(line));
  }
  return script_.lines[line - 1].formula;
}

std::size_t ProofBuilder::hypothesis(const Formula& f) {
  script_.hypotheses.push_back(f);
  return push(f, Justification::hypothesis(script_.hypotheses.size()));
}

std::size_t ProofBuilder::axiom(Axiom a, const Formula& f) { return push(f, Justification::by_axiom(a)); }

std::size_t ProofBuilder::tertium(const Formula& f) {
  return push(Formula::disj(f, Formula::neg(f)), Justification::tertium());
}

std::size_t ProofBuilder::mp(std::size_t premise, std::size_t implication) {
  const Formula& imp = formula(implication);
  if (imp.kind() != Kind::Implies || !(imp.left() == formula(premise))) {
    throw std::logic_error("mp: line " + std::to_string(implication) +
                           " is not an implication from line " + std::to_string(premise));
  }
  return push(imp.right(), Justification::modus_ponens(premise, implication));
}

std::size_t ProofBuilder::an(std::size_t line) {
  return push(Formula::box(formula(line)), Justification::necessitation(line));
}

std::size_t ProofBuilder::by_int(const std::vector<std::size_t>& premises, const Formula& goal) {
  Formula glue = goal;
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) glue = Formula::implies(formula(*it), glue);
  std::size_t last = axiom(Axiom::INT, glue);
  for (std::size_t p : premises) last = mp(p, last);
  return last;
}

std::size_t ProofBuilder::k_axiom(const Formula& a, const Formula& b) {
  using F = Formula;
  const F imp = F::implies(a, b);
  const F boxes = F::implies(F::box(a), F::box(b));
  const std::size_t a3 = axiom(Axiom::A3, F::implies(F::box(imp), F::box(boxes)));
  const std::size_t a2 = axiom(Axiom::A2, F::implies(F::box(boxes), boxes));
  return by_int({a3, a2}, F::implies(F::box(imp), boxes));
}

std::size_t ProofBuilder::k_apply(std::size_t boxed_implication) {
  const Formula& f = formula(boxed_implication);
  if (f.kind() != Kind::Box || f.inner().kind() != Kind::Implies) {
    throw std::logic_error("k_apply: line " + std::to_string(boxed_implication) +
                           " is not a boxed implication");
  }
  const Formula a = f.inner().left(), b = f.inner().right();
  return mp(boxed_implication, k_axiom(a, b));
}

std::size_t ProofBuilder::necessitate_int(const Formula& f) { return an(axiom(Axiom::INT, f)); }

}  // namespace elw
