#include "elw/models.hpp"

namespace elw {

namespace {

template <typename BoxFn>
Elem evaluate(const HeytingAlgebra& h, const std::vector<Elem>& know, BoxFn box, const Assignment& gamma,
              const Formula& f) {
  auto rec = [&](auto&& self, const Formula& g) -> Elem {
    switch (g.kind()) {
      case Kind::Var:
        if (g.var_index() >= gamma.size()) {
          throw EvalError("variable x" + std::to_string(g.var_index()) + " is not assigned");
        }
        return gamma[g.var_index()];
      case Kind::Bottom:
        return h.bot();
      case Kind::And:
        return h.meet(self(self, g.left()), self(self, g.right()));
      case Kind::Or:
        return h.join(self(self, g.left()), self(self, g.right()));
      case Kind::Implies:
        return h.imp(self(self, g.left()), self(self, g.right()));
      case Kind::Box:
        return box(self(self, g.inner()));
      case Kind::Know:
        return know[self(self, g.inner())];
    }
    return h.bot();
  };
  for (Elem v : gamma) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.size()) {
      throw EvalError("assigned element " + std::to_string(v) + " is out of range");
    }
  }
  return rec(rec, f);
}

bool next_assignment(Assignment& g, const std::vector<VarIndex>& vars, std::size_t size) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (static_cast<std::size_t>(++g[*it]) < size) return true;
    g[*it] = 0;
  }
  return false;
}

}  // namespace

Elem eval(const ElModel& m, const Assignment& gamma, const Formula& f) {
  return evaluate(*m.algebra, m.know, [&](Elem e) { return m.box[e]; }, gamma, f);
}

Elem eval(const IelModel& m, const Assignment& gamma, const Formula& f) {
  return evaluate(
      *m.algebra, m.know,
      [](Elem) -> Elem { throw EvalError("box does not occur in the language of IEL models"); }, gamma, f);
}

Elem eval(const Model& m, const Assignment& gamma, const Formula& f) {
  return std::visit([&](const auto& model) { return eval(model, gamma, f); }, m);
}

bool satisfies(const Model& m, const Assignment& gamma, const Formula& f) {
  const Elem v = eval(m, gamma, f);
  if (const auto* el = std::get_if<ElModel>(&m)) return el->algebra->leq(el->true_gen, v);
  return v == algebra_of(m).top();
}

std::optional<Assignment> falsifying_assignment(const Model& m, const Formula& f) {
  const auto vars = variables(f);
  Assignment g(f.var_bound(), 0);
  const std::size_t size = algebra_of(m).size();
  do {
    if (!satisfies(m, g, f)) return g;
  } while (next_assignment(g, vars, size));
  return std::nullopt;
}

bool valid_in_model(const Model& m, const Formula& f) { return !falsifying_assignment(m, f); }

}  // namespace elw
