#include <random>

#include "doctest.h"
#include "elw/heyting.hpp"
#include "elw/ipc.hpp"
#include "oracles.hpp"

using namespace elw;
using F = Formula;

namespace {

// Every subformula of f has an up-closed truth set in k.
bool persistent_for(const KripkeModel& k, const F& f) {
  for (const auto& g : subformulas(f)) {
    for (std::size_t v = 0; v < k.worlds; ++v) {
      for (std::size_t w = 0; w < k.worlds; ++w) {
        if (k.leq(v, w) && forces(k, v, g) && !forces(k, w, g)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("ipc_valid examples") {
  CHECK(ipc_valid(parse("x0 -> x0")));
  CHECK_FALSE(ipc_valid(parse("((x0 -> x1) -> x0) -> x0")));
  CHECK(oracle::kripke_refutable(parse("((x0 -> x1) -> x0) -> x0"), 2));
  CHECK(ipc_valid(parse("~~(x0 | ~x0)")));
  CHECK_FALSE(ipc_valid(parse("x0 | ~x0")));
  CHECK_FALSE(ipc_valid(parse("~~x0 -> x0")));
  CHECK(ipc_valid(parse("((x0 -> x1) & (x2 -> x3)) -> ((x0 | x2) -> (x1 | x3))")));
  CHECK(ipc_valid(parse("false -> x0")));
  CHECK(ipc_valid(parse("true")));
  CHECK_THROWS_AS(ipc_valid(parse("box x0 -> x0")), DomainError);
}

TEST_CASE("ipc_consequence examples") {
  CHECK(ipc_consequence({parse("x0"), parse("x0 -> x1")}, parse("x1")));
  CHECK_FALSE(ipc_consequence({}, parse("x0 | ~x0")));
  CHECK_FALSE(ipc_consequence({parse("x0 | x1")}, parse("x0")));
  CHECK(ipc_consequence({}, parse("x0 -> x0")) == ipc_valid(parse("x0 -> x0")));
}

TEST_CASE("ipc_countermodel examples") {
  auto k = ipc_countermodel(parse("x0 | ~x0"));
  REQUIRE(k);
  CHECK(kripke_defect(*k).empty());
  CHECK(k->worlds == 2);
  CHECK_FALSE(forces(*k, k->root, parse("x0")));
  CHECK_FALSE(forces(*k, k->root, parse("~x0")));
  CHECK_FALSE(ipc_countermodel(parse("x0 -> x0")));
  k = ipc_countermodel(parse("~~x0 -> x0"));
  REQUIRE(k);
  CHECK(k->worlds == 2);
  CHECK_FALSE(forces(*k, k->root, parse("~~x0 -> x0")));

  auto c = ipc_consequence_countermodel({parse("x0 | x1")}, parse("x0"));
  REQUIRE(c);
  CHECK(forces(*c, c->root, parse("x0 | x1")));
  CHECK_FALSE(forces(*c, c->root, parse("x0")));
}

TEST_CASE("decision agrees with Kripke brute force on random formulas") {
  std::mt19937_64 rng(2024);
  int valid = 0;
  for (int i = 0; i < 400; ++i) {
    const F f = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 9), 3, false);
    CAPTURE(render(f));
    const bool v = ipc_valid(f);
    valid += v;
    // Four worlds suffice for these sizes; more only makes the oracle slower.
    CHECK(v == !oracle::kripke_refutable(f, 4));
    auto k = ipc_countermodel(f);
    CHECK(k.has_value() == !v);
    if (k) {
      CHECK(kripke_defect(*k).empty());
      CHECK(k->worlds <= finite_model_bound(f));
      CHECK_FALSE(forces(*k, k->root, f));
      CHECK(persistent_for(*k, f));
    }
  }
  CHECK(valid > 20);
}

TEST_CASE("IPC theorems evaluate to top in every small Heyting algebra") {
  const auto algebras = enumerate_algebras(3);
  std::mt19937_64 rng(99);
  int theorems = 0;
  for (int i = 0; i < 600 && theorems < 60; ++i) {
    const F f = oracle::random_formula(rng, 3 + static_cast<int>(rng() % 8), 2, false);
    if (!ipc_valid(f)) continue;
    ++theorems;
    for (const auto& h : algebras) {
      auto eval = [&](auto&& self, const F& g, const std::vector<int>& gamma) -> Elem {
        switch (g.kind()) {
          case Kind::Var: return gamma[g.var_index()];
          case Kind::Bottom: return h.bot();
          case Kind::And: return h.meet(self(self, g.left(), gamma), self(self, g.right(), gamma));
          case Kind::Or: return h.join(self(self, g.left(), gamma), self(self, g.right(), gamma));
          case Kind::Implies: return h.imp(self(self, g.left(), gamma), self(self, g.right(), gamma));
          default: throw std::logic_error("modal");
        }
      };
      oracle::for_each_assignment(variables(f), h.size(), [&](const std::vector<int>& gamma) {
        CHECK(eval(eval, f, gamma) == h.top());
        return true;
      });
    }
  }
  CHECK(theorems >= 30);
}

TEST_CASE("Kripke utilities") {
  auto k = *ipc_countermodel(parse("x0 | ~x0"));
  for (std::size_t w = 0; w < k.worlds; ++w) {
    const auto c = cone(k, w);
    CHECK(kripke_defect(c).empty());
  }
  KripkeModel bad = k;
  bad.valuation[0][bad.root] = true;
  for (std::size_t w = 0; w < bad.worlds; ++w) bad.valuation[0][w] = (w == bad.root);
  CHECK_FALSE(kripke_defect(bad).empty());
  CHECK(finite_model_bound(parse("x0")) >= 1);
  CHECK_FALSE(describe(k).empty());
}

TEST_CASE("step budget is reported, not guessed") {
  IpcLimits tiny;
  tiny.max_steps = 3;
  CHECK_THROWS_AS(ipc_valid(parse("((x0 -> x1) -> x2) -> ((x2 -> x0) -> x1) | x2"), tiny), BudgetExceeded);
}
