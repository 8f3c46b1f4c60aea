#include <random>

#include "doctest.h"
#include "elw/syntax.hpp"
#include "oracles.hpp"

using namespace elw;
using F = Formula;

TEST_CASE("parse builds the expected trees") {
  CHECK(parse("box x0 -> K x0") == F::implies(F::box(F::var(0)), F::know(F::var(0))));
  CHECK(parse("x0 == ~~x0") == F::ident(F::var(0), F::neg(F::neg(F::var(0)))));
  CHECK(parse("true") == F::implies(F::bottom(), F::bottom()));
  CHECK(parse("x0 <-> x1") == F::conj(F::implies(F::var(0), F::var(1)), F::implies(F::var(1), F::var(0))));
  CHECK(parse("x0 -> x1 -> x2") == F::implies(F::var(0), F::implies(F::var(1), F::var(2))));
  CHECK(parse("x0 | x1 | x2") == F::disj(F::disj(F::var(0), F::var(1)), F::var(2)));
  CHECK(parse("x0 & x1 | x2") == F::disj(F::conj(F::var(0), F::var(1)), F::var(2)));
  CHECK(parse("~x0 & x1") == F::conj(F::neg(F::var(0)), F::var(1)));
  CHECK(parse("Kx0") == F::know(F::var(0)));
  CHECK(parse("box K box x12") == F::box(F::know(F::box(F::var(12)))));
  CHECK(parse("x0 <-> x1 -> x2") == F::iff(F::var(0), F::implies(F::var(1), F::var(2))));
}

TEST_CASE("parse reports position and expected tokens") {
  try {
    parse("x0 ->");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
    CHECK(e.found() == "end of input");
    CHECK(!e.expected().empty());
  }
  CHECK_THROWS_AS(parse("x0 x1"), ParseError);
  CHECK_THROWS_AS(parse("(x0"), ParseError);
  CHECK_THROWS_AS(parse("y0"), ParseError);
  CHECK_THROWS_AS(parse("x0 <-> x1 <-> x2"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(F::implies(F::box(F::var(0)), F::var(0))) == "box x0 -> x0");
  CHECK(render(F::bottom()) == "false");
  CHECK(render(F::conj(F::var(0), F::disj(F::var(1), F::var(2)))) == "x0 & (x1 | x2)");
  CHECK(render(F::implies(F::implies(F::var(0), F::var(1)), F::var(0))) == "(x0 -> x1) -> x0");
  CHECK(render(F::box(F::conj(F::var(0), F::var(1)))) == "box (x0 & x1)");
  CHECK(render(F::neg(F::box(F::var(0)))) == "~box x0");
  CHECK(render(F::conj(F::var(0), F::conj(F::var(1), F::var(2)))) == "x0 & (x1 & x2)");
}

TEST_CASE("parse inverts render on random formulas") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    const F f = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 14), 4, true);
    CAPTURE(render(f));
    CHECK(parse(render(f)) == f);
  }
}

TEST_CASE("substitute is uniform") {
  const F x0 = F::var(0), x1 = F::var(1);
  CHECK(substitute(F::implies(x0, x0), {{0, F::box(x1)}}) == F::implies(F::box(x1), F::box(x1)));
  CHECK(substitute(F::conj(x0, x1), {}) == F::conj(x0, x1));
  CHECK(substitute(F::implies(x0, x0), {{0, F::know(x0)}}) == F::implies(F::know(x0), F::know(x0)));
  // Simultaneous, not sequential.
  CHECK(substitute(F::conj(x0, x1), {{0, x1}, {1, x0}}) == F::conj(x1, x0));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const F f = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 10), 3, true);
    const F image = F::box(F::var(7));
    const F g = substitute(f, {{0, image}});
    const auto vars = variables(g);
    CHECK(std::find(vars.begin(), vars.end(), 0u) == vars.end());
  }
}

TEST_CASE("abstract_modal examples") {
  const F bx0 = F::box(F::var(0));
  auto a = abstract_modal(F::implies(bx0, bx0));
  CHECK(a.skeleton == F::implies(F::var(1), F::var(1)));
  CHECK(a.binding.size() == 1);
  CHECK(a.binding.at(1) == bx0);

  const F kx0 = F::know(F::var(0));
  a = abstract_modal(F::disj(kx0, F::neg(kx0)));
  CHECK(a.skeleton == F::disj(F::var(1), F::neg(F::var(1))));
  CHECK(a.binding.at(1) == kx0);

  const F inner = F::box(F::know(F::var(1)));
  a = abstract_modal(F::conj(F::var(0), inner));
  CHECK(a.skeleton == F::conj(F::var(0), F::var(2)));
  CHECK(a.binding.size() == 1);
  CHECK(a.binding.at(2) == inner);
}

TEST_CASE("abstract_modal properties on random formulas") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const F f = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 12), 3, true);
    const auto a = abstract_modal(f);
    CAPTURE(render(f));
    CHECK(a.skeleton.is_propositional());
    CHECK(substitute(a.skeleton, a.binding) == f);
    for (const auto& [v, g] : a.binding) CHECK(g.is_modal());
  }
}

TEST_CASE("formula helpers") {
  const F f = parse("x2 & box (x0 -> x2)");
  CHECK(variables(f) == std::vector<VarIndex>{0, 2});
  CHECK(f.var_bound() == 3);
  CHECK(f.size() == 6);
  CHECK(f.contains_box());
  CHECK_FALSE(f.is_propositional());
  const auto subs = subformulas(f);
  CHECK(subs.back() == f);
  CHECK(subs.size() == 5);
  CHECK(conjunction({}) == F::top());
  CHECK(conjunction({F::var(0)}) == F::var(0));
}
