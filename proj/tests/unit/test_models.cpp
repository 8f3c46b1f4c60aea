#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "elw/io.hpp"
#include "elw/models.hpp"
#include "model_oracle.hpp"
#include "oracles.hpp"

using namespace elw;
using F = Formula;

namespace {

std::shared_ptr<const HeytingAlgebra> chain(std::size_t points) {
  std::vector<std::pair<int, int>> below;
  for (std::size_t i = 0; i + 1 < points; ++i) below.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return std::make_shared<const HeytingAlgebra>(downset_lattice(Poset::from_pairs(points, below)));
}

std::vector<bool> bel_of(std::size_t n, std::initializer_list<int> members) {
  std::vector<bool> b(n, false);
  for (int m : members) b[m] = true;
  return b;
}

// 3-chain 0 < 1 < 2 with TRUE = up-set of 1, BEL = {1, 2}, collapse box and
// indicator know.
ElModel three_chain_el5() {
  auto h = chain(2);
  return ElModel{h, 1, bel_of(3, {1, 2}), {0, 0, 2}, {0, 2, 2}, LogicId::EL5};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Model> all_models(LogicId cls, std::size_t poset = 3, const Mutations& mut = {}) {
  std::vector<Model> out;
  SearchBudget b;
  b.max_poset_size = poset;
  enumerate_models(cls, b, [&](const Model& m) {
    out.push_back(m);
    return true;
  }, mut);
  return out;
}

const std::vector<LogicId> kElClasses{LogicId::EL3minus, LogicId::EL3, LogicId::EL4, LogicId::EL5};

}  // namespace

TEST_CASE("validate_el_model examples") {
  const auto m = three_chain_el5();
  const auto v = validate_el_model(m);
  CHECK(v.accepted);
  CHECK(v.ok());

  ElModel bad = m;
  bad.bel = bel_of(3, {2});
  bad.know = {0, 2, 2};
  const auto r = validate_el_model(bad);
  CHECK_FALSE(r.accepted);
  CHECK(r.reason == "know-truth");
  CHECK(r.witness == std::vector<int>{1});

  auto b4 = std::make_shared<const HeytingAlgebra>(downset_lattice(Poset::from_pairs(2, {})));
  for (const auto& u : ultrafilters(*b4)) {
    ElModel boolean{b4, u.generator, bel_of(4, {3}), {0, 0, 0, 3}, {0, 0, 0, 3}, LogicId::EL5};
    const auto vb = validate_el_model(boolean);
    CHECK_FALSE(vb.accepted);
    CHECK_FALSE(vb.assertions_hold());
    CHECK(vb.assertions[0].name == "disjunction property");
  }

  ElModel wrong_size = m;
  wrong_size.know = {0, 2};
  CHECK_FALSE(validate_el_model(wrong_size).accepted);
  ElModel not_ultra = m;
  not_ultra.true_gen = 2;
  CHECK(validate_el_model(not_ultra).reason == "TRUE is not an ultrafilter");
  ElModel wrong_class = m;
  wrong_class.cls = LogicId::IEL;
  CHECK_FALSE(validate_el_model(wrong_class).accepted);
}

TEST_CASE("validate_iel_model examples") {
  auto h = chain(2);
  IelModel m{h, bel_of(3, {2}), {0, 1, 2}, LogicId::IELminus};
  CHECK(validate_iel_model(m).accepted);
  CHECK(validate_iel_model(IelModel{h, bel_of(3, {2}), {0, 1, 2}, LogicId::IEL}).accepted);
  IelModel no_top{h, bel_of(3, {1}), {0, 2, 1}, LogicId::IELminus};
  CHECK(validate_iel_model(no_top).reason == "top-believed");
  IelModel indicator{h, bel_of(3, {2}), {0, 0, 2}, LogicId::IELminus};
  const auto v = validate_iel_model(indicator);
  CHECK(v.reason == "co-reflection");
  CHECK(v.witness == std::vector<int>{1});
  auto two = chain(1);
  CHECK(validate_iel_model(IelModel{two, bel_of(2, {1}), {0, 1}, LogicId::IELminus}).accepted);
}

TEST_CASE("eval and satisfies examples") {
  const Model m = three_chain_el5();
  const Assignment g{1};
  CHECK(eval(m, g, parse("box K x0")) == 2);
  CHECK(eval(m, g, parse("box x0")) == 0);
  CHECK(eval(m, g, parse("true")) == 2);
  CHECK(eval(m, g, parse("x0 == ~~x0")) == 0);
  CHECK(satisfies(m, g, parse("x0 <-> ~~x0")));
  CHECK_FALSE(satisfies(m, g, parse("x0 == ~~x0")));
  CHECK(satisfies(m, Assignment{2}, parse("box x0")));
  CHECK_THROWS_AS(eval(m, Assignment{}, parse("x0")), EvalError);
  const Model iel = IelModel{chain(2), bel_of(3, {2}), {0, 1, 2}, LogicId::IELminus};
  CHECK_THROWS_AS(eval(iel, g, parse("box x0")), EvalError);
  CHECK(satisfies(iel, Assignment{2}, parse("K x0")));
  CHECK_FALSE(satisfies(iel, Assignment{1}, parse("K x0")));
}

TEST_CASE("valid_in_model examples") {
  const Model m = three_chain_el5();
  CHECK_FALSE(valid_in_model(m, parse("box K x0 -> box x0")));
  CHECK(falsifying_assignment(m, parse("box K x0 -> box x0")) == Assignment{1});
  for (LogicId cls : kElClasses) {
    for (const auto& model : all_models(cls)) CHECK(valid_in_model(model, parse("x0 | ~x0")));
  }
}

TEST_CASE("enumeration matches the unpruned oracle carrier by carrier") {
  for (LogicId cls : {LogicId::EL3minus, LogicId::EL3, LogicId::EL4, LogicId::EL5, LogicId::IELminus,
                      LogicId::IEL}) {
    const bool cheap = cls == LogicId::EL5 || cls == LogicId::IELminus || cls == LogicId::IEL;
    const std::size_t poset = cheap ? 3 : 2;
    std::map<std::string, std::size_t> seen;
    for (const auto& m : all_models(cls, poset)) ++seen[algebra_certificate(algebra_of(m))];
    for (const auto& h : enumerate_algebras(poset)) {
      // The unpruned count grows as size^(2 size); larger carriers lack DP.
      if (h.size() > 5) continue;
      CAPTURE(to_string(cls));
      CAPTURE(describe(h));
      CHECK(seen[algebra_certificate(h)] == oracle::count_models(h, cls));
    }
  }
}

TEST_CASE("enumerated models satisfy the class invariants") {
  std::map<LogicId, std::size_t> counts;
  for (LogicId cls : kElClasses) {
    for (const auto& m : all_models(cls)) {
      ++counts[cls];
      const auto v = validate_model(m);
      CHECK(v.ok());
      CHECK(has_dp(algebra_of(m)));
      const auto& el = std::get<ElModel>(m);
      const auto& h = *el.algebra;
      if (cls != LogicId::EL3minus) {
        for (int x = 0; x < static_cast<int>(h.size()); ++x) {
          if (el.bel[x]) CHECK(h.leq(el.true_gen, x));
          CHECK(h.leq(el.true_gen, h.imp(el.know[x], x)));
        }
      }
      if (cls == LogicId::EL5) {
        ElModel as4 = el;
        as4.cls = LogicId::EL4;
        CHECK(validate_el_model(as4).ok());
      }
    }
  }
  CHECK(counts[LogicId::EL3minus] > counts[LogicId::EL3]);
  CHECK(counts[LogicId::EL3] > counts[LogicId::EL4]);
  CHECK(counts[LogicId::EL4] > counts[LogicId::EL5]);

  bool minimal = false;
  for (const auto& m : all_models(LogicId::IELminus, 1)) {
    const auto& iel = std::get<IelModel>(m);
    if (iel.know == std::vector<Elem>{0, 1}) minimal = true;
  }
  CHECK(minimal);
}

TEST_CASE("disabling the double-negation condition admits beliefs outside TRUE") {
  Mutations mut;
  mut.enforce_condition_viii = false;
  bool outside = false;
  for (const auto& m : all_models(LogicId::EL3, 3, mut)) {
    if (!validate_model(m, mut).assertions_hold()) outside = true;
  }
  CHECK(outside);
}

TEST_CASE("budget exhaustion is flagged") {
  SearchBudget b;
  b.max_models = 5;
  const auto st = enumerate_models(LogicId::EL3minus, b, [](const Model&) { return true; });
  CHECK(st.models == 5);
  CHECK(st.budget_exhausted);
  b = SearchBudget{};
  b.max_op_tables = 3;
  const auto r = find_countermodel(parse("x0 | ~x0"), LogicId::EL5, b);
  CHECK_FALSE(r.found);
  CHECK(r.stats.budget_exhausted);
  b.max_models = 0;
  CHECK_THROWS(enumerate_models(LogicId::EL5, b, [](const Model&) { return true; }));
  CHECK_THROWS(enumerate_models(LogicId::L3, SearchBudget{}, [](const Model&) { return true; }));
}

TEST_CASE("find_countermodel examples") {
  auto r = find_countermodel(parse("box K x0 -> box x0"), LogicId::EL5, {});
  REQUIRE(r.found);
  {
    const auto& m = std::get<ElModel>(r.found->model);
    CHECK(m.algebra->size() == 3);
    CHECK(m.bel == bel_of(3, {1, 2}));
    CHECK(r.found->gamma == Assignment{1});
    CHECK(validate_model(r.found->model).ok());
  }

  r = find_countermodel(parse("K x0 | K ~x0"), LogicId::EL5, {});
  REQUIRE(r.found);
  CHECK(validate_model(r.found->model).ok());
  CHECK_FALSE(satisfies(r.found->model, r.found->gamma, parse("K x0 | K ~x0")));

  r = find_countermodel(parse("K (x0 | x1) -> K x0 | K x1"), LogicId::EL5, {});
  REQUIRE(r.found);
  {
    const auto& m = std::get<ElModel>(r.found->model);
    const auto& h = *m.algebra;
    CHECK(h.size() == 5);
    CHECK(validate_model(r.found->model).ok());
    // BEL is a filter that is not prime.
    std::vector<int> bel;
    for (int x = 0; x < 5; ++x) {
      if (m.bel[x]) bel.push_back(x);
    }
    REQUIRE(bel.size() == 2);
    CHECK_FALSE(is_prime_filter(h, principal_filter(h, bel[0])));
    CHECK(r.found->gamma == Assignment{1, 2});
    CHECK(m.true_gen == 1);
  }

  CHECK_FALSE(find_countermodel(parse("x0 | ~x0"), LogicId::EL5, {}).found);
  const auto refl = find_countermodel(parse("K x0 -> x0"), LogicId::IELminus, {});
  REQUIRE(refl.found);
  CHECK(validate_model(refl.found->model).ok());
}

TEST_CASE("strict equivalence is identity of values") {
  std::mt19937_64 rng(222);
  std::vector<Model> models;
  for (LogicId cls : kElClasses) {
    for (auto& m : all_models(cls)) models.push_back(std::move(m));
  }
  for (int i = 0; i < 400; ++i) {
    const Model& m = models[rng() % models.size()];
    const F phi = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 6), 2, true);
    const F psi = oracle::random_formula(rng, 1 + static_cast<int>(rng() % 6), 2, true);
    const std::size_t n = algebra_of(m).size();
    const Assignment g{static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n)};
    CHECK(satisfies(m, g, F::ident(phi, psi)) == (eval(m, g, phi) == eval(m, g, psi)));
    CHECK(satisfies(m, g, F::box(phi)) == satisfies(m, g, F::ident(phi, F::top())));
  }
}

TEST_CASE("library conclusions hold in every model of their class") {
  const auto lib = theorem_library();
  for (LogicId cls : kElClasses) {
    const auto models = all_models(cls);
    for (const auto& [name, entry] : lib) {
      if (!is_el_class(entry.logic) && entry.logic != LogicId::L3) continue;
      if (!check_proof(entry.script, cls).accepted) continue;
      for (const auto& m : models) {
        CAPTURE(name);
        CHECK(valid_in_model(m, entry.script.conclusion()));
      }
    }
  }
}

TEST_CASE("kripke_to_el5 examples") {
  const auto k = *ipc_countermodel(parse("x0 | ~x0"));
  const auto c = kripke_to_el5(k);
  CHECK(validate_model(c.model).ok());
  CHECK_FALSE(satisfies(c.model, c.gamma, parse("box (x0 | ~x0)")));
  const auto& el = std::get<ElModel>(c.model);
  CHECK(el.bel == bel_of(el.algebra->size(), {el.algebra->top()}));

  KripkeModel one;
  one.worlds = 1;
  one.order = {true};
  one.valuation = {{true}, {true}};
  const auto c1 = kripke_to_el5(one);
  CHECK(validate_model(c1.model).ok());
  CHECK(satisfies(c1.model, c1.gamma, parse("box (x0 -> x0)")));
  CHECK(satisfies(c1.model, c1.gamma, parse("box x1")));

  KripkeModel broken = one;
  broken.order = {false};
  CHECK_THROWS_AS(kripke_to_el5(broken), DomainError);
}

TEST_CASE("kripke_to_el5 boxes exactly what the root forces") {
  std::mt19937_64 rng(720);
  for (int i = 0; i < 150; ++i) {
    const F f = oracle::random_formula(rng, 2 + static_cast<int>(rng() % 8), 3, false);
    auto k = ipc_countermodel(f);
    if (!k) continue;
    auto c = kripke_to_el5(*k);
    c.gamma.resize(3, std::get<ElModel>(c.model).algebra->bot());
    CHECK(validate_model(c.model).ok());
    for (const auto& g : subformulas(f)) {
      CHECK(satisfies(c.model, c.gamma, F::box(g)) == forces(*k, k->root, g));
    }
  }
}

TEST_CASE("embedding_crosscheck examples") {
  auto r = embedding_crosscheck({}, parse("x0 | ~x0"), {});
  CHECK_FALSE(r.ipc_consequence);
  CHECK(r.refutation);
  CHECK(r.agreement);
  r = embedding_crosscheck({parse("x0")}, parse("x0"), {});
  CHECK(r.ipc_consequence);
  CHECK_FALSE(r.search_hit);
  CHECK(r.agreement);
  r = embedding_crosscheck({parse("~~x0")}, parse("x0"), {});
  CHECK_FALSE(r.ipc_consequence);
  REQUIRE(r.refutation);
  CHECK(satisfies(r.refutation->model, r.refutation->gamma, parse("box ~~x0")));
  CHECK_FALSE(satisfies(r.refutation->model, r.refutation->gamma, parse("box x0")));
}

TEST_CASE("restricted_dp_check examples") {
  auto r = restricted_dp_check(parse("x0 | ~x0"), parse("~~x1 -> x1"));
  CHECK(r.attempted);
  CHECK(r.refutation);
  CHECK(r.joined);
  r = restricted_dp_check(parse("x0 -> x0"), parse("x1"));
  CHECK_FALSE(r.attempted);
  CHECK_FALSE(r.refutation);
  r = restricted_dp_check(parse("x0 | ~x0"), parse("x0 | ~x0"));
  CHECK(r.refutation);
  CHECK_FALSE(r.joined);
  // Each countermodel alone forces the other formula.
  r = restricted_dp_check(parse("x0"), parse("~x0"));
  CHECK(r.refutation);
  CHECK(r.joined);
}

TEST_CASE("model JSON round trip") {
  for (LogicId cls : {LogicId::EL3, LogicId::EL5, LogicId::IEL}) {
    for (const auto& m : all_models(cls, 2)) {
      const auto text = model_to_json(m);
      const Model back = model_from_json(text);
      CHECK(model_to_json(back) == text);
      CHECK(validate_model(back).ok());
    }
  }
}

TEST_CASE("model JSON errors") {
  const std::string good = model_to_json(three_chain_el5());
  CHECK_NOTHROW(model_from_json(good));
  auto where = [](const std::string& text) -> std::string {
    try {
      model_from_json(text);
    } catch (const ModelFileError& e) {
      return e.where();
    }
    return "";
  };
  CHECK(where("{") == "byte 2");
  CHECK(where("{\"class\": EL5}") == "byte 11");
  CHECK(where("[]") == "/");
  std::string extra = good;
  extra.insert(1, "\"colour\": 1,");
  CHECK(where(extra) == "/colour");
  std::string range = good;
  range.replace(range.find("\"box\": [0,0,2]"), 14, "\"box\": [0,0,7]");
  CHECK(where(range) == "/box/2");
  std::string cls = good;
  cls.replace(cls.find("EL5"), 3, "S4");
  CHECK(where(cls) == "/class");
  std::string tables = good;
  tables.replace(tables.find("\"leq\""), 0,
                 "\"tables\":{\"meet\":[0,0,0,0,1,1,0,1,2],\"join\":[0,1,2,1,1,2,2,2,2],"
                 "\"imp\":[2,2,2,0,2,2,0,1,2]},");
  CHECK(where(tables) == "");
  tables.replace(tables.find("\"imp\":[2,2,2,0"), 14, "\"imp\":[2,2,2,2");
  CHECK(where(tables) == "/algebra/tables/imp/3");
  std::string irreflexive = good;
  irreflexive.replace(irreflexive.find("[0,0],"), 6, "");
  CHECK(where(irreflexive) == "/algebra/leq");
}

TEST_CASE("shipped fixture models validate and re-serialize exactly") {
  for (const char* name : {"el5-three-chain.json", "el5-four-chain.json", "el5-vee.json"}) {
    CAPTURE(name);
    const std::string text = read_file(std::string(ELW_SOURCE_DIR) + "/fixtures/models/" + name);
    REQUIRE_FALSE(text.empty());
    const Model m = model_from_json(text);
    CHECK(validate_model(m).ok());
    CHECK(model_to_json(m) == text);
  }
}
