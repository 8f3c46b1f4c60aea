#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "elw/io.hpp"
#include "elw/workbench.hpp"
#include "json.hpp"

namespace elw {

namespace {

using F = Formula;

const std::vector<LogicId> kElClasses{LogicId::EL3minus, LogicId::EL3, LogicId::EL4, LogicId::EL5};
const std::vector<LogicId> kIelClasses{LogicId::IELminus, LogicId::IEL};
constexpr std::size_t kModelFloor = 50;

// Propositional theorems over metavariables x0 and x1, used as INT samples.
const std::vector<std::string> kIntSamples{
    "x0 -> x1 -> x0",
    "x0 & x1 -> x1 & x0",
    "x0 -> x0 | x1",
    "(x0 -> x1) -> (x0 -> ~x1) -> ~x0",
    "~~(x0 | ~x0)",
    "~x0 -> x0 -> x1",
    "(x0 | x1) & ~x0 -> x1",
    "((x0 -> x1) -> x0) -> ~~x0",
};

struct Context {
  const ReproOptions& opt;
  Coverage& cov;
  std::map<LogicId, std::vector<Model>> models;

  const std::vector<Model>& models_of(LogicId cls) {
    auto it = models.find(cls);
    if (it != models.end()) return it->second;
    cov.hit("enumerate_models");
    std::vector<Model> out;
    enumerate_models(
        cls, SearchBudget{},
        [&](const Model& m) {
          out.push_back(m);
          return true;
        },
        opt.mut);
    return models.emplace(cls, std::move(out)).first->second;
  }
};

std::string count_of(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

void summarize(ReproItem& it) {
  const auto good = std::count_if(it.checks.begin(), it.checks.end(), [](const ReproCheck& c) { return c.pass; });
  it.observed = count_of(static_cast<std::size_t>(good), it.checks.size()) + " checks passed";
  for (const auto& c : it.checks) {
    if (!c.pass) {
      it.observed += "; first failure: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
      break;
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Tracks the first counterexample of an aggregated check.
struct Tally {
  std::size_t total = 0;
  std::size_t bad = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& why) {
    ++total;
    if (ok) return;
    if (bad++ == 0) first = why();
  }
  ReproCheck as_check(std::string name) const {
    return {std::move(name), bad == 0, bad == 0 ? count_of(total, total) : std::to_string(bad) + " of " +
                                                                             std::to_string(total) + " failed; " + first};
  }
};

// Item 1 ---------------------------------------------------------------------

ReproItem proof_scripts(Context& c) {
  ReproItem it{1, "proof-script suite", "check_proof on every library script at its logic and at the weaker logic",
               "accepted at the stated logic; rejected at the weaker logic; AN on a non-axiom rejected", "", {}};
  c.cov.hit("theorem_library");
  c.cov.hit("check_proof");
  for (const auto& [name, e] : theorem_library()) {
    const auto v = check_proof(e.script, e.logic, c.opt.mut);
    it.checks.push_back({name + " accepted at " + std::string(to_string(e.logic)), v.accepted, v.reason});
    if (e.weaker) {
      const auto w = check_proof(e.script, *e.weaker, c.opt.mut);
      it.checks.push_back({name + " rejected at " + std::string(to_string(*e.weaker)), !w.accepted,
                           w.accepted ? "accepted" : w.reason});
    }
  }
  c.cov.hit("parse");
  const ProofScript probe = parse_script("1. x0 | ~x0 ; T\n2. box (x0 | ~x0) ; an 1\n");
  for (LogicId cls : kElClasses) {
    const auto v = check_proof(probe, cls, c.opt.mut);
    it.checks.push_back({"AN on tertium rejected at " + std::string(to_string(cls)), !v.accepted,
                         v.accepted ? "accepted" : v.reason});
  }
  summarize(it);
  return it;
}

// Item 2 ---------------------------------------------------------------------

ReproItem sp_scripts(Context& c) {
  ReproItem it{2, "substitution property", "build_sp_proof on 200 random instances, check_proof at EL3minus",
               "all 200 scripts accepted with the expected conclusion", "", {}};
  FormulaGenerator gen(2002);
  Tally accepted;
  for (int i = 0; i < 200; ++i) {
    const F phi = gen.upto(7, 3, true), psi = gen.upto(7, 3, true), chi = gen.upto(7, 3, true);
    const auto x = static_cast<VarIndex>(gen.below(3));
    const ProofScript s = build_sp_proof(phi, psi, chi, x);
    const auto v = check_proof(s, LogicId::EL3minus, c.opt.mut);
    accepted.record(v.accepted && s.conclusion() == sp_instance(phi, psi, chi, x), [&] {
      return render(sp_instance(phi, psi, chi, x)) + ": " + v.reason;
    });
  }
  it.checks.push_back(accepted.as_check("SP scripts accepted at EL3minus"));
  summarize(it);
  return it;
}

// Items 3 and 9 --------------------------------------------------------------

// Schemes of the logic as patterns; the value of any instance at any
// assignment is the value of its pattern at the values of the substituted
// formulas, so validity of the pattern covers every instance.
std::vector<std::pair<std::string, F>> scheme_patterns(LogicId cls, const Mutations& mut) {
  std::vector<std::pair<std::string, F>> out;
  for (Axiom a : axioms_of(cls, mut)) {
    if (a == Axiom::INT) {
      for (const auto& s : kIntSamples) out.emplace_back("INT " + s, parse(s));
    } else {
      out.emplace_back(std::string(to_string(a)), scheme_pattern(a));
    }
  }
  return out;
}

// Syntactic instances over a fixed set of formulas in x0, x1 must be
// recognized by the kernel as instances of the logic's schemes.
ReproCheck instances_recognized(Context& c, LogicId cls, bool modal) {
  c.cov.hit("substitute");
  c.cov.hit("match_axiom");
  c.cov.hit("is_int_instance");
  c.cov.hit("abstract_modal");
  c.cov.hit("ipc_valid");
  std::vector<std::string> seeds{"x0", "x1", "false", "~x0", "x0 & x1", "x0 | x1", "x0 -> x1", "K x0", "K x1 -> x0"};
  if (modal) {
    seeds.insert(seeds.end(), {"box x0", "~box x1"});
  }
  Tally t;
  for (const auto& [name, pat] : scheme_patterns(cls, c.opt.mut)) {
    for (const auto& a : seeds) {
      for (const auto& b : seeds) {
        const F inst = substitute(pat, {{0, parse(a)}, {1, parse(b)}});
        bool ok = false;
        if (name.starts_with("INT")) {
          ok = is_int_instance(inst) && ipc_valid(abstract_modal(inst).skeleton) &&
               match_axiom(inst, cls, c.opt.mut).has_value();
        } else {
          ok = match_axiom(inst, cls, c.opt.mut).has_value();
        }
        t.record(ok, [&] { return render(inst); });
      }
    }
  }
  return t.as_check(std::string(to_string(cls)) + ": scheme instances recognized");
}

// Each scheme pattern valid in every model; for the modal family also its
// AN-image and tertium non datur.
ReproCheck schemes_valid(Context& c, LogicId cls, const std::vector<Model>& models) {
  c.cov.hit("valid_in_model");
  auto patterns = scheme_patterns(cls, c.opt.mut);
  const bool modal = is_el_class(cls);
  if (modal) {
    const std::size_t base = patterns.size();
    for (std::size_t i = 0; i < base; ++i) patterns.emplace_back("AN " + patterns[i].first, F::box(patterns[i].second));
    patterns.emplace_back("T", parse("x0 | ~x0"));
  }
  Tally t;
  for (const auto& m : models) {
    for (const auto& [name, pat] : patterns) {
      t.record(valid_in_model(m, pat), [&, &name = name] { return name + " fails in " + describe(m); });
    }
  }
  return t.as_check(std::string(to_string(cls)) + ": zero violations");
}

ReproItem soundness_sweep(Context& c) {
  ReproItem it{3, "soundness of the EL classes",
               "enumerate_models per EL class at poset size <= 3; every scheme and its AN-image in every model",
               ">= 50 models per class, zero violations", "", {}};
  const auto lib = theorem_library();
  for (LogicId cls : kElClasses) {
    const auto& models = c.models_of(cls);
    const std::string name(to_string(cls));
    it.checks.push_back({name + ": at least 50 models", models.size() >= kModelFloor,
                         std::to_string(models.size()) + " models"});
    it.checks.push_back(schemes_valid(c, cls, models));
    it.checks.push_back(instances_recognized(c, cls, true));
    if (cls != LogicId::EL3minus) {
      Tally within;
      for (const auto& m : models) {
        within.record(validate_model(m, c.opt.mut).assertions_hold(), [&] { return describe(m); });
      }
      it.checks.push_back(within.as_check(name + ": BEL within TRUE"));
    }
    Tally conclusions;
    for (const auto& [entry, e] : lib) {
      if (!check_proof(e.script, cls, c.opt.mut).accepted) continue;
      for (const auto& m : models) {
        conclusions.record(valid_in_model(m, e.script.conclusion()), [&, &entry = entry] { return entry; });
      }
    }
    it.checks.push_back(conclusions.as_check(name + ": accepted library conclusions valid"));
  }
  summarize(it);
  return it;
}

ReproItem iel_soundness(Context& c) {
  ReproItem it{9, "soundness of the IEL classes",
               "enumerate_models for IELminus and IEL at poset size <= 3; find_countermodel for K x0 -> x0",
               "every scheme valid in every model; reflection refuted in IELminus", "", {}};
  for (LogicId cls : kIelClasses) {
    const auto& models = c.models_of(cls);
    it.checks.push_back({std::string(to_string(cls)) + ": models found", !models.empty(),
                         std::to_string(models.size()) + " models"});
    it.checks.push_back(schemes_valid(c, cls, models));
    it.checks.push_back(instances_recognized(c, cls, false));
  }
  c.cov.hit("find_countermodel");
  c.cov.hit("validate_iel_model");
  const auto r = find_countermodel(parse("K x0 -> x0"), LogicId::IELminus, SearchBudget{}, c.opt.mut);
  bool ok = r.found && validate_iel_model(std::get<IelModel>(r.found->model)).accepted;
  it.checks.push_back({"K x0 -> x0 refuted in IELminus", ok,
                       r.found ? describe(r.found->model) + " at " + describe(r.found->gamma) : "none found"});
  summarize(it);
  return it;
}

// Item 4 ---------------------------------------------------------------------

struct FixtureTarget {
  std::string formula;
  std::string file;
  Assignment gamma;
};

ReproItem countermodels(Context& c) {
  ReproItem it{4, "EL5 countermodels",
               "find_countermodel in EL5 at poset size <= 3; fixture files read, validated and rewritten",
               "each formula refuted by a re-validated model; fixtures validate and re-serialize byte-exactly", "",
               {}};
  c.cov.hit("find_countermodel");
  c.cov.hit("validate_el_model");
  c.cov.hit("satisfies");
  c.cov.hit("verify_heyting");
  c.cov.hit("has_dp");
  c.cov.hit("downset_lattice");
  const std::vector<FixtureTarget> targets{
      {"box K x0 -> box x0", "el5-three-chain.json", {1}},
      {"K x0 | K ~x0", "el5-four-chain.json", {1}},
      {"K (x0 | x1) -> K x0 | K x1", "el5-vee.json", {1, 2}},
  };
  for (const auto& t : targets) {
    const F f = parse(t.formula);
    const auto r = find_countermodel(f, LogicId::EL5, SearchBudget{}, c.opt.mut);
    bool ok = false;
    std::string detail = "none found within budget";
    if (r.found) {
      const auto& el = std::get<ElModel>(r.found->model);
      ok = validate_el_model(el, c.opt.mut).ok() && !satisfies(r.found->model, r.found->gamma, f);
      detail = describe(r.found->model) + " at " + describe(r.found->gamma);
    }
    it.checks.push_back({"refutation of " + t.formula, ok, detail});

    const std::string path = c.opt.fixture_dir + "/" + t.file;
    const std::string text = read_file(path);
    bool fixture_ok = false;
    detail = text.empty() ? "cannot read " + path : "";
    if (!text.empty()) {
      try {
        const Model m = model_from_json(text);
        const auto v = validate_model(m, c.opt.mut);
        const auto& h = algebra_of(m);
        fixture_ok = v.ok() && model_to_json(m) == text && verify_heyting(h).accepted && has_dp(h) &&
                     !satisfies(m, t.gamma, f);
        detail = v.ok() ? describe(m) : v.reason;
      } catch (const std::exception& e) {
        detail = e.what();
      }
    }
    it.checks.push_back({"fixture " + t.file, fixture_ok, detail});
  }

  // The three-chain fixture's carrier is the down-set lattice of a 2-chain.
  const std::string text = read_file(c.opt.fixture_dir + "/el5-three-chain.json");
  bool same = false;
  try {
    same = !text.empty() && algebra_certificate(algebra_of(model_from_json(text))) ==
                                algebra_certificate(downset_lattice(Poset::from_pairs(2, {{0, 1}})));
  } catch (const std::exception&) {
  }
  it.checks.push_back({"three-chain carrier is the down-set lattice of a 2-chain", same, ""});

  c.cov.hit("run");
  std::ostringstream out, err;
  const int status =
      run({"find-countermodel", "box K x0 -> box x0", "--logic", "EL5", "--max-poset", "2"}, out, err);
  it.checks.push_back({"CLI find-countermodel exits 0", status == 0, err.str()});
  summarize(it);
  return it;
}

// Item 5 ---------------------------------------------------------------------

ReproItem non_fregean(Context& c) {
  ReproItem it{5, "non-Fregean witness", "search EL3minus models for x0 <-> ~~x0 satisfied, x0 == ~~x0 falsified",
               "a witness model and assignment", "", {}};
  const F material = parse("x0 <-> ~~x0"), identity = parse("x0 == ~~x0");
  std::string found;
  for (const auto& m : c.models_of(LogicId::EL3minus)) {
    for (Elem e = 0; e < static_cast<Elem>(algebra_of(m).size()) && found.empty(); ++e) {
      if (satisfies(m, {e}, material) && !satisfies(m, {e}, identity)) found = describe(m) + " at x0=" + std::to_string(e);
    }
    if (!found.empty()) break;
  }
  it.checks.push_back({"witness found", !found.empty(), found});
  summarize(it);
  return it;
}

// Item 6 ---------------------------------------------------------------------

ReproItem value_properties(Context& c) {
  ReproItem it{6, "identity, box and ultrafilter properties",
               "1000 random trials each over enumerated EL3minus models; every ultrafilter of every algebra",
               "zero violations", "", {}};
  c.cov.hit("eval");
  c.cov.hit("filters");
  c.cov.hit("is_ultrafilter");
  c.cov.hit("is_prime_filter");
  c.cov.hit("ultrafilter_quotient_check");
  c.cov.hit("enumerate_algebras");
  const auto& models = c.models_of(LogicId::EL3minus);
  if (models.empty()) {
    it.checks.push_back({"models available", false, "no EL3minus models"});
    summarize(it);
    return it;
  }
  FormulaGenerator gen(6006);
  auto pick = [&]() -> const Model& { return models[gen.below(models.size())]; };
  auto assign = [&](const Model& m) {
    const std::size_t n = algebra_of(m).size();
    return Assignment{static_cast<Elem>(gen.below(n)), static_cast<Elem>(gen.below(n))};
  };

  Tally identity, box_top, ultra;
  for (int i = 0; i < 1000; ++i) {
    const Model& m = pick();
    const Assignment g = assign(m);
    const F phi = gen.upto(6, 2, true), psi = gen.upto(6, 2, true);
    identity.record(satisfies(m, g, F::ident(phi, psi)) == (eval(m, g, phi) == eval(m, g, psi)),
                    [&] { return render(F::ident(phi, psi)); });
  }
  for (int i = 0; i < 1000; ++i) {
    const Model& m = pick();
    const Assignment g = assign(m);
    const F phi = gen.upto(6, 2, true);
    const bool boxed = satisfies(m, g, F::box(phi));
    box_top.record(boxed == (eval(m, g, phi) == algebra_of(m).top()) &&
                       boxed == satisfies(m, g, F::ident(phi, F::top())),
                   [&] { return render(phi); });
  }

  auto ultrafilter_laws = [](const HeytingAlgebra& h, const Filter& u, Elem a, Elem b) {
    const auto in = filter_members(h, u);
    return in[h.join(a, b)] == (in[a] || in[b]) && (in[a] || in[h.neg(a)]) &&
           in[h.imp(a, b)] == (!in[a] || in[b]) && in[h.imp(a, b)] == in[h.join(h.neg(a), b)];
  };
  for (int i = 0; i < 1000; ++i) {
    const auto& el = std::get<ElModel>(pick());
    const auto& h = *el.algebra;
    const Filter u = principal_filter(h, el.true_gen);
    const auto fs = filters(h);
    const Elem a = static_cast<Elem>(gen.below(h.size())), b = static_cast<Elem>(gen.below(h.size()));
    ultra.record(is_ultrafilter(h, u) && is_prime_filter(h, u) && ultrafilter_quotient_check(h, u) &&
                     std::find(fs.begin(), fs.end(), u) != fs.end() && ultrafilter_laws(h, u, a, b),
                 [&] { return describe(h) + " TRUE=" + std::to_string(el.true_gen); });
  }
  it.checks.push_back(identity.as_check("identity iff equal values"));
  it.checks.push_back(box_top.as_check("box iff top"));
  it.checks.push_back(ultra.as_check("ultrafilter laws on TRUE"));

  Tally every;
  for (const auto& h : enumerate_algebras(3)) {
    for (const auto& u : ultrafilters(h)) {
      for (Elem a = 0; a < static_cast<Elem>(h.size()); ++a) {
        for (Elem b = 0; b < static_cast<Elem>(h.size()); ++b) {
          every.record(ultrafilter_laws(h, u, a, b), [&] { return describe(h); });
        }
      }
    }
  }
  it.checks.push_back(every.as_check("ultrafilter laws on every algebra"));
  summarize(it);
  return it;
}

// Item 7 ---------------------------------------------------------------------

ReproItem embedding(Context& c) {
  ReproItem it{7, "embedding of IPC", "embedding_crosscheck on 100 random premise sets and goals over 3 variables",
               "agreement in every case; an explicit EL5 refutation for every IPC-refuted case", "", {}};
  c.cov.hit("embedding_crosscheck");
  c.cov.hit("ipc_consequence");
  c.cov.hit("ipc_countermodel");
  c.cov.hit("kripke_to_el5");
  FormulaGenerator gen(7007);
  Tally agree, explicit_refutation, consistent, single;
  for (int i = 0; i < 100; ++i) {
    std::vector<F> premises;
    for (int k = 0; k < i % 3; ++k) premises.push_back(gen.upto(10, 3, false));
    const F chi = gen.upto(10, 3, false);
    const auto r = embedding_crosscheck(premises, chi, SearchBudget{});
    auto what = [&] {
      std::string s;
      for (const auto& p : premises) s += render(p) + ", ";
      return s + "|- " + render(chi) + ": " + r.detail;
    };
    agree.record(r.agreement, what);
    consistent.record(r.ipc_consequence == ipc_consequence(premises, chi), what);
    if (!r.ipc_consequence) explicit_refutation.record(r.refutation.has_value(), what);
    if (premises.empty()) {
      bool ok = true;
      if (auto k = ipc_countermodel(chi)) {
        auto cm = kripke_to_el5(*k);
        cm.gamma.resize(std::max<std::size_t>(cm.gamma.size(), chi.var_bound()),
                        std::get<ElModel>(cm.model).algebra->bot());
        ok = !satisfies(cm.model, cm.gamma, F::box(chi)) && r.refutation.has_value();
      } else {
        ok = r.ipc_consequence;
      }
      single.record(ok, what);
    }
  }
  it.checks.push_back(agree.as_check("agreement"));
  it.checks.push_back(consistent.as_check("report matches ipc_consequence"));
  it.checks.push_back(explicit_refutation.as_check("explicit refutation for refuted cases"));
  it.checks.push_back(single.as_check("single-formula countermodels refute the boxed formula"));
  summarize(it);
  return it;
}

// Item 8 ---------------------------------------------------------------------

ReproItem disjunction(Context& c) {
  ReproItem it{8, "restricted disjunction property",
               "restricted_dp_check on 50 pairs of non-theorems and 20 pairs containing a theorem",
               "box phi | box psi refuted for every non-theorem pair; nothing claimed otherwise", "", {}};
  c.cov.hit("restricted_dp_check");
  FormulaGenerator gen(8008);
  auto draw = [&](bool theorem) {
    for (;;) {
      F f = gen.upto(8, 2, false);
      if (ipc_valid(f) == theorem) return f;
    }
  };
  Tally refuted, silent;
  for (int i = 0; i < 50; ++i) {
    const F phi = draw(false), psi = draw(false);
    const auto r = restricted_dp_check(phi, psi);
    const bool ok = r.refutation && validate_model(r.refutation->model).ok() &&
                    !satisfies(r.refutation->model, r.refutation->gamma, F::disj(F::box(phi), F::box(psi)));
    refuted.record(ok, [&] { return render(phi) + " ; " + render(psi) + ": " + r.detail; });
  }
  for (int i = 0; i < 20; ++i) {
    F phi = draw(true), psi = gen.upto(8, 2, false);
    if (i % 2) std::swap(phi, psi);
    const auto r = restricted_dp_check(phi, psi);
    silent.record(!r.refutation && !r.attempted, [&] { return render(phi) + " ; " + render(psi); });
  }
  it.checks.push_back(refuted.as_check("non-theorem pairs refuted"));
  it.checks.push_back(silent.as_check("theorem pairs not refuted"));
  summarize(it);
  return it;
}

using ItemFn = ReproItem (*)(Context&);
const std::vector<ItemFn> kItems{proof_scripts, sp_scripts,   soundness_sweep, countermodels,
                                 non_fregean,   value_properties, embedding,   disjunction, iel_soundness};

std::vector<ReproItem> run_items(const ReproOptions& opt, Coverage& cov) {
  Context c{opt, cov, {}};
  std::vector<ReproItem> out;
  for (ItemFn f : kItems) out.push_back(f(c));
  std::sort(out.begin(), out.end(), [](const ReproItem& a, const ReproItem& b) { return a.number < b.number; });
  return out;
}

ReproItem mutation_sensitivity(const ReproOptions& opt, const std::vector<ReproItem>& baseline) {
  ReproItem it{10, "mutation sensitivity", "items 1 to 9 rerun with each mutation applied",
               "every mutation turns at least one passing check into a failure", "", {}};
  std::map<std::string, bool> before;
  for (const auto& item : baseline) {
    for (const auto& ch : item.checks) before[std::to_string(item.number) + ": " + ch.name] = ch.pass;
  }
  std::vector<std::pair<std::string, Mutations>> mutants(4, {"", opt.mut});
  mutants[0].first = "AN on any theorem";
  mutants[0].second.an_axioms_only = false;
  mutants[1].first = "A6 dropped from EL3minus";
  mutants[1].second.a6_in_el3minus = false;
  mutants[2].first = "condition viii not enforced";
  mutants[2].second.enforce_condition_viii = false;
  mutants[3].first = "A8 dropped from EL3";
  mutants[3].second.a8_in_el3 = false;
  for (const auto& [label, mut] : mutants) {
    ReproOptions o = opt;
    o.mut = mut;
    o.mutation_sweep = false;
    Coverage scratch;
    std::vector<std::string> flipped;
    for (const auto& item : run_items(o, scratch)) {
      for (const auto& ch : item.checks) {
        const std::string key = std::to_string(item.number) + ": " + ch.name;
        if (before[key] && !ch.pass) flipped.push_back(key);
      }
    }
    std::string detail = std::to_string(flipped.size()) + " checks fail";
    for (std::size_t i = 0; i < flipped.size() && i < 3; ++i) detail += (i ? ", " : ": ") + flipped[i];
    it.checks.push_back({label, !flipped.empty(), detail});
  }
  summarize(it);
  return it;
}

}  // namespace

const std::vector<std::string>& Coverage::operations() {
  static const std::vector<std::string> ops{
      "parse",          "render",           "substitute",         "abstract_modal",
      "ipc_valid",      "ipc_consequence",  "ipc_countermodel",   "match_axiom",
      "is_int_instance", "check_proof",     "theorem_library",    "downset_lattice",
      "verify_heyting", "filters",          "is_prime_filter",    "is_ultrafilter",
      "has_dp",         "ultrafilter_quotient_check", "enumerate_algebras", "validate_el_model",
      "validate_iel_model", "eval",         "satisfies",          "valid_in_model",
      "enumerate_models", "find_countermodel", "kripke_to_el5",   "embedding_crosscheck",
      "restricted_dp_check", "run",         "reproduce"};
  return ops;
}

std::vector<std::string> Coverage::missing() const {
  std::vector<std::string> out;
  for (const auto& op : operations()) {
    if (!seen_.count(op)) out.push_back(op);
  }
  return out;
}

bool ReproItem::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.pass; });
}

std::size_t ReproReport::passed() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const ReproItem& i) { return i.pass(); }));
}

bool ReproReport::pass() const { return passed() == items.size() && uncovered.empty(); }

std::string default_fixture_dir() { return ELW_FIXTURE_DIR; }

ReproReport reproduce(const ReproOptions& options) {
  Coverage cov;
  return reproduce(options, cov);
}

ReproReport reproduce(const ReproOptions& options, Coverage& coverage) {
  coverage.hit("reproduce");
  coverage.hit("render");
  ReproOptions opt = options;
  if (opt.fixture_dir.empty()) opt.fixture_dir = default_fixture_dir();
  ReproReport r;
  r.items = run_items(opt, coverage);
  if (opt.mutation_sweep) r.items.push_back(mutation_sensitivity(opt, r.items));
  r.uncovered = coverage.missing();
  return r;
}

std::string render_report(const ReproReport& r) {
  std::ostringstream out;
  for (const auto& it : r.items) {
    out << (it.pass() ? "PASS" : "FAIL") << " " << it.number << " " << it.anchor << "\n";
    out << "  command:  " << it.command << "\n";
    out << "  expected: " << it.expected << "\n";
    out << "  observed: " << it.observed << "\n";
    for (const auto& ch : it.checks) {
      if (!ch.pass) out << "  failed:   " << ch.name << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
  }
  const std::size_t ops = Coverage::operations().size();
  out << "coverage: " << ops - r.uncovered.size() << "/" << ops << " operations exercised";
  for (const auto& op : r.uncovered) out << " (missing " << op << ")";
  out << "\n";
  out << "total: " << r.passed() << "/" << r.items.size() << " items passed\n";
  return out.str();
}

std::string report_to_json(const ReproReport& r) {
  nlohmann::ordered_json j;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : r.items) {
    nlohmann::ordered_json item;
    item["number"] = it.number;
    item["anchor"] = it.anchor;
    item["command"] = it.command;
    item["expected"] = it.expected;
    item["observed"] = it.observed;
    item["pass"] = it.pass();
    item["checks"] = nlohmann::ordered_json::array();
    for (const auto& ch : it.checks) item["checks"].push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
    j["items"].push_back(std::move(item));
  }
  j["uncovered"] = r.uncovered;
  j["passed"] = r.passed();
  j["total"] = r.items.size();
  return j.dump(2) + "\n";
}

}  // namespace elw
