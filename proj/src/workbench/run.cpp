#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "elw/io.hpp"
#include "elw/workbench.hpp"
#include "json.hpp"

namespace elw {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LogicId logic_arg(const std::string& text) {
  if (auto id = logic_from_string(text)) return *id;
  throw UsageError("unknown logic '" + text + "'; expected L3, EL3minus, EL3, EL4, EL5, IELminus or IEL");
}

Formula formula_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse formula: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mutations mutations_arg(const std::vector<std::string>& names) {
  Mutations m;
  for (const auto& n : names) {
    if (n == "an-any-theorem") {
      m.an_axioms_only = false;
    } else if (n == "drop-a6") {
      m.a6_in_el3minus = false;
    } else if (n == "drop-a8") {
      m.a8_in_el3 = false;
    } else if (n == "skip-viii") {
      m.enforce_condition_viii = false;
    } else {
      throw UsageError("unknown mutation '" + n + "'");
    }
  }
  return m;
}

Json model_json(const Model& m) { return Json::parse(model_to_json(m)); }

Json stats_json(const EnumerationStats& s) {
  return Json{{"carriers", s.carriers},
              {"candidates", s.candidates},
              {"models", s.models},
              {"budget_exhausted", s.budget_exhausted}};
}

Json kripke_json(const KripkeModel& k) {
  Json order = Json::array();
  for (std::size_t v = 0; v < k.worlds; ++v) {
    for (std::size_t w = 0; w < k.worlds; ++w) {
      if (k.leq(v, w)) order.push_back({v, w});
    }
  }
  Json val = Json::array();
  for (const auto& row : k.valuation) {
    Json worlds = Json::array();
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w]) worlds.push_back(w);
    }
    val.push_back(worlds);
  }
  return Json{{"worlds", k.worlds}, {"root", k.root}, {"leq", order}, {"valuation", val}};
}

std::string stats_line(const EnumerationStats& s) {
  return "carriers: " + std::to_string(s.carriers) + ", candidates: " + std::to_string(s.candidates) +
         ", models: " + std::to_string(s.models) + (s.budget_exhausted ? ", budget exhausted" : "");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

struct BudgetFlags {
  std::size_t max_poset = 3;
  std::size_t max_models = SearchBudget{}.max_models;
  double time_cap = 30;

  void add(CLI::App* sub) {
    sub->add_option("--max-poset", max_poset, "Largest poset whose down-set lattice is a carrier")
        ->capture_default_str()
        ->check(CLI::Range(1, 6));
    sub->add_option("--max-models", max_models, "Stop after this many models")->capture_default_str();
    sub->add_option("--time-cap", time_cap, "Seconds per search")->capture_default_str()->check(CLI::PositiveNumber);
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.max_poset_size = max_poset;
    b.max_models = max_models;
    b.time_cap = std::chrono::milliseconds(static_cast<long long>(time_cap * 1000));
    return b;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for epistemic logics over Heyting algebras", "elw"};
  app.require_subcommand(1);
  app.footer(std::string(grammar_help()));

  bool json = false;
  std::vector<std::string> mutate;
  std::string formula_text, file, logic_text = "EL5", phi_text, chi_text, fixture_dir;
  BudgetFlags budget;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "Machine-readable output");
    sub->add_option("--mutate", mutate, "Weaken a check (testing only)")->group("");
  };

  auto* parse_cmd = app.add_subcommand("parse", "Parse and print a formula");
  parse_cmd->add_option("formula", formula_text)->required();
  common(parse_cmd);

  auto* ipc_cmd = app.add_subcommand("ipc", "Decide IPC validity of a box/K-free formula");
  ipc_cmd->add_option("formula", formula_text)->required();
  common(ipc_cmd);

  auto* check_cmd = app.add_subcommand("check-proof", "Check a proof script");
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--logic", logic_text)->required();
  common(check_cmd);

  auto* find_cmd = app.add_subcommand("find-countermodel", "Search for a countermodel in a model class");
  find_cmd->add_option("formula", formula_text)->required();
  find_cmd->add_option("--logic", logic_text)->capture_default_str();
  budget.add(find_cmd);
  common(find_cmd);

  auto* validate_cmd = app.add_subcommand("validate-model", "Validate a model file");
  validate_cmd->add_option("file", file)->required();
  common(validate_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate the models of a class");
  enum_cmd->add_option("--logic", logic_text)->required();
  budget.add(enum_cmd);
  common(enum_cmd);

  auto* embed_cmd = app.add_subcommand("embed-test", "Compare IPC consequence with boxed consequence in EL5");
  embed_cmd->add_option("--phi", phi_text, "Comma-separated premises");
  embed_cmd->add_option("--chi", chi_text)->required();
  budget.add(embed_cmd);
  common(embed_cmd);

  auto* repro_cmd = app.add_subcommand("reproduce", "Run the reproduction suite");
  repro_cmd->add_option("--fixtures", fixture_dir, "Directory of fixture models")->default_str(default_fixture_dir());
  common(repro_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n\n" << app.help() << "\n";
    return kUsage;
  }

  try {
    const Mutations mut = mutations_arg(mutate);

    if (parse_cmd->parsed()) {
      const Formula f = formula_arg(formula_text);
      if (json) {
        out << Json{{"formula", render(f)}, {"size", f.size()}, {"variables", variables(f)}}.dump() << "\n";
      } else {
        out << render(f) << "\n";
      }
      return kOk;
    }

    if (ipc_cmd->parsed()) {
      const Formula f = formula_arg(formula_text);
      if (!f.is_propositional()) throw UsageError("ipc takes a formula without box or K");
      try {
        const auto k = ipc_countermodel(f);
        if (json) {
          Json j{{"formula", render(f)}, {"valid", !k}};
          if (k) j["countermodel"] = kripke_json(*k);
          out << j.dump() << "\n";
        } else {
          out << (k ? "invalid" : "valid") << "\n";
          if (k) out << describe(*k);
        }
        return k ? kCheckFailed : kOk;
      } catch (const BudgetExceeded& e) {
        out << (json ? Json{{"formula", render(f)}, {"valid", nullptr}}.dump() : "undecided: " + std::string(e.what()))
            << "\n";
        return kCheckFailed;
      }
    }

    if (check_cmd->parsed()) {
      const LogicId logic = logic_arg(logic_text);
      const std::string text = read_file(file);
      Verdict v;
      try {
        v = check_proof(parse_script(text), logic, mut);
      } catch (const ScriptError& e) {
        v = Verdict::reject(e.what());
        v.line = e.line();
      }
      if (json) {
        Json j{{"file", file}, {"logic", to_string(logic)}, {"accepted", v.accepted}};
        if (!v.accepted) j["reason"] = v.reason;
        out << j.dump() << "\n";
      } else if (v.accepted) {
        out << "accepted\n";
      } else {
        out << "rejected: " << file << ": " << v.reason << "\n";
      }
      return v.accepted ? kOk : kCheckFailed;
    }

    if (find_cmd->parsed()) {
      const Formula f = formula_arg(formula_text);
      const LogicId logic = logic_arg(logic_text);
      const auto r = find_countermodel(f, logic, budget.budget(), mut);
      if (json) {
        Json j{{"formula", render(f)}, {"logic", to_string(logic)}, {"found", r.found.has_value()}};
        if (r.found) {
          j["model"] = model_json(r.found->model);
          j["assignment"] = r.found->gamma;
        }
        j["stats"] = stats_json(r.stats);
        out << j.dump() << "\n";
      } else if (r.found) {
        out << model_to_json(r.found->model) << "assignment: " << describe(r.found->gamma) << "\n";
      } else {
        out << "none found within budget (" << stats_line(r.stats) << ")\n";
      }
      return r.found ? kOk : kCheckFailed;
    }

    if (validate_cmd->parsed()) {
      const std::string text = read_file(file);
      Model m;
      try {
        m = model_from_json(text);
      } catch (const ModelFileError& e) {
        if (json) {
          out << Json{{"file", file}, {"accepted", false}, {"where", e.where()}, {"reason", e.what()}}.dump() << "\n";
        } else {
          out << "rejected: " << file << ": " << e.where() << ": " << e.what() << "\n";
        }
        return kCheckFailed;
      }
      const auto v = validate_model(m, mut);
      if (json) {
        Json j{{"file", file}, {"class", to_string(class_of(m))}, {"accepted", v.accepted}};
        if (!v.accepted) {
          j["reason"] = v.reason;
          j["witness"] = v.witness;
        }
        j["assertions"] = Json::array();
        for (const auto& a : v.assertions) j["assertions"].push_back({{"name", a.name}, {"holds", a.holds}});
        out << j.dump() << "\n";
      } else {
        if (v.accepted) {
          out << "accepted\n";
        } else {
          out << "rejected: " << v.reason;
          for (std::size_t i = 0; i < v.witness.size(); ++i) out << (i ? "," : " at ") << v.witness[i];
          out << "\n";
        }
        for (const auto& a : v.assertions) {
          out << "assertion " << a.name << ": " << (a.holds ? "holds" : "fails")
              << (a.detail.empty() ? "" : " (" + a.detail + ")") << "\n";
        }
      }
      return v.ok() ? kOk : kCheckFailed;
    }

    if (enum_cmd->parsed()) {
      const LogicId logic = logic_arg(logic_text);
      if (!is_el_class(logic) && !is_iel_class(logic)) throw UsageError("no model class for " + logic_text);
      Json models = Json::array();
      std::size_t index = 0;
      const auto stats = enumerate_models(
          logic, budget.budget(),
          [&](const Model& m) {
            if (json) {
              models.push_back(model_json(m));
            } else {
              out << "model " << ++index << ": " << describe(m) << "\n";
            }
            return true;
          },
          mut);
      if (json) {
        out << Json{{"logic", to_string(logic)}, {"models", models}, {"stats", stats_json(stats)}}.dump() << "\n";
      } else {
        out << stats_line(stats) << "\n";
      }
      return kOk;
    }

    if (embed_cmd->parsed()) {
      std::vector<Formula> premises;
      for (const auto& p : split_commas(phi_text)) premises.push_back(formula_arg(p));
      const Formula chi = formula_arg(chi_text);
      for (const auto& p : premises) {
        if (!p.is_propositional()) throw UsageError("premises must be free of box and K");
      }
      if (!chi.is_propositional()) throw UsageError("chi must be free of box and K");
      const auto r = embedding_crosscheck(premises, chi, budget.budget());
      if (json) {
        Json j{{"ipc_consequence", r.ipc_consequence},
               {"agreement", r.agreement},
               {"search_hit", r.search_hit.has_value()},
               {"budget_exhausted", r.budget_exhausted},
               {"detail", r.detail}};
        if (r.refutation) {
          j["refutation"] = {{"model", model_json(r.refutation->model)}, {"assignment", r.refutation->gamma}};
        }
        out << j.dump() << "\n";
      } else {
        out << "ipc consequence: " << (r.ipc_consequence ? "yes" : "no") << "\n";
        out << "agreement: " << (r.agreement ? "yes" : "no") << "\n";
        out << r.detail << "\n";
        if (r.refutation) {
          out << model_to_json(r.refutation->model) << "assignment: " << describe(r.refutation->gamma) << "\n";
        }
      }
      return r.agreement ? kOk : kCheckFailed;
    }

    if (repro_cmd->parsed()) {
      ReproOptions opt;
      opt.mut = mut;
      opt.fixture_dir = fixture_dir.empty() ? default_fixture_dir() : fixture_dir;
      const auto r = reproduce(opt);
      out << (json ? report_to_json(r) : render_report(r));
      return r.pass() ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << grammar_help();
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n\n" << grammar_help();
    return kUsage;
  }
  return kUsage;
}

}  // namespace elw
