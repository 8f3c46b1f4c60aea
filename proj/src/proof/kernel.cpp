#include <array>
#include <mutex>
#include <unordered_map>

#include "elw/ipc.hpp"
#include "elw/proof.hpp"

namespace elw {

namespace {

constexpr std::array<std::pair<LogicId, std::string_view>, 7> kLogicNames{{
    {LogicId::L3, "L3"},
    {LogicId::EL3minus, "EL3minus"},
    {LogicId::EL3, "EL3"},
    {LogicId::EL4, "EL4"},
    {LogicId::EL5, "EL5"},
    {LogicId::IELminus, "IELminus"},
    {LogicId::IEL, "IEL"},
}};

constexpr std::array<std::pair<Axiom, std::string_view>, 10> kAxiomNames{{
    {Axiom::A1, "A1"},
    {Axiom::A2, "A2"},
    {Axiom::A3, "A3"},
    {Axiom::A4, "A4"},
    {Axiom::A5, "A5"},
    {Axiom::A6, "A6"},
    {Axiom::A7, "A7"},
    {Axiom::A8, "A8"},
    {Axiom::CO, "CO"},
    {Axiom::INT, "INT"},
}};

// Scheme patterns over metavariables x0 (phi) and x1 (psi).
Formula pattern(Axiom a) {
  const Formula p = Formula::var(0), q = Formula::var(1);
  using F = Formula;
  switch (a) {
    case Axiom::A1:
      return F::implies(F::box(F::disj(p, q)), F::disj(F::box(p), F::box(q)));
    case Axiom::A2:
      return F::implies(F::box(p), p);
    case Axiom::A3:
      return F::implies(F::box(F::implies(p, q)), F::box(F::implies(F::box(p), F::box(q))));
    case Axiom::A4:
      return F::implies(F::box(p), F::box(F::box(p)));
    case Axiom::A5:
      return F::implies(F::neg(F::box(p)), F::box(F::neg(F::box(p))));
    case Axiom::A6:
      return F::implies(F::know(F::implies(p, q)), F::implies(F::know(p), F::know(q)));
    case Axiom::A7:
      return F::implies(F::box(p), F::box(F::know(p)));
    case Axiom::A8:
      return F::implies(F::know(p), F::neg(F::neg(p)));
    case Axiom::CO:
      return F::implies(p, F::know(p));
    case Axiom::INT:
      break;
  }
  throw std::logic_error("INT has no single pattern");
}

bool unify(const Formula& pat, const Formula& target, std::unordered_map<VarIndex, Formula>& bound) {
  if (pat.kind() == Kind::Var) {
    auto [it, fresh] = bound.try_emplace(pat.var_index(), target);
    return fresh || it->second == target;
  }
  if (pat.kind() != target.kind()) return false;
  switch (pat.kind()) {
    case Kind::Bottom:
      return true;
    case Kind::Box:
    case Kind::Know:
      return unify(pat.inner(), target.inner(), bound);
    default:
      return unify(pat.left(), target.left(), bound) && unify(pat.right(), target.right(), bound);
  }
}

bool matches_pattern(const Formula& f, const Formula& pat) {
  std::unordered_map<VarIndex, Formula> bound;
  return unify(pat, f, bound);
}

// Scripts and sweeps ask about the same skeletons repeatedly.
class IntCache {
 public:
  std::optional<bool> find(const Formula& f) {
    std::lock_guard lock(mu_);
    auto it = map_.find(f);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Formula& f, bool v) {
    std::lock_guard lock(mu_);
    if (map_.size() > 200'000) map_.clear();
    map_.emplace(f, v);
  }

 private:
  std::mutex mu_;
  std::unordered_map<Formula, bool, FormulaHash> map_;
};

IntCache& int_cache() {
  static IntCache cache;
  return cache;
}

std::string line_ref_error(std::size_t ref, std::size_t current) {
  return "reference to line " + std::to_string(ref) + " is not an earlier line of line " +
         std::to_string(current);
}

}  // namespace

std::string_view to_string(LogicId id) {
  for (auto [k, v] : kLogicNames) {
    if (k == id) return v;
  }
  return "?";
}

std::optional<LogicId> logic_from_string(std::string_view text) {
  for (auto [k, v] : kLogicNames) {
    if (v == text) return k;
  }
  return std::nullopt;
}

bool is_modal_family(LogicId id) { return id != LogicId::IELminus && id != LogicId::IEL; }

std::string_view to_string(Axiom a) {
  for (auto [k, v] : kAxiomNames) {
    if (k == a) return v;
  }
  return "?";
}

std::optional<Axiom> axiom_from_string(std::string_view text) {
  for (auto [k, v] : kAxiomNames) {
    if (v == text) return k;
  }
  return std::nullopt;
}

std::vector<Axiom> axioms_of(LogicId logic, const Mutations& mut) {
  std::vector<Axiom> out;
  switch (logic) {
    case LogicId::IEL:
      out = {Axiom::A6, Axiom::A8, Axiom::CO};
      break;
    case LogicId::IELminus:
      out = {Axiom::A6, Axiom::CO};
      break;
    default: {
      const int rank = static_cast<int>(logic);
      out = {Axiom::A1, Axiom::A2, Axiom::A3};
      if (rank >= static_cast<int>(LogicId::EL4)) out.push_back(Axiom::A4);
      if (rank >= static_cast<int>(LogicId::EL5)) out.push_back(Axiom::A5);
      if (rank >= static_cast<int>(LogicId::EL3minus) && mut.a6_in_el3minus) out.push_back(Axiom::A6);
      if (rank >= static_cast<int>(LogicId::EL3minus)) out.push_back(Axiom::A7);
      if (rank >= static_cast<int>(LogicId::EL3) && mut.a8_in_el3) out.push_back(Axiom::A8);
      break;
    }
  }
  out.push_back(Axiom::INT);
  return out;
}

Formula scheme_pattern(Axiom scheme) { return pattern(scheme); }

bool matches_scheme(const Formula& f, Axiom scheme) {
  if (scheme == Axiom::INT) return is_int_instance(f);
  return matches_pattern(f, pattern(scheme));
}

bool matches_tertium(const Formula& f) {
  static const Formula pat = Formula::disj(Formula::var(0), Formula::neg(Formula::var(0)));
  return matches_pattern(f, pat);
}

bool is_int_instance(const Formula& f) {
  const Formula skeleton = abstract_modal(f).skeleton;
  if (auto hit = int_cache().find(skeleton)) return *hit;
  const bool valid = ipc_valid(skeleton);
  int_cache().store(skeleton, valid);
  return valid;
}

std::optional<Axiom> match_axiom(const Formula& f, LogicId logic, const Mutations& mut) {
  for (Axiom a : axioms_of(logic, mut)) {
    if (matches_scheme(f, a)) return a;
  }
  return std::nullopt;
}

const Formula& ProofScript::conclusion() const {
  if (lines.empty()) throw std::logic_error("empty proof script has no conclusion");
  return lines.back().formula;
}

Verdict check_proof(const ProofScript& script, LogicId logic, const Mutations& mut) {
  const auto schemes = axioms_of(logic, mut);
  const auto& lines = script.lines;
  for (std::size_t k = 1; k <= lines.size(); ++k) {
    const ProofLine& line = lines[k - 1];
    const Justification& j = line.justification;
    auto reject = [&](std::string why) {
      Verdict v = Verdict::reject("line " + std::to_string(k) + ": " + why);
      v.line = k;
      return v;
    };
    auto earlier = [&](std::size_t ref) { return ref >= 1 && ref < k; };

    switch (j.rule) {
      case Justification::Rule::Axiom: {
        if (std::find(schemes.begin(), schemes.end(), j.axiom) == schemes.end()) {
          return reject("scheme " + std::string(to_string(j.axiom)) + " is not available in " +
                        std::string(to_string(logic)));
        }
        bool ok = false;
        try {
          ok = matches_scheme(line.formula, j.axiom);
        } catch (const BudgetExceeded& e) {
          return reject(std::string("IPC check gave up: ") + e.what());
        }
        if (!ok) {
          return reject(j.axiom == Axiom::INT
                            ? "not a substitution instance of an IPC theorem"
                            : "formula does not match scheme " + std::string(to_string(j.axiom)));
        }
        break;
      }
      case Justification::Rule::TheoremT:
        if (!is_modal_family(logic)) {
          return reject("tertium non datur is not available in " + std::string(to_string(logic)));
        }
        if (!matches_tertium(line.formula)) return reject("formula is not of the form f | ~f");
        break;
      case Justification::Rule::Hypothesis:
        if (j.first < 1 || j.first > script.hypotheses.size()) {
          return reject("no hypothesis " + std::to_string(j.first));
        }
        if (!(script.hypotheses[j.first - 1] == line.formula)) {
          return reject("formula differs from hypothesis " + std::to_string(j.first));
        }
        break;
      case Justification::Rule::MP: {
        if (!earlier(j.first)) return reject(line_ref_error(j.first, k));
        if (!earlier(j.second)) return reject(line_ref_error(j.second, k));
        const Formula& premise = lines[j.first - 1].formula;
        const Formula& imp = lines[j.second - 1].formula;
        if (imp.kind() != Kind::Implies || !(imp.left() == premise)) {
          return reject("line " + std::to_string(j.second) + " is not an implication from line " +
                        std::to_string(j.first));
        }
        if (!(imp.right() == line.formula)) {
          return reject("formula is not the consequent of line " + std::to_string(j.second));
        }
        break;
      }
      case Justification::Rule::AN: {
        if (!is_modal_family(logic)) {
          return reject("rule AN is not available in " + std::string(to_string(logic)));
        }
        if (!earlier(j.first)) return reject(line_ref_error(j.first, k));
        const ProofLine& source = lines[j.first - 1];
        if (mut.an_axioms_only && source.justification.rule != Justification::Rule::Axiom) {
          return reject("AN applies only to axioms, but line " + std::to_string(j.first) +
                        " is justified by " + render_justification(source.justification));
        }
        if (!(Formula::box(source.formula) == line.formula)) {
          return reject("formula is not box of line " + std::to_string(j.first));
        }
        break;
      }
    }
  }
  return Verdict::accept();
}

}  // namespace elw
