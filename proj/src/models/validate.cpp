#include <sstream>

#include "elw/models.hpp"

namespace elw {

namespace {

std::string table_defect(const HeytingAlgebra& h, const std::vector<Elem>& table, const char* name) {
  if (table.size() != h.size()) {
    return std::string(name) + " table has " + std::to_string(table.size()) + " entries for " +
           std::to_string(h.size()) + " elements";
  }
  for (Elem v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= h.size()) {
      return std::string(name) + " table entry " + std::to_string(v) + " is out of range";
    }
  }
  return {};
}

std::optional<Verdict> structural(const std::shared_ptr<const HeytingAlgebra>& h,
                                  const std::vector<bool>& bel) {
  if (!h) return Verdict::reject("model has no algebra");
  if (bel.size() != h->size()) {
    return Verdict::reject("BEL has " + std::to_string(bel.size()) + " flags for " +
                           std::to_string(h->size()) + " elements");
  }
  if (auto v = verify_heyting(*h); !v.accepted) {
    v.reason = "algebra: " + v.reason;
    return v;
  }
  return std::nullopt;
}

// Checks a condition over all elements m, or all pairs (m, m2).
template <typename Pred>
std::optional<Verdict> each(int n, const char* name, Pred pred) {
  for (int m = 0; m < n; ++m) {
    if (!pred(m)) return Verdict::reject(name, {m});
  }
  return std::nullopt;
}

template <typename Pred>
std::optional<Verdict> each_pair(int n, const char* name, Pred pred) {
  for (int m = 0; m < n; ++m) {
    for (int m2 = 0; m2 < n; ++m2) {
      if (!pred(m, m2)) return Verdict::reject(name, {m, m2});
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_el_class(LogicId id) {
  return id == LogicId::EL3minus || id == LogicId::EL3 || id == LogicId::EL4 || id == LogicId::EL5;
}

bool is_iel_class(LogicId id) { return id == LogicId::IELminus || id == LogicId::IEL; }

Verdict validate_el_model(const ElModel& model, const Mutations& mut) {
  if (!is_el_class(model.cls)) {
    return Verdict::reject("class " + std::string(to_string(model.cls)) + " is not an EL model class");
  }
  if (auto v = structural(model.algebra, model.bel)) return *v;
  const HeytingAlgebra& h = *model.algebra;
  for (auto [table, name] : {std::pair{&model.box, "box"}, std::pair{&model.know, "know"}}) {
    if (auto d = table_defect(h, *table, name); !d.empty()) return Verdict::reject(d);
  }
  if (model.true_gen < 0 || static_cast<std::size_t>(model.true_gen) >= h.size()) {
    return Verdict::reject("TRUE generator is out of range", {model.true_gen});
  }
  const Filter truth = principal_filter(h, model.true_gen);
  if (!is_ultrafilter(h, truth)) return Verdict::reject("TRUE is not an ultrafilter", {model.true_gen});

  const auto in_true = filter_members(h, truth);
  const auto& box = model.box;
  const auto& know = model.know;
  const auto& bel = model.bel;
  const int n = static_cast<int>(h.size());
  const int rank = static_cast<int>(model.cls);

  std::optional<Verdict> fail;
  auto run = [&](std::optional<Verdict> v) {
    if (!fail && v) fail = std::move(v);
  };
  run(each_pair(n, "box-join", [&](int m, int m2) {
    return h.leq(box[h.join(m, m2)], h.join(box[m], box[m2]));
  }));
  run(each(n, "box-deflation", [&](int m) { return h.leq(box[m], m); }));
  run(each_pair(n, "box-implication", [&](int m, int m2) {
    return h.leq(box[h.imp(m, m2)], box[h.imp(box[m], box[m2])]);
  }));
  run(each(n, "box-truth", [&](int m) { return in_true[box[m]] == (m == h.top()); }));
  run(each(n, "know-truth", [&](int m) { return in_true[know[m]] == bel[m]; }));
  run(each_pair(n, "know-distribution", [&](int m, int m2) {
    return h.leq(know[h.imp(m, m2)], h.imp(know[m], know[m2]));
  }));
  run(each(n, "box-know", [&](int m) { return h.leq(box[m], box[know[m]]); }));
  if (rank >= static_cast<int>(LogicId::EL3) && mut.enforce_condition_viii) {
    run(each(n, "know-double-negation", [&](int m) { return h.leq(know[m], h.neg(h.neg(m))); }));
  }
  if (rank >= static_cast<int>(LogicId::EL4)) {
    run(each(n, "box-four", [&](int m) { return h.leq(box[m], box[box[m]]); }));
  }
  if (model.cls == LogicId::EL5) {
    run(each(n, "box-collapse", [&](int m) { return box[m] == (m == h.top() ? h.top() : h.bot()); }));
  }

  Verdict out = fail ? *fail : Verdict::accept();
  out.assertions.push_back({"disjunction property", has_dp(h), has_dp(h) ? "" : "top is join-reducible"});
  if (rank >= static_cast<int>(LogicId::EL3)) {
    Assertion a{"BEL within TRUE", true, ""};
    for (int m = 0; m < n; ++m) {
      if (bel[m] && !in_true[m]) {
        a.holds = false;
        a.detail = "element " + std::to_string(m) + " is believed but not true";
        break;
      }
    }
    out.assertions.push_back(a);
  }
  return out;
}

Verdict validate_iel_model(const IelModel& model) {
  if (!is_iel_class(model.cls)) {
    return Verdict::reject("class " + std::string(to_string(model.cls)) + " is not an IEL model class");
  }
  if (auto v = structural(model.algebra, model.bel)) return *v;
  const HeytingAlgebra& h = *model.algebra;
  if (auto d = table_defect(h, model.know, "know"); !d.empty()) return Verdict::reject(d);
  const auto& know = model.know;
  const auto& bel = model.bel;
  const int n = static_cast<int>(h.size());

  if (!bel[h.top()]) return Verdict::reject("top-believed", {h.top()});
  std::optional<Verdict> fail;
  auto run = [&](std::optional<Verdict> v) {
    if (!fail && v) fail = std::move(v);
  };
  run(each(n, "know-top", [&](int m) { return (know[m] == h.top()) == bel[m]; }));
  run(each(n, "co-reflection", [&](int m) { return h.leq(m, know[m]); }));
  run(each_pair(n, "know-distribution", [&](int m, int m2) {
    return h.leq(know[h.imp(m, m2)], h.imp(know[m], know[m2]));
  }));
  if (!fail && !has_dp(h)) fail = Verdict::reject("disjunction property");
  if (model.cls == LogicId::IEL) {
    run(each(n, "know-double-negation", [&](int m) { return h.leq(know[m], h.neg(h.neg(m))); }));
  }
  return fail ? *fail : Verdict::accept();
}

Verdict validate_model(const Model& m, const Mutations& mut) {
  return std::visit(
      [&](const auto& model) {
        if constexpr (std::is_same_v<std::decay_t<decltype(model)>, ElModel>) {
          return validate_el_model(model, mut);
        } else {
          return validate_iel_model(model);
        }
      },
      m);
}

const HeytingAlgebra& algebra_of(const Model& m) {
  return *std::visit([](const auto& model) { return model.algebra; }, m);
}

LogicId class_of(const Model& m) {
  return std::visit([](const auto& model) { return model.cls; }, m);
}

std::string describe(const Model& m) {
  std::ostringstream os;
  const HeytingAlgebra& h = algebra_of(m);
  os << "class " << to_string(class_of(m)) << "\n" << describe(h);
  auto list = [&](const char* name, const std::vector<Elem>& t) {
    os << name << ":";
    for (Elem v : t) os << ' ' << v;
    os << '\n';
  };
  auto bel = [&](const std::vector<bool>& b) {
    os << "BEL:";
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i]) os << ' ' << i;
    }
    os << '\n';
  };
  if (const auto* el = std::get_if<ElModel>(&m)) {
    os << "TRUE: up-set of " << el->true_gen << '\n';
    bel(el->bel);
    list("box", el->box);
    list("know", el->know);
  } else {
    const auto& iel = std::get<IelModel>(m);
    bel(iel.bel);
    list("know", iel.know);
  }
  return os.str();
}

std::string describe(const Assignment& gamma) {
  std::string out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += "x" + std::to_string(i) + "=" + std::to_string(gamma[i]);
  }
  return out;
}

}  // namespace elw
