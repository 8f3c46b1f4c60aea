#include <algorithm>

#include "elw/models.hpp"

namespace elw {

namespace {

using Clock = std::chrono::steady_clock;

class Enumerator {
 public:
  Enumerator(LogicId cls, const SearchBudget& budget, const std::function<bool(const Model&)>& sink,
             const Mutations& mut)
      : cls_(cls), budget_(budget), sink_(sink), mut_(mut), deadline_(Clock::now() + budget.time_cap) {}

  EnumerationStats run() {
    for (const auto& h : enumerate_algebras(budget_.max_poset_size,
                                            std::max(budget_.max_poset_size, kDefaultPosetCap))) {
      if (!has_dp(h)) continue;  // no model of either family lives on such a carrier
      ++stats_.carriers;
      algebra_ = std::make_shared<const HeytingAlgebra>(h);
      if (is_el_class(cls_)) {
        el_carrier();
      } else {
        iel_carrier();
      }
      if (done()) break;
    }
    return stats_;
  }

 private:
  bool done() const { return stats_.stopped || stats_.budget_exhausted; }

  // Charges one candidate table against the budget.
  bool charge() {
    if (done()) return false;
    ++stats_.candidates;
    if (stats_.candidates > budget_.max_op_tables ||
        ((stats_.candidates & 1023) == 0 && Clock::now() > deadline_)) {
      stats_.budget_exhausted = true;
      return false;
    }
    return true;
  }

  void emit(Model m) {
    if (!validate_model(m, mut_).accepted) return;
    ++stats_.models;
    if (!sink_(m)) {
      stats_.stopped = true;
    } else if (stats_.models >= budget_.max_models) {
      stats_.budget_exhausted = true;
    }
  }

  const HeytingAlgebra& h() const { return *algebra_; }
  int n() const { return static_cast<int>(h().size()); }

  std::vector<Elem> indicator(const std::vector<bool>& bel) const {
    std::vector<Elem> t(bel.size());
    for (std::size_t m = 0; m < bel.size(); ++m) t[m] = bel[m] ? h().top() : h().bot();
    return t;
  }

  // Distribution of know over implication for all pairs whose three indices
  // are assigned and include the latest one.
  bool know_distribution_ok(const std::vector<Elem>& know, int latest) const {
    for (int m = 0; m <= latest; ++m) {
      for (int m2 = 0; m2 <= latest; ++m2) {
        const int i = h().imp(m, m2);
        if (i > latest || (m != latest && m2 != latest && i != latest)) continue;
        if (!h().leq(know[i], h().imp(know[m], know[m2]))) return false;
      }
    }
    return true;
  }

  // EL family --------------------------------------------------------------

  void el_carrier() {
    for (const auto& u : ultrafilters(h())) {
      true_gen_ = u.generator;
      in_true_ = filter_members(h(), u);
      for (const auto& box : box_tables()) {
        box_ = box;
        el_beliefs();
        if (done()) return;
      }
    }
  }

  std::vector<std::vector<Elem>> box_tables() {
    std::vector<std::vector<Elem>> out;
    if (cls_ == LogicId::EL5) {
      std::vector<Elem> collapse(n(), h().bot());
      collapse[h().top()] = h().top();
      out.push_back(std::move(collapse));
      return out;
    }
    std::vector<Elem> box(n(), 0);
    auto dfs = [&](auto&& self, int m) -> void {
      if (done()) return;
      if (m == n()) {
        if (!charge()) return;
        if (box_table_ok(box)) out.push_back(box);
        return;
      }
      // Pruned by deflation and by the truth condition for box.
      for (int v = 0; v < n(); ++v) {
        if (!h().leq(v, m) || in_true_[v] != (m == h().top())) continue;
        box[m] = v;
        self(self, m + 1);
      }
    };
    dfs(dfs, 0);
    return out;
  }

  bool box_table_ok(const std::vector<Elem>& box) const {
    for (int m = 0; m < n(); ++m) {
      if (cls_ >= LogicId::EL4 && !h().leq(box[m], box[box[m]])) return false;
      for (int m2 = 0; m2 < n(); ++m2) {
        if (!h().leq(box[h().join(m, m2)], h().join(box[m], box[m2]))) return false;
        if (!h().leq(box[h().imp(m, m2)], box[h().imp(box[m], box[m2])])) return false;
      }
    }
    return true;
  }

  bool believed_within_true() const { return cls_ >= LogicId::EL3 && mut_.enforce_condition_viii; }

  void el_beliefs() {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n()); ++mask) {
      // Every model believes top: box top is true, so box(know top) is true
      // and know top is top.
      if (!(mask >> h().top() & 1)) continue;
      std::vector<bool> bel(n());
      bool within = true;
      for (int m = 0; m < n(); ++m) {
        bel[m] = mask >> m & 1;
        if (bel[m] && !in_true_[m]) within = false;
      }
      if (believed_within_true() && !within) continue;
      el_know_tables(bel);
      if (done()) return;
    }
  }

  void el_know_tables(const std::vector<bool>& bel) {
    const auto ind = indicator(bel);
    auto make = [&](const std::vector<Elem>& know) {
      return ElModel{algebra_, true_gen_, bel, box_, know, cls_};
    };
    if (!charge()) return;
    emit(make(ind));
    const bool double_negation = cls_ >= LogicId::EL3 && mut_.enforce_condition_viii;
    std::vector<Elem> know(n(), 0);
    auto dfs = [&](auto&& self, int m) -> void {
      if (done()) return;
      if (m == n()) {
        if (know == ind || !charge()) return;
        emit(make(know));
        return;
      }
      for (int v = 0; v < n(); ++v) {
        if (in_true_[v] != bel[m]) continue;
        if (double_negation && !h().leq(v, h().neg(h().neg(m)))) continue;
        if (!h().leq(box_[m], box_[v])) continue;
        know[m] = v;
        if (!know_distribution_ok(know, m)) continue;
        self(self, m + 1);
        if (done()) return;
      }
    };
    dfs(dfs, 0);
  }

  // IEL family -------------------------------------------------------------

  void iel_carrier() {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n()); ++mask) {
      if (!(mask >> h().top() & 1)) continue;
      std::vector<bool> bel(n());
      for (int m = 0; m < n(); ++m) bel[m] = mask >> m & 1;
      iel_know_tables(bel);
      if (done()) return;
    }
  }

  void iel_know_tables(const std::vector<bool>& bel) {
    const auto ind = indicator(bel);
    auto make = [&](const std::vector<Elem>& know) { return IelModel{algebra_, bel, know, cls_}; };
    if (!charge()) return;
    emit(make(ind));
    std::vector<Elem> know(n(), 0);
    auto dfs = [&](auto&& self, int m) -> void {
      if (done()) return;
      if (m == n()) {
        if (know == ind || !charge()) return;
        emit(make(know));
        return;
      }
      for (int v = 0; v < n(); ++v) {
        if (!h().leq(m, v) || (v == h().top()) != bel[m]) continue;
        if (cls_ == LogicId::IEL && !h().leq(v, h().neg(h().neg(m)))) continue;
        know[m] = v;
        if (!know_distribution_ok(know, m)) continue;
        self(self, m + 1);
        if (done()) return;
      }
    };
    dfs(dfs, 0);
  }

  LogicId cls_;
  SearchBudget budget_;
  const std::function<bool(const Model&)>& sink_;
  Mutations mut_;
  Clock::time_point deadline_;
  EnumerationStats stats_;

  std::shared_ptr<const HeytingAlgebra> algebra_;
  Elem true_gen_ = 0;
  std::vector<bool> in_true_;
  std::vector<Elem> box_;
};

}  // namespace

EnumerationStats enumerate_models(LogicId cls, const SearchBudget& budget,
                                  const std::function<bool(const Model&)>& sink, const Mutations& mut) {
  if (!is_el_class(cls) && !is_iel_class(cls)) {
    throw std::invalid_argument("no model class for logic " + std::string(to_string(cls)));
  }
  if (budget.max_poset_size == 0 || budget.max_models == 0 || budget.max_op_tables == 0 ||
      budget.time_cap.count() <= 0) {
    throw std::invalid_argument("search budget fields must be positive");
  }
  return Enumerator(cls, budget, sink, mut).run();
}

SearchResult find_countermodel(const Formula& f, LogicId cls, const SearchBudget& budget,
                               const Mutations& mut) {
  SearchResult result;
  result.stats = enumerate_models(
      cls, budget,
      [&](const Model& m) {
        if (auto g = falsifying_assignment(m, f)) {
          result.found = Countermodel{m, std::move(*g)};
          return false;
        }
        return true;
      },
      mut);
  return result;
}

}  // namespace elw
