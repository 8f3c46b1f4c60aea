#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "elw/heyting.hpp"

namespace elw {

Poset::Poset(std::size_t size, std::vector<bool> leq) : size_(size), leq_(std::move(leq)) {
  if (leq_.size() != size_ * size_) throw StructureError("poset relation has the wrong size");
  for (std::size_t a = 0; a < size_; ++a) {
    if (!leq_[a * size_ + a]) throw StructureError("poset relation is not reflexive");
    for (std::size_t b = 0; b < size_; ++b) {
      if (a != b && leq_[a * size_ + b] && leq_[b * size_ + a]) {
        throw StructureError("poset relation is not antisymmetric");
      }
      if (!leq_[a * size_ + b]) continue;
      for (std::size_t c = 0; c < size_; ++c) {
        if (leq_[b * size_ + c] && !leq_[a * size_ + c]) {
          throw StructureError("poset relation is not transitive");
        }
      }
    }
  }
}

Poset Poset::from_pairs(std::size_t size, const std::vector<std::pair<int, int>>& below) {
  std::vector<bool> rel(size * size, false);
  for (std::size_t a = 0; a < size; ++a) rel[a * size + a] = true;
  for (auto [a, b] : below) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= size || static_cast<std::size_t>(b) >= size) {
      throw StructureError("poset pair out of range");
    }
    rel[static_cast<std::size_t>(a) * size + b] = true;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!rel[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (rel[k * size + j]) rel[i * size + j] = true;
      }
    }
  }
  return Poset(size, std::move(rel));
}

HeytingAlgebra HeytingAlgebra::from_order(std::size_t size, std::vector<bool> leq) {
  if (size == 0) throw StructureError("algebra must have at least one element");
  if (leq.size() != size * size) throw StructureError("order table has the wrong size");
  Poset(size, leq);  // validates the relation

  HeytingAlgebra h;
  h.size_ = size;
  h.leq_ = std::move(leq);
  auto le = [&](std::size_t a, std::size_t b) { return h.leq_[a * size + b]; };

  bool found_bot = false, found_top = false;
  for (std::size_t a = 0; a < size; ++a) {
    bool below_all = true, above_all = true;
    for (std::size_t b = 0; b < size; ++b) {
      below_all = below_all && le(a, b);
      above_all = above_all && le(b, a);
    }
    if (below_all) h.bot_ = static_cast<Elem>(a), found_bot = true;
    if (above_all) h.top_ = static_cast<Elem>(a), found_top = true;
  }
  if (!found_bot || !found_top) throw StructureError("order has no least or no greatest element");

  h.meet_.assign(size * size, 0);
  h.join_.assign(size * size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      int glb = -1, lub = -1;
      for (std::size_t c = 0; c < size; ++c) {
        if (le(c, a) && le(c, b) && (glb < 0 || le(static_cast<std::size_t>(glb), c))) {
          glb = static_cast<int>(c);
        }
        if (le(a, c) && le(b, c) && (lub < 0 || le(c, static_cast<std::size_t>(lub)))) {
          lub = static_cast<int>(c);
        }
      }
      // The candidate must be comparable with every other bound.
      for (std::size_t c = 0; c < size; ++c) {
        if (le(c, a) && le(c, b) && !le(c, static_cast<std::size_t>(glb))) {
          throw StructureError("order is not a lattice: no meet of " + std::to_string(a) +
                               " and " + std::to_string(b));
        }
        if (le(a, c) && le(b, c) && !le(static_cast<std::size_t>(lub), c)) {
          throw StructureError("order is not a lattice: no join of " + std::to_string(a) +
                               " and " + std::to_string(b));
        }
      }
      h.meet_[a * size + b] = glb;
      h.join_[a * size + b] = lub;
    }
  }

  h.imp_.assign(size * size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      Elem acc = h.bot_;
      for (std::size_t x = 0; x < size; ++x) {
        if (le(static_cast<std::size_t>(h.meet_[x * size + a]), b)) {
          acc = h.join_[static_cast<std::size_t>(acc) * size + x];
        }
      }
      h.imp_[a * size + b] = acc;
    }
  }
  return h;
}

HeytingAlgebra HeytingAlgebra::from_tables(std::size_t size, std::vector<bool> leq, Elem bot,
                                           Elem top, std::vector<Elem> meet,
                                           std::vector<Elem> join, std::vector<Elem> imp) {
  const std::size_t cells = size * size;
  if (leq.size() != cells || meet.size() != cells || join.size() != cells || imp.size() != cells) {
    throw StructureError("operation table has the wrong size");
  }
  auto in_range = [&](Elem e) { return e >= 0 && static_cast<std::size_t>(e) < size; };
  if (!in_range(bot) || !in_range(top)) throw StructureError("bound out of range");
  for (std::size_t i = 0; i < cells; ++i) {
    if (!in_range(meet[i]) || !in_range(join[i]) || !in_range(imp[i])) {
      throw StructureError("operation table entry out of range");
    }
  }
  HeytingAlgebra h;
  h.size_ = size;
  h.bot_ = bot;
  h.top_ = top;
  h.leq_ = std::move(leq);
  h.meet_ = std::move(meet);
  h.join_ = std::move(join);
  h.imp_ = std::move(imp);
  return h;
}

HeytingAlgebra HeytingAlgebra::with_imp(Elem a, Elem b, Elem value) const {
  HeytingAlgebra copy = *this;
  copy.imp_[idx(a, b)] = value;
  return copy;
}

HeytingAlgebra downset_lattice(const Poset& p, std::size_t max_elements) {
  const std::size_t n = p.size();
  if (n > 64) throw StructureError("downset lattice supports at most 64 points");

  // Points in a linear extension order, so a point may join a downset once
  // everything strictly below it is present.
  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::vector<std::size_t> below_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below_count[i] += p.leq(static_cast<int>(j), static_cast<int>(i)) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below_count[a] < below_count[b]; });
  std::vector<std::uint64_t> strictly_below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(static_cast<int>(j), static_cast<int>(i))) strictly_below[i] |= std::uint64_t{1} << j;
    }
  }

  std::vector<std::uint64_t> sets;
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [pos, mask] = stack.back();
    stack.pop_back();
    if (pos == n) {
      if (sets.size() >= max_elements) {
        throw StructureError("downset lattice exceeds " + std::to_string(max_elements) + " elements");
      }
      sets.push_back(mask);
      continue;
    }
    const int point = order[pos];
    stack.push_back({pos + 1, mask});
    if ((strictly_below[point] & ~mask) == 0) stack.push_back({pos + 1, mask | (std::uint64_t{1} << point)});
  }
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });

  const std::size_t m = sets.size();
  std::unordered_map<std::uint64_t, Elem> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(sets[i], static_cast<Elem>(i));

  HeytingAlgebra h;
  h.size_ = m;
  h.bot_ = 0;
  h.top_ = static_cast<Elem>(m - 1);
  h.labels_ = sets;
  h.leq_.assign(m * m, false);
  h.meet_.assign(m * m, 0);
  h.join_.assign(m * m, 0);
  h.imp_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::uint64_t sa = sets[a], sb = sets[b];
      h.leq_[a * m + b] = (sa & ~sb) == 0;
      h.meet_[a * m + b] = index.at(sa & sb);
      h.join_[a * m + b] = index.at(sa | sb);
      // A point lies in a -> b iff every point below it that is in a is in b.
      std::uint64_t impl = 0;
      for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t down = strictly_below[q] | (std::uint64_t{1} << q);
        if ((down & sa & ~sb) == 0) impl |= std::uint64_t{1} << q;
      }
      h.imp_[a * m + b] = index.at(impl);
    }
  }
  return h;
}

Verdict verify_heyting(const HeytingAlgebra& h) {
  const int n = static_cast<int>(h.size());
  if (n == 0) return Verdict::reject("empty carrier");
  for (int a = 0; a < n; ++a) {
    if (!h.leq(a, a)) return Verdict::reject("order not reflexive", {a});
    for (int b = 0; b < n; ++b) {
      if (a != b && h.leq(a, b) && h.leq(b, a)) return Verdict::reject("order not antisymmetric", {a, b});
      for (int c = 0; c < n; ++c) {
        if (h.leq(a, b) && h.leq(b, c) && !h.leq(a, c)) {
          return Verdict::reject("order not transitive", {a, b, c});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!h.leq(h.bot(), a)) return Verdict::reject("bot is not least", {a});
    if (!h.leq(a, h.top())) return Verdict::reject("top is not greatest", {a});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Elem m = h.meet(a, b), j = h.join(a, b);
      if (!h.leq(m, a) || !h.leq(m, b)) return Verdict::reject("meet is not a lower bound", {a, b});
      if (!h.leq(a, j) || !h.leq(b, j)) return Verdict::reject("join is not an upper bound", {a, b});
      for (int c = 0; c < n; ++c) {
        if (h.leq(c, a) && h.leq(c, b) && !h.leq(c, m)) {
          return Verdict::reject("meet is not the greatest lower bound", {a, b, c});
        }
        if (h.leq(a, c) && h.leq(b, c) && !h.leq(j, c)) {
          return Verdict::reject("join is not the least upper bound", {a, b, c});
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (h.meet(a, h.join(b, c)) != h.join(h.meet(a, b), h.meet(a, c))) {
          return Verdict::reject("distributivity fails", {a, b, c});
        }
      }
    }
  }
  // Scan x downwards; in downset lattices the top comes first.
  for (int x = n - 1; x >= 0; --x) {
    for (int m = 0; m < n; ++m) {
      for (int m2 = 0; m2 < n; ++m2) {
        if (h.leq(x, h.imp(m, m2)) != h.leq(h.meet(x, m), m2)) {
          return Verdict::reject("residuation fails", {x, m, m2});
        }
      }
    }
  }
  return Verdict::accept();
}

std::string describe(const HeytingAlgebra& h) {
  std::ostringstream os;
  os << "elements: " << h.size() << " (bot " << h.bot() << ", top " << h.top() << ")\ncovers:";
  const int n = static_cast<int>(h.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !h.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (c != a && c != b && h.leq(a, c) && h.leq(c, b)) cover = false;
      }
      if (cover) os << ' ' << a << '<' << b;
    }
  }
  os << '\n';
  return os.str();
}

}  // namespace elw
