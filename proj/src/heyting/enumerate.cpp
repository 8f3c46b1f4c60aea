#include <algorithm>
#include <map>
#include <set>

#include "elw/heyting.hpp"

namespace elw {

namespace {

// Colour refinement by (below, above) counts and neighbour colours.
std::vector<std::size_t> refine(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> colour(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::vector<std::size_t>> signature(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::size_t> below, above;
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        if (p.leq(static_cast<int>(b), static_cast<int>(a))) below.push_back(colour[b]);
        if (p.leq(static_cast<int>(a), static_cast<int>(b))) above.push_back(colour[b]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      auto& s = signature[a];
      s.push_back(colour[a]);
      s.push_back(below.size());
      s.insert(s.end(), below.begin(), below.end());
      s.push_back(above.size());
      s.insert(s.end(), above.begin(), above.end());
    }
    std::vector<std::vector<std::size_t>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (std::size_t a = 0; a < n; ++a) {
      next[a] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[a]) - distinct.begin());
    }
    const bool stable = next == colour;
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

std::string poset_certificate(const Poset& p) {
  const std::size_t n = p.size();
  const auto colour = refine(p);
  std::vector<int> elems(n);
  for (std::size_t i = 0; i < n; ++i) elems[i] = static_cast<int>(i);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  // Backtrack over orderings that keep colour classes contiguous, keeping the
  // lexicographically least relation matrix.
  std::string best;
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  auto matrix = [&] {
    std::string s(n * n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (p.leq(perm[i], perm[j])) s[i * n + j] = '1';
      }
    }
    return s;
  };
  auto extend = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      auto s = matrix();
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    const std::size_t want = colour[elems[pos]];
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || colour[c] != want) continue;
      used[c] = true;
      perm.push_back(static_cast<int>(c));
      self(self, pos + 1);
      perm.pop_back();
      used[c] = false;
    }
  };
  extend(extend, 0);

  std::string cert = std::to_string(n) + ":";
  for (std::size_t i = 0; i < n; ++i) cert += std::to_string(colour[elems[i]]) + ",";
  return cert + best;
}

std::string algebra_certificate(const HeytingAlgebra& h) {
  const int n = static_cast<int>(h.size());
  std::vector<int> irreducible;
  for (int a = 0; a < n; ++a) {
    if (a == h.bot()) continue;
    Elem below = h.bot();
    for (int b = 0; b < n; ++b) {
      if (b != a && h.leq(b, a)) below = h.join(below, b);
    }
    if (below != a) irreducible.push_back(a);
  }
  const std::size_t k = irreducible.size();
  std::vector<bool> rel(k * k, false);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rel[i * k + j] = h.leq(irreducible[i], irreducible[j]);
  }
  return "L" + std::to_string(h.size()) + "/" + poset_certificate(Poset(k, std::move(rel)));
}

std::vector<HeytingAlgebra> enumerate_algebras(std::size_t max_poset_size, std::size_t cap) {
  if (max_poset_size > cap) {
    throw StructureError("poset size " + std::to_string(max_poset_size) + " exceeds the cap of " +
                         std::to_string(cap));
  }
  std::vector<HeytingAlgebra> out;
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= max_poset_size; ++n) {
    // Naturally labelled strict orders: i below j only when i < j.
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    std::map<std::string, Poset> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<bool> rel(n * n, false);
      for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1) rel[pairs[b].first * n + pairs[b].second] = true;
      }
      bool transitive = true;
      for (std::size_t i = 0; i < n && transitive; ++i) {
        for (std::size_t j = 0; j < n && transitive; ++j) {
          if (!rel[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (rel[j * n + k] && !rel[i * n + k]) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (!transitive) continue;
      Poset p(n, std::move(rel));
      classes.try_emplace(poset_certificate(p), p);
    }
    for (const auto& [cert, poset] : classes) {
      HeytingAlgebra h = downset_lattice(poset);
      if (seen.insert(algebra_certificate(h)).second) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace elw
