#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library beyond the Formula type.

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "elw/syntax.hpp"

namespace oracle {

using elw::Formula;
using elw::Kind;

// Random formula with `size` constructor nodes over variables x0..x{vars-1}
// (one node when size is 2 and `modal` is unset). Modal operators appear
// only when `modal` is set.
inline Formula random_formula(std::mt19937_64& rng, int size, int vars, bool modal) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  if (size <= 1) {
    if (pick(6) == 0) return Formula::bottom();
    return Formula::var(static_cast<elw::VarIndex>(pick(vars)));
  }
  const int unary_kinds = modal ? 2 : 0;
  const bool can_binary = size >= 3;
  if (!can_binary && unary_kinds == 0) return random_formula(rng, 1, vars, modal);
  const int choice = pick((can_binary ? 3 : 0) + unary_kinds);
  if (!can_binary || choice >= 3) {
    Formula inner = random_formula(rng, size - 1, vars, modal);
    return (choice % 2 == 0) ? Formula::box(inner) : Formula::know(inner);
  }
  const int left = 1 + pick(size - 2);
  Formula l = random_formula(rng, left, vars, modal);
  Formula r = random_formula(rng, size - 1 - left, vars, modal);
  switch (choice) {
    case 0:
      return Formula::conj(l, r);
    case 1:
      return Formula::disj(l, r);
    default:
      return Formula::implies(l, r);
  }
}

// Rooted finite frame: worlds 0..n-1, root 0, order[v][w] means v <= w.
struct Frame {
  int n = 0;
  std::vector<std::vector<bool>> order;
};

// All partial orders on 0..n-1 with 0 as least element and i <= j only when
// i < j (every finite rooted poset has such a labelling).
inline std::vector<Frame> rooted_frames(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Frame> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Frame f{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
    for (int i = 0; i < n; ++i) {
      f.order[i][i] = true;
      f.order[0][i] = true;
    }
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) f.order[pairs[b].first][pairs[b].second] = true;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        for (int c = 0; c < n && ok; ++c) {
          if (f.order[a][b] && f.order[b][c] && !f.order[a][c]) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

// Up-closed subsets of the frame, as bitmasks.
inline std::vector<std::uint32_t> upsets(const Frame& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << f.n); ++s) {
    bool closed = true;
    for (int v = 0; v < f.n && closed; ++v) {
      if (!(s >> v & 1)) continue;
      for (int w = 0; w < f.n; ++w) {
        if (f.order[v][w] && !(s >> w & 1)) closed = false;
      }
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// Set of worlds forcing f, by the textbook clauses.
inline std::uint32_t truth(const Frame& fr, const std::vector<std::uint32_t>& val, const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return f.var_index() < val.size() ? val[f.var_index()] : 0;
    case Kind::Bottom:
      return 0;
    case Kind::And:
      return truth(fr, val, f.left()) & truth(fr, val, f.right());
    case Kind::Or:
      return truth(fr, val, f.left()) | truth(fr, val, f.right());
    case Kind::Implies: {
      const std::uint32_t a = truth(fr, val, f.left()), b = truth(fr, val, f.right());
      std::uint32_t out = 0;
      for (int v = 0; v < fr.n; ++v) {
        bool all = true;
        for (int w = 0; w < fr.n && all; ++w) {
          if (fr.order[v][w] && (a >> w & 1) && !(b >> w & 1)) all = false;
        }
        if (all) out |= 1u << v;
      }
      return out;
    }
    default:
      throw std::invalid_argument("oracle: modal formula in Kripke evaluation");
  }
}

// True iff some rooted frame with at most max_worlds worlds refutes f at its root.
inline bool kripke_refutable(const Formula& f, int max_worlds) {
  const auto vars = elw::variables(f);
  const std::size_t nv = vars.empty() ? 0 : vars.back() + 1;
  for (int n = 1; n <= max_worlds; ++n) {
    for (const auto& fr : rooted_frames(n)) {
      const auto ups = upsets(fr);
      std::vector<std::uint32_t> val(nv, 0);
      std::vector<std::size_t> idx(vars.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < vars.size(); ++i) val[vars[i]] = ups[idx[i]];
        if (!(truth(fr, val, f) & 1u)) return true;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == ups.size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
  }
  return false;
}

// Enumerates assignments of `vars` into {0..size-1}; fn returns false to stop.
inline void for_each_assignment(const std::vector<elw::VarIndex>& vars, std::size_t size,
                                const std::function<bool(const std::vector<int>&)>& fn) {
  std::size_t nv = vars.empty() ? 0 : vars.back() + 1;
  std::vector<int> g(nv, 0);
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) g[vars[i]] = static_cast<int>(idx[i]);
    if (!fn(g)) return;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == size) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

}  // namespace oracle
