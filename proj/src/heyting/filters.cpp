#include "elw/heyting.hpp"

namespace elw {

std::vector<bool> filter_members(const HeytingAlgebra& h, const Filter& f) {
  std::vector<bool> in(h.size(), false);
  for (std::size_t x = 0; x < h.size(); ++x) in[x] = h.leq(f.generator, static_cast<Elem>(x));
  return in;
}

Filter principal_filter(const HeytingAlgebra& h, Elem generator) {
  return Filter{generator, generator == h.bot()};
}

std::vector<Filter> filters(const HeytingAlgebra& h) {
  std::vector<Filter> out;
  out.reserve(h.size());
  for (std::size_t g = 0; g < h.size(); ++g) out.push_back(principal_filter(h, static_cast<Elem>(g)));
  return out;
}

bool is_prime_filter(const HeytingAlgebra& h, const Filter& f) {
  const auto in = filter_members(h, f);
  if (in[h.bot()]) return false;
  const int n = static_cast<int>(h.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (in[h.join(a, b)] && !in[a] && !in[b]) return false;
    }
  }
  return true;
}

bool is_ultrafilter(const HeytingAlgebra& h, const Filter& f) {
  const auto in = filter_members(h, f);
  if (in[h.bot()]) return false;
  for (const auto& g : filters(h)) {
    const auto other = filter_members(h, g);
    if (other[h.bot()]) continue;
    bool superset = true, strict = false;
    for (std::size_t x = 0; x < h.size(); ++x) {
      if (in[x] && !other[x]) superset = false;
      if (other[x] && !in[x]) strict = true;
    }
    if (superset && strict) return false;
  }
  return true;
}

std::vector<Filter> ultrafilters(const HeytingAlgebra& h) {
  std::vector<Filter> out;
  for (const auto& f : filters(h)) {
    if (is_ultrafilter(h, f)) out.push_back(f);
  }
  return out;
}

std::vector<Elem> atoms(const HeytingAlgebra& h) {
  std::vector<Elem> out;
  const int n = static_cast<int>(h.size());
  for (int a = 0; a < n; ++a) {
    if (a == h.bot()) continue;
    bool atom = true;
    for (int b = 0; b < n && atom; ++b) {
      if (b != a && b != h.bot() && h.leq(b, a)) atom = false;
    }
    if (atom) out.push_back(a);
  }
  return out;
}

bool has_dp(const HeytingAlgebra& h) {
  const int n = static_cast<int>(h.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (h.join(a, b) == h.top() && a != h.top() && b != h.top()) return false;
    }
  }
  return true;
}

bool ultrafilter_quotient_check(const HeytingAlgebra& h, const Filter& f) {
  const auto in = filter_members(h, f);
  if (in[h.bot()] || !in[h.top()]) return false;
  const int n = static_cast<int>(h.size());
  for (int a = 0; a < n; ++a) {
    if (in[h.neg(a)] == in[a]) return false;
    for (int b = 0; b < n; ++b) {
      if (in[h.meet(a, b)] != (in[a] && in[b])) return false;
      if (in[h.join(a, b)] != (in[a] || in[b])) return false;
      if (in[h.imp(a, b)] != (!in[a] || in[b])) return false;
    }
  }
  return true;
}

}  // namespace elw
