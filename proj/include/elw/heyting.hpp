#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elw/verdict.hpp"

namespace elw {

// Index of an element of a finite algebra.
using Elem = int;

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite partial order on {0, ..., size-1}. Relation axioms are checked on
// construction.
class Poset {
 public:
  Poset(std::size_t size, std::vector<bool> leq);
  // Reflexive-transitive closure of the given strict pairs (a below b).
  static Poset from_pairs(std::size_t size, const std::vector<std::pair<int, int>>& below);

  std::size_t size() const { return size_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size_ + b]; }
  const std::vector<bool>& relation() const { return leq_; }

 private:
  std::size_t size_;
  std::vector<bool> leq_;
};

// Canonical form of a poset up to isomorphism.
std::string poset_certificate(const Poset& p);

// Finite Heyting algebra given by explicit operation tables over element
// indices. Instances built by from_order or downset_lattice have consistent
// tables; from_tables accepts arbitrary tables for verify_heyting to judge.
class HeytingAlgebra {
 public:
  // Derives bounds, meet, join and residuated implication from the order.
  // Throws StructureError if the order is not a bounded lattice.
  static HeytingAlgebra from_order(std::size_t size, std::vector<bool> leq);

  static HeytingAlgebra from_tables(std::size_t size, std::vector<bool> leq, Elem bot, Elem top,
                                    std::vector<Elem> meet, std::vector<Elem> join,
                                    std::vector<Elem> imp);

  std::size_t size() const { return size_; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem imp(Elem a, Elem b) const { return imp_[idx(a, b)]; }
  Elem neg(Elem a) const { return imp(a, bot_); }

  const std::vector<bool>& order() const { return leq_; }
  const std::vector<Elem>& meet_table() const { return meet_; }
  const std::vector<Elem>& join_table() const { return join_; }
  const std::vector<Elem>& imp_table() const { return imp_; }

  // For downset lattices: the points of each element as a bitmask.
  const std::vector<std::uint64_t>& labels() const { return labels_; }

  HeytingAlgebra with_imp(Elem a, Elem b, Elem value) const;

 private:
  friend HeytingAlgebra downset_lattice(const Poset&, std::size_t);
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * size_ + b; }

  std::size_t size_ = 0;
  Elem bot_ = 0;
  Elem top_ = 0;
  std::vector<bool> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> imp_;
  std::vector<std::uint64_t> labels_;
};

// Lattice of downward-closed subsets ordered by inclusion. Elements are
// sorted by (cardinality, bitmask), so the empty set is 0 and the full
// set is size()-1. Throws StructureError beyond max_elements or 64 points.
HeytingAlgebra downset_lattice(const Poset& p, std::size_t max_elements = 4096);

// Exhaustive check of the order, bounds, lattice laws, distributivity and
// residuation; rejection names the failing elements.
Verdict verify_heyting(const HeytingAlgebra& h);

// Every filter of a finite lattice is principal: the up-set of its generator.
struct Filter {
  Elem generator = 0;
  bool improper = false;

  friend bool operator==(const Filter&, const Filter&) = default;
};

std::vector<bool> filter_members(const HeytingAlgebra& h, const Filter& f);
Filter principal_filter(const HeytingAlgebra& h, Elem generator);

// One filter per element, in generator order; the improper filter is
// generated by bot and flagged.
std::vector<Filter> filters(const HeytingAlgebra& h);

bool is_prime_filter(const HeytingAlgebra& h, const Filter& f);
bool is_ultrafilter(const HeytingAlgebra& h, const Filter& f);
std::vector<Filter> ultrafilters(const HeytingAlgebra& h);
std::vector<Elem> atoms(const HeytingAlgebra& h);

// Top is join-irreducible, i.e. {top} is a prime filter.
bool has_dp(const HeytingAlgebra& h);

// The indicator of f is a homomorphism onto the two-element Boolean algebra.
bool ultrafilter_quotient_check(const HeytingAlgebra& h, const Filter& f);

// Canonical form up to isomorphism, via the poset of join-irreducibles.
std::string algebra_certificate(const HeytingAlgebra& h);

inline constexpr std::size_t kDefaultPosetCap = 5;

// Downset lattices of all posets with 1..max_poset_size points, one per
// isomorphism class, ordered by poset size and then certificate.
std::vector<HeytingAlgebra> enumerate_algebras(std::size_t max_poset_size,
                                               std::size_t cap = kDefaultPosetCap);

std::string describe(const HeytingAlgebra& h);

}  // namespace elw
