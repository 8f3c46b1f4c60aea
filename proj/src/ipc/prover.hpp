#pragma once

// Internal to the IPC engine: contraction-free sequent search over a local
// hash-consed term store.

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "elw/syntax.hpp"

namespace elw::detail {

class Prover {
 public:
  using Term = int;

  explicit Prover(std::size_t max_steps);

  // Interns a box/K-free formula; throws DomainError otherwise.
  Term intern(const Formula& f);

  // Decides whether the (set-valued) context derives the goal.
  bool prove(std::vector<Term> context, Term goal);

 private:
  struct Node {
    Kind kind;
    VarIndex var;
    Term a;
    Term b;
  };

  struct KeyHash {
    std::size_t operator()(const std::vector<Term>& v) const;
  };

  Term make(Kind kind, VarIndex var, Term a, Term b);
  bool search(const std::vector<Term>& ctx, Term goal);

  std::vector<Node> nodes_;
  std::unordered_map<std::vector<Term>, Term, KeyHash> index_;
  std::unordered_map<std::vector<Term>, bool, KeyHash> memo_;
  Term bottom_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

}  // namespace elw::detail
