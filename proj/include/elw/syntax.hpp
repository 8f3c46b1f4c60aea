#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace elw {

using VarIndex = std::uint32_t;

enum class Kind : std::uint8_t { Var, Bottom, And, Or, Implies, Box, Know };

// Immutable formula of the modal-epistemic language. Nodes are shared, so
// copies are cheap and values may be passed freely between threads.
class Formula {
 public:
  static Formula var(VarIndex index);
  static Formula bottom();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula box(Formula inner);
  static Formula know(Formula inner);

  // Abbreviations. They expand to the core constructors.
  static Formula neg(Formula f);                // f -> false
  static Formula top();                         // false -> false
  static Formula iff(Formula l, Formula r);     // (l -> r) & (r -> l)
  static Formula ident(Formula l, Formula r);   // box(l -> r) & box(r -> l)

  Kind kind() const;
  VarIndex var_index() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& inner() const { return left(); }

  bool is_var() const { return kind() == Kind::Var; }
  bool is_binary() const;
  bool is_modal() const { return kind() == Kind::Box || kind() == Kind::Know; }
  // True iff neither box nor K occurs.
  bool is_propositional() const;
  bool contains_box() const;

  // Number of constructor nodes.
  std::size_t size() const;
  std::size_t hash() const;
  // One past the largest variable index occurring in the formula, 0 if none.
  VarIndex var_bound() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Finite map from variable index to replacement formula.
using Substitution = std::map<VarIndex, Formula>;

// Uniform simultaneous replacement; variables outside the map are kept.
Formula substitute(const Formula& f, const Substitution& sigma);

struct ModalAbstraction {
  Formula skeleton;
  Substitution binding;
};

// Replaces every maximal box- or K-rooted subformula by a fresh variable.
// Syntactically equal subformulas share a variable, and fresh variables are
// numbered from f.var_bound() upwards in left-to-right order of first
// occurrence.
ModalAbstraction abstract_modal(const Formula& f);

// Sorted, duplicate-free list of variables occurring in f.
std::vector<VarIndex> variables(const Formula& f);
std::vector<VarIndex> variables(const std::vector<Formula>& fs);

// All distinct subformulas, children before parents.
std::vector<Formula> subformulas(const Formula& f);

// Conjunction of a list; the empty conjunction is top.
Formula conjunction(const std::vector<Formula>& fs);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, std::string found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
  std::string found_;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);

// Human-readable grammar summary, printed by the CLI on usage errors.
std::string_view grammar_help();

}  // namespace elw
