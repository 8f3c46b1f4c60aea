#include "elw/syntax.hpp"

namespace elw {

namespace {

// Binding strength; higher binds tighter.
enum Level : int { kImp = 1, kOr = 2, kAnd = 3, kPrefix = 4, kAtom = 5 };

bool is_negation(const Formula& f) {
  return f.kind() == Kind::Implies && f.right().kind() == Kind::Bottom;
}

bool is_top(const Formula& f) {
  return f.kind() == Kind::Implies && f.left().kind() == Kind::Bottom &&
         f.right().kind() == Kind::Bottom;
}

int level_of(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Bottom:
      return kAtom;
    case Kind::And:
      return kAnd;
    case Kind::Or:
      return kOr;
    case Kind::Implies:
      if (is_top(f)) return kAtom;
      return is_negation(f) ? kPrefix : kImp;
    case Kind::Box:
    case Kind::Know:
      return kPrefix;
  }
  return kAtom;
}

void emit(const Formula& f, int required, std::string& out);

void emit_prefix_operand(const Formula& f, std::string& out) { emit(f, kPrefix, out); }

void emit_bare(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Var:
      out += 'x';
      out += std::to_string(f.var_index());
      return;
    case Kind::Bottom:
      out += "false";
      return;
    case Kind::Box:
      out += "box ";
      emit_prefix_operand(f.inner(), out);
      return;
    case Kind::Know:
      out += "K ";
      emit_prefix_operand(f.inner(), out);
      return;
    case Kind::And:
      emit(f.left(), kAnd, out);
      out += " & ";
      emit(f.right(), kAnd + 1, out);
      return;
    case Kind::Or:
      emit(f.left(), kOr, out);
      out += " | ";
      emit(f.right(), kOr + 1, out);
      return;
    case Kind::Implies:
      if (is_top(f)) {
        out += "true";
      } else if (is_negation(f)) {
        out += '~';
        emit_prefix_operand(f.left(), out);
      } else {
        emit(f.left(), kImp + 1, out);
        out += " -> ";
        emit(f.right(), kImp, out);
      }
      return;
  }
}

void emit(const Formula& f, int required, std::string& out) {
  if (level_of(f) < required) {
    out += '(';
    emit_bare(f, out);
    out += ')';
  } else {
    emit_bare(f, out);
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  emit(f, kImp, out);
  return out;
}

}  // namespace elw
