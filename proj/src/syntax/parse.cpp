#include <cctype>
#include <sstream>

#include "elw/syntax.hpp"

namespace elw {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

std::string parse_error_message(std::size_t position, const std::vector<std::string>& expected,
                                const std::string& found) {
  std::ostringstream os;
  os << "syntax error at position " << position << ": expected " << describe_expected(expected)
     << ", found " << found;
  return os.str();
}

enum class Tok { End, Var, False, True, Not, Box, Know, And, Or, Imp, Iff, Ident, LParen, RParen };

struct Token {
  Tok tok;
  std::size_t pos;
  std::string text;
  VarIndex var = 0;
};

const std::vector<std::string> kFormulaStart = {"variable", "'false'", "'true'", "'~'",
                                                "'box'",    "'K'",     "'('"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, start, "end of input"};
    const char c = text_[pos_];
    auto punct = [&](Tok t, std::size_t len) {
      pos_ += len;
      return Token{t, start, std::string(text_.substr(start, len))};
    };
    if (c == '(') return punct(Tok::LParen, 1);
    if (c == ')') return punct(Tok::RParen, 1);
    if (c == '~') return punct(Tok::Not, 1);
    if (c == '&') return punct(Tok::And, 1);
    if (c == '|') return punct(Tok::Or, 1);
    if (text_.substr(pos_, 2) == "->") return punct(Tok::Imp, 2);
    if (text_.substr(pos_, 3) == "<->") return punct(Tok::Iff, 3);
    if (text_.substr(pos_, 2) == "==") return punct(Tok::Ident, 2);
    // K is always a one-character operator, so "Kx0" reads as K x0.
    if (c == 'K') return punct(Tok::Know, 1);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      std::string word(text_.substr(start, pos_ - start));
      if (word == "box") return {Tok::Box, start, word};
      if (word == "false") return {Tok::False, start, word};
      if (word == "true") return {Tok::True, start, word};
      if (word.size() > 1 && word[0] == 'x' &&
          word.find_first_not_of("0123456789", 1) == std::string::npos) {
        if (word.size() > 10) {
          throw ParseError(start, {"variable index below 2^32"}, "'" + word + "'");
        }
        const unsigned long long idx = std::stoull(word.substr(1));
        if (idx > 0xffffffffULL) {
          throw ParseError(start, {"variable index below 2^32"}, "'" + word + "'");
        }
        Token t{Tok::Var, start, word};
        t.var = static_cast<VarIndex>(idx);
        return t;
      }
      throw ParseError(start, kFormulaStart, "identifier '" + word + "'");
    }
    throw ParseError(start, {"a token"}, std::string("character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { advance(); }

  Formula run() {
    Formula f = equivalence();
    if (cur_.tok != Tok::End) {
      throw ParseError(cur_.pos, {"'->'", "'|'", "'&'", "'<->'", "'=='", "end of input"},
                       found());
    }
    return f;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  std::string found() const {
    return cur_.tok == Tok::End ? "end of input" : "'" + cur_.text + "'";
  }

  Formula equivalence() {
    Formula l = implication();
    if (cur_.tok == Tok::Iff) {
      advance();
      return Formula::iff(l, implication());
    }
    if (cur_.tok == Tok::Ident) {
      advance();
      return Formula::ident(l, implication());
    }
    return l;
  }

  Formula implication() {
    Formula l = disjunction();
    if (cur_.tok == Tok::Imp) {
      advance();
      return Formula::implies(l, implication());
    }
    return l;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (cur_.tok == Tok::Or) {
      advance();
      acc = Formula::disj(acc, conjunction());
    }
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (cur_.tok == Tok::And) {
      advance();
      acc = Formula::conj(acc, unary());
    }
    return acc;
  }

  Formula unary() {
    switch (cur_.tok) {
      case Tok::Not:
        advance();
        return Formula::neg(unary());
      case Tok::Box:
        advance();
        return Formula::box(unary());
      case Tok::Know:
        advance();
        return Formula::know(unary());
      default:
        return atom();
    }
  }

  Formula atom() {
    switch (cur_.tok) {
      case Tok::Var: {
        Formula v = Formula::var(cur_.var);
        advance();
        return v;
      }
      case Tok::False:
        advance();
        return Formula::bottom();
      case Tok::True:
        advance();
        return Formula::top();
      case Tok::LParen: {
        advance();
        Formula inner = equivalence();
        if (cur_.tok != Tok::RParen) {
          throw ParseError(cur_.pos, {"')'"}, found());
        }
        advance();
        return inner;
      }
      default:
        throw ParseError(cur_.pos, kFormulaStart, found());
    }
  }

  Lexer lex_;
  Token cur_{Tok::End, 0, ""};
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, std::string found)
    : std::runtime_error(parse_error_message(position, expected, found)),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string_view grammar_help() {
  return "Formula grammar (loosest binding first):\n"
         "  f <-> g, f == g    abbreviations, non-associative\n"
         "  f -> g             implication, right-associative\n"
         "  f | g              disjunction, left-associative\n"
         "  f & g              conjunction, left-associative\n"
         "  ~f, box f, K f     negation, proof modality, knowledge\n"
         "  x0, x1, ...        variables\n"
         "  false, true, (f)\n"
         "Abbreviations: ~f = f -> false; true = false -> false;\n"
         "  f <-> g = (f -> g) & (g -> f); f == g = box(f -> g) & box(g -> f)\n";
}

}  // namespace elw
