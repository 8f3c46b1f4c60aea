#include <cctype>
#include <charconv>
#include <sstream>

#include "elw/proof.hpp"

namespace elw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> number(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

Formula parse_at(std::string_view text, std::size_t line_no) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ScriptError(line_no, std::string("bad formula: ") + e.what());
  }
}

Justification parse_justification(std::string_view text, std::size_t line_no) {
  const auto w = words(text);
  auto fail = [&]() -> Justification {
    throw ScriptError(line_no, "bad justification '" + std::string(trim(text)) +
                                   "'; expected axiom <A1..A8|CO>, int, T, hyp k, mp i j or an i");
  };
  if (w.empty()) return fail();
  auto arg = [&](std::size_t i) {
    auto v = number(w[i]);
    if (!v) fail();
    return *v;
  };
  if (w[0] == "axiom" && w.size() == 2) {
    auto a = axiom_from_string(w[1]);
    if (!a || *a == Axiom::INT) return fail();
    return Justification::by_axiom(*a);
  }
  if (w[0] == "int" && w.size() == 1) return Justification::by_axiom(Axiom::INT);
  if (w[0] == "T" && w.size() == 1) return Justification::tertium();
  if (w[0] == "hyp" && w.size() == 2) return Justification::hypothesis(arg(1));
  if (w[0] == "mp" && w.size() == 3) return Justification::modus_ponens(arg(1), arg(2));
  if (w[0] == "an" && w.size() == 2) return Justification::necessitation(arg(1));
  return fail();
}

}  // namespace

ScriptError::ScriptError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;

    if (raw.substr(0, 4) == "hyp:") {
      if (!script.lines.empty()) throw ScriptError(line_no, "hypotheses must precede proof lines");
      script.hypotheses.push_back(parse_at(raw.substr(4), line_no));
      continue;
    }
    const auto dot = raw.find('.');
    const auto semi = raw.rfind(';');
    if (dot == std::string_view::npos || semi == std::string_view::npos || semi < dot) {
      throw ScriptError(line_no, "expected 'n. <formula> ; <justification>' or 'hyp: <formula>'");
    }
    auto n = number(trim(raw.substr(0, dot)));
    if (!n || *n != script.lines.size() + 1) {
      throw ScriptError(line_no, "expected line number " + std::to_string(script.lines.size() + 1));
    }
    Formula f = parse_at(trim(raw.substr(dot + 1, semi - dot - 1)), line_no);
    script.lines.push_back({std::move(f), parse_justification(raw.substr(semi + 1), line_no)});
  }
  return script;
}

std::string render_justification(const Justification& j) {
  switch (j.rule) {
    case Justification::Rule::Axiom:
      return j.axiom == Axiom::INT ? "int" : "axiom " + std::string(to_string(j.axiom));
    case Justification::Rule::TheoremT:
      return "T";
    case Justification::Rule::Hypothesis:
      return "hyp " + std::to_string(j.first);
    case Justification::Rule::MP:
      return "mp " + std::to_string(j.first) + " " + std::to_string(j.second);
    case Justification::Rule::AN:
      return "an " + std::to_string(j.first);
  }
  return "?";
}

std::string render_script(const ProofScript& script) {
  std::ostringstream out;
  for (const auto& h : script.hypotheses) out << "hyp: " << render(h) << "\n";
  for (std::size_t k = 0; k < script.lines.size(); ++k) {
    const auto& line = script.lines[k];
    out << k + 1 << ". " << render(line.formula) << " ; " << render_justification(line.justification)
        << "\n";
  }
  return out.str();
}

}  // namespace elw
