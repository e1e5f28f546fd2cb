#include "genlab/pres_format.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace genlab {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Longest-match tokenizer for one whitespace-free run of symbols.
void append_run(std::string_view run, const Alphabet& alphabet, std::vector<Letter>& out) {
  while (!run.empty()) {
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      const std::string& sym = alphabet.symbols()[i];
      if (sym.size() > best_len && run.starts_with(sym)) {
        best_len = sym.size();
        best = static_cast<Letter>(i);
      }
    }
    if (best_len == 0) {
      throw std::invalid_argument("unknown symbol at '" + std::string(run) + "'");
    }
    out.push_back(best);
    run.remove_prefix(best_len);
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  const auto tokens = split_ws(trim(text));
  if (tokens.empty()) throw std::invalid_argument("missing word");
  if (tokens.size() == 1 && tokens[0] == "1") return Word{};
  std::vector<Letter> letters;
  for (auto tok : tokens) {
    if (tok == "1") throw std::invalid_argument("'1' must stand alone as the empty word");
    append_run(tok, alphabet, letters);
  }
  return Word(std::move(letters));
}

Presentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<Kind> kind;
  struct PendingRelation {
    std::size_t line;
    std::string_view lhs, rhs;
  };
  std::vector<PendingRelation> pending;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));

    if (key == "alphabet") {
      if (alphabet) throw ParseError(line_no, "duplicate alphabet line");
      if (!pending.empty() || kind) throw ParseError(line_no, "alphabet must come first");
      std::vector<std::string> symbols;
      for (auto tok : split_ws(value)) symbols.emplace_back(tok);
      if (symbols.empty()) throw ParseError(line_no, "empty alphabet");
      try {
        alphabet.emplace(std::move(symbols));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "kind") {
      if (!alphabet) throw ParseError(line_no, "alphabet must come first");
      if (kind) throw ParseError(line_no, "duplicate kind line");
      kind = parse_kind(value);
      if (!kind) throw ParseError(line_no, "kind must be 'monoid' or 'semigroup'");
    } else if (key == "rel") {
      if (!alphabet) throw ParseError(line_no, "alphabet must come first");
      const std::size_t eq = value.find('=');
      if (eq == std::string_view::npos || value.find('=', eq + 1) != std::string_view::npos) {
        throw ParseError(line_no, "relation must have the form 'u = v'");
      }
      pending.push_back({line_no, value.substr(0, eq), value.substr(eq + 1)});
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!alphabet) throw ParseError(0, "missing alphabet line");
  if (!kind) throw ParseError(0, "missing kind line");

  std::vector<Relation> relations;
  for (const auto& rel : pending) {
    Relation r;
    try {
      r.lhs = parse_word(rel.lhs, *alphabet);
      r.rhs = parse_word(rel.rhs, *alphabet);
    } catch (const std::invalid_argument& e) {
      throw ParseError(rel.line, e.what());
    }
    if (*kind == Kind::semigroup && (r.lhs.empty() || r.rhs.empty())) {
      throw ParseError(rel.line, "empty relation word in a semigroup presentation");
    }
    relations.push_back(std::move(r));
  }
  return Presentation(*std::move(alphabet), std::move(relations), *kind);
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& s : p.alphabet().symbols()) out << ' ' << s;
  out << "\nkind: " << to_string(p.kind()) << '\n';
  for (const auto& r : p.relations()) {
    out << "rel: " << to_string(r.lhs, p.alphabet()) << " = " << to_string(r.rhs, p.alphabet())
        << '\n';
  }
  return out.str();
}

}  // namespace genlab
