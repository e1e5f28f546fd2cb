#include "genlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace genlab {

namespace {

bool has_space(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw std::invalid_argument("alphabet must have at least one symbol");
  if (symbols.size() > kMaxAlphabetSize) {
    throw std::invalid_argument("alphabet has more than 256 symbols");
  }
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols) {
    if (s.empty() || s == "1" || s.find('=') != std::string::npos || has_space(s) ||
        s.front() == '#') {
      throw std::invalid_argument("reserved or empty alphabet symbol '" + s + "'");
    }
    if (!seen.insert(s).second) {
      throw std::invalid_argument("duplicate alphabet symbol '" + s + "'");
    }
  }
  symbols_ = std::make_shared<const std::vector<std::string>>(std::move(symbols));
}

Alphabet Alphabet::standard(std::size_t size) {
  std::vector<std::string> symbols;
  symbols.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (i < 26) {
      symbols.emplace_back(1, static_cast<char>('a' + i));
    } else {
      symbols.push_back("x" + std::to_string(i));
    }
  }
  return Alphabet(std::move(symbols));
}

Word Word::from_chars(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument("Word::from_chars expects letters a-z");
    }
    letters.push_back(static_cast<Letter>(c - 'a'));
  }
  return Word(std::move(letters));
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start > size() || length > size() - start) {
    throw std::out_of_range("Word::factor out of range");
  }
  return Word(std::span<const Letter>(letters_).subspan(start, length));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out;
  out.reserve(size() + other.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::size_t Word::count_occurrences(std::span<const Letter> w) const {
  if (w.size() > size()) return 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + w.size() <= size(); ++i) {
    if (std::equal(w.begin(), w.end(), letters_.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++count;
    }
  }
  return count;
}

std::size_t Word::letter_bound() const noexcept {
  if (letters_.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(letters_.begin(), letters_.end())) + 1;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the letters, length folded in.
  std::uint64_t h = 1469598103934665603ULL ^ w.size();
  for (Letter l : w) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  const bool single_char = std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                                       [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char && i > 0) out += ' ';
    out += alphabet.symbol(w[i]);
  }
  return out;
}

std::string to_string(const Word& w) {
  return to_string(w, Alphabet::standard(std::max<std::size_t>(w.letter_bound(), 1)));
}

}  // namespace genlab
