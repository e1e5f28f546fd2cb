#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genlab {

/// Index of a symbol in an Alphabet.
using Letter = std::uint8_t;

/// Largest supported alphabet; letters are stored in a byte.
inline constexpr std::size_t kMaxAlphabetSize = 256;

/// Finite ordered set of printable symbols. Symbol i is letter i.
class Alphabet {
 public:
  Alphabet() = default;

  /// Throws std::invalid_argument on duplicates, reserved tokens ("1", "=",
  /// anything containing whitespace), empty symbols or oversize alphabets.
  explicit Alphabet(std::vector<std::string> symbols);

  /// The first `size` symbols of a, b, ..., z, then x26, x27, ...
  static Alphabet standard(std::size_t size);

  std::size_t size() const noexcept { return symbols_ ? symbols_->size() : 0; }
  const std::string& symbol(Letter l) const { return symbols().at(l); }
  const std::vector<std::string>& symbols() const noexcept {
    static const std::vector<std::string> none;
    return symbols_ ? *symbols_ : none;
  }

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_ || symbols() == other.symbols();
  }

 private:
  // Shared so that copying presentations does not copy the symbol strings.
  std::shared_ptr<const std::vector<std::string>> symbols_;
};

/// A finite sequence of letters, possibly empty.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {}

  /// Convenience for tests and literals over a single-character alphabet
  /// starting at 'a': "abba" -> {0, 1, 1, 0}.
  static Word from_chars(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word factor(std::size_t start, std::size_t length) const;
  Word concat(const Word& other) const;
  void push_back(Letter l) { letters_.push_back(l); }

  /// Number of start positions at which `w` occurs (overlaps counted).
  /// The empty word occurs at size()+1 positions.
  std::size_t count_occurrences(std::span<const Letter> w) const;

  /// Largest letter + 1, or 0 for the empty word.
  std::size_t letter_bound() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Lexicographic by letter index; use ShortLex for canonical order.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Length first, then lexicographic by letter index.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Renders a word as the juxtaposition of its symbols, or "1" when empty.
std::string to_string(const Word& w, const Alphabet& alphabet);

/// Same, over the standard alphabet.
std::string to_string(const Word& w);

}  // namespace genlab

template <>
struct std::hash<genlab::Word> : genlab::WordHash {};
