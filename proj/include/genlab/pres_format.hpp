#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "genlab/presentation.hpp"

namespace genlab {

/// Parse failure with a 1-based line number (0 when the error concerns the
/// document as a whole, e.g. a missing `kind:` line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads the line-oriented `.pres` format:
///
///   alphabet: a b
///   kind: monoid
///   rel: abab = aab
///   rel: ab = 1
///
/// `#` starts a comment line, blank lines are ignored, `1` is the empty word.
/// Symbols inside a word may be juxtaposed or separated by spaces; a
/// juxtaposed run is split by longest symbol match.
Presentation parse_presentation(std::string_view text);

/// Parses a single word over `alphabet` using the same rules as `rel:` sides.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Canonical text: `alphabet:` line, `kind:` line, one `rel:` line per
/// relation with exactly one space around `=`, trailing newline.
std::string serialize(const Presentation& p);

}  // namespace genlab
