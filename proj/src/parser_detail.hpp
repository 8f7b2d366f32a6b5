#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "largeness/words.hpp"

namespace largeness::detail {

/// A parsed factor `atom^exponent` kept unexpanded so a relator written as
/// a single power can be folded without materialising it.
struct Factor {
  Word atom;
  std::int64_t exponent = 1;
};

/// Recursive-descent reader over a text buffer with line/column tracking.
/// `#` starts a comment that runs to the end of the line.
class Reader {
 public:
  Reader(std::string_view text, const Alphabet* alphabet)
      : text_(text), alphabet_(alphabet) {}

  void skip_space();
  bool at_end();
  char peek();
  bool accept(char c);
  void expect(char c);
  std::string identifier();
  std::int64_t integer();

  std::vector<Factor> factors();
  Word word();

  [[noreturn]] void fail(const std::string& what) const;
  std::string location() const;

  void set_alphabet(const Alphabet* alphabet) { alphabet_ = alphabet; }

 private:
  Factor factor();
  Word atom();

  std::string_view text_;
  const Alphabet* alphabet_;
  std::size_t pos_ = 0;
};

Word expand(const std::vector<Factor>& factors);

}  // namespace largeness::detail
