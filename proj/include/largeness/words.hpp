#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace largeness {

using Integer = mpz_class;

struct GeneratorId {
  std::size_t index = 0;
  std::string name;

  bool operator==(const GeneratorId&) const = default;
};

/// Ordered generator list. Indices are positions; names are unique.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  /// Appends a generator and returns its index. Throws E_DUP_GEN on a
  /// repeated name and E_PARSE on a name that is not an identifier.
  std::size_t add(std::string name);

  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  const GeneratorId& operator[](std::size_t i) const { return gens_.at(i); }
  const std::string& name(std::size_t i) const { return gens_.at(i).name; }

  /// Index of the generator called `name`, or size() if absent.
  std::size_t find(std::string_view name) const;

  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<GeneratorId> gens_;
};

bool is_identifier(std::string_view name);

struct Letter {
  std::size_t gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in a free group. The reduced form is maintained by
/// every constructor and operation.
class Word {
 public:
  Word() = default;
  explicit Word(Letter letter) : letters_{letter} {}
  static Word generator(std::size_t gen, int sign = 1) { return Word(Letter{gen, sign}); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(std::int64_t k) const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  friend Word free_reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

/// Unique freely reduced form of a raw letter sequence.
Word free_reduce(std::span<const Letter> raw);

/// Root/power decomposition u^m of a relator, u nonempty and not a proper power.
struct PowerRelator {
  Word root;
  std::uint64_t power = 1;

  /// Normalises an arbitrary nonempty word raised to `power` so that the
  /// stored root is its minimal root. Throws E_EMPTY_WORD on an empty word.
  static PowerRelator make(const Word& w, std::uint64_t power = 1);

  Word full() const;

  bool operator==(const PowerRelator&) const = default;
};

/// Maximal k and root u with u^k = w in the free group. Throws E_EMPTY_WORD.
PowerRelator minimal_root(const Word& w);

/// Component j is the exponent sum of generator j in w.
std::vector<Integer> exponent_vector(const Word& w, std::size_t d);

using Substitution = std::map<std::size_t, Word>;

/// Image of w under the homomorphism given by `images`, freely reduced.
/// Throws E_MISSING_IMAGE if a generator of w has no image.
Word substitute(const Word& w, const Substitution& images);

/// Letter-by-letter image of w without free reduction.
std::vector<Letter> substitute_letters(const Word& w, const Substitution& images);

/// Parses the word grammar
///   word := factor+ ; factor := atom ('^' int)? ;
///   atom := name | '(' word ')' | '[' word ',' word ']'
/// over `alphabet`. Exponents may be written `^-2` or `^{-2}`.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Syllable form, e.g. "a t^3 a^-1 t^-3". The empty word prints as "1".
std::string format_word(const Word& w, const Alphabet& alphabet);

}  // namespace largeness
