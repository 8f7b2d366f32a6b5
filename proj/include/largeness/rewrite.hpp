#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "largeness/abelian.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

/// One Tietze move.
///   AddGenerator: appends `generator` to the alphabet together with the
///     relator `definition * generator^-1`.
///   Substitute: replaces the alphabet by `alphabet` and every relator root
///     by its image under `images`.
struct RewriteStep {
  enum class Kind { AddGenerator, Substitute };
  Kind kind = Kind::Substitute;
  std::string generator;
  Word definition;
  Alphabet alphabet;
  Substitution images;
  std::string description;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  Alphabet source;
  Alphabet target;
  Substitution forward;   // source generator -> word over target
  Substitution backward;  // target generator -> word over source
};

/// Applies the trace's steps to `p` in order.
Presentation replay(const Presentation& p, const RewriteTrace& trace);

struct RewriteResult {
  Presentation presentation;
  RewriteTrace trace;
};

/// Nielsen moves making the root exponent matrix lower triangular, replayed
/// on words from column_hermite's operation log. Relator powers are kept.
RewriteResult triangularize(const Presentation& p);

/// The word w with phi(w) = 1 used for the new generator t: the product of
/// x_i^{c_i} in ascending generator order over extended-gcd coefficients.
Word unit_word(const ZMap& phi);

/// Rewrites p over y_1..y_d, t with y_i = x_i t^{-phi(x_i)}, so every
/// relator has t-exponent sum zero. Throws E_INVALID_ZMAP.
RewriteResult normalize_to_t(const Presentation& p, const ZMap& phi);

/// Weight map on the output of normalize_to_t: t -> 1, y_i -> 0.
ZMap t_coordinate(std::size_t y_count);

/// Largest |prefix sum| of phi(gen) * sign along the letters.
Integer delta(std::span<const Letter> letters, const ZMap& phi);
Integer delta(const Word& w, const ZMap& phi);

struct ConjugateLetter {
  std::size_t gen = 0;      // index of a_i in the source alphabet
  std::int64_t height = 0;  // j in t^j a_i t^-j
  int sign = 1;

  bool operator==(const ConjugateLetter&) const = default;
};

using ConjugateWord = std::vector<ConjugateLetter>;

/// Index of the generator t with phi(t) = 1 when phi vanishes elsewhere.
/// Throws E_INVALID_ZMAP otherwise.
std::size_t stable_letter(const ZMap& phi);

/// Rewrites R over a_{i,j} = t^j a_i t^-j. Throws E_NONZERO_T_SUM when the
/// t-exponent sum of R is not zero.
ConjugateWord conjugate_rewrite(const Word& r, const ZMap& phi);

/// Inverse of conjugate_rewrite: expands and freely reduces.
Word expand(const ConjugateWord& cw, std::size_t t_index);

/// "a_{1} a_{0}^-1" with names from the alphabet.
std::string format_conjugate_word(const ConjugateWord& cw, const Alphabet& alphabet);

}  // namespace largeness
