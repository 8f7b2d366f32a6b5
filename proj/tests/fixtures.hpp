#pragma once

#include <string>
#include <vector>

#include "largeness/presentation_io.hpp"

namespace largeness::fixtures {

inline Presentation pres(const std::string& text) { return parse_presentation(text); }

// < x1..x2n | (x1 x2)^m1, x2^m2, ..., (x_{2n-1} x_{2n})^m_{2n-1}, x_{2n}^m_{2n}, (x2 x4 .. x2n)^alpha >
inline Presentation paired_family(std::size_t n, const std::vector<unsigned>& m, unsigned alpha = 2) {
  std::string gens, rels, u;
  for (std::size_t i = 1; i <= 2 * n; ++i) gens += (i > 1 ? ", x" : "x") + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) {
    std::string odd = "x" + std::to_string(2 * i - 1), even = "x" + std::to_string(2 * i);
    rels += "(" + odd + " " + even + ")^" + std::to_string(m[2 * i - 2]) + ", ";
    rels += even + "^" + std::to_string(m[2 * i - 1]) + ", ";
    u += even + " ";
  }
  rels += "(" + u + ")^" + std::to_string(alpha);
  return parse_presentation("< " + gens + " | " + rels + " >");
}

inline Presentation paired_family_uniform(std::size_t n, unsigned m, unsigned alpha = 2) {
  return paired_family(n, std::vector<unsigned>(2 * n, m), alpha);
}

// < x1..xd | x1^m, ..., xd^m, x1^p > : balanced finite quotient plus w^n with w = x1.
inline Presentation cyclic_with_extra(std::size_t d, unsigned m, unsigned p) {
  std::string gens, rels;
  for (std::size_t i = 1; i <= d; ++i) {
    gens += (i > 1 ? ", x" : "x") + std::to_string(i);
    rels += "x" + std::to_string(i) + "^" + std::to_string(m) + ", ";
  }
  rels += "x1^" + std::to_string(p);
  return parse_presentation("< " + gens + " | " + rels + " >");
}

}  // namespace largeness::fixtures
