#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "largeness/matz.hpp"
#include "largeness/words.hpp"

namespace largeness {

/// < x_1..x_d | u_1^{m_1}, ..., u_s^{m_s} >
struct Presentation {
  Alphabet generators;
  std::vector<PowerRelator> relators;

  std::size_t rank() const noexcept { return generators.size(); }
  std::size_t relator_count() const noexcept { return relators.size(); }
  long deficiency() const noexcept {
    return static_cast<long>(generators.size()) - static_cast<long>(relators.size());
  }

  /// Row i is the exponent vector of the full relator u_i^{m_i}.
  IntMatrix exponent_matrix() const;
  /// Row i is the exponent vector of the root u_i.
  IntMatrix root_matrix() const;

  /// The presentation with relator i deleted.
  Presentation without_relator(std::size_t i) const;

  bool operator==(const Presentation&) const = default;
};

}  // namespace largeness
