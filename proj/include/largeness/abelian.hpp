#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "largeness/matz.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

/// Z^free_rank + Z/f_1 + ... + Z/f_k with f_1 | f_2 | ..., all f_i > 1.
struct AbelianStructure {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;
  Order order = Order::finite(1);

  bool is_finite() const noexcept { return free_rank == 0; }
  bool is_trivial() const noexcept { return free_rank == 0 && invariant_factors.empty(); }

  /// "Z/2 x Z/6 x Z^2"; the trivial group prints as "1".
  std::string to_string() const;

  bool operator==(const AbelianStructure& o) const {
    return invariant_factors == o.invariant_factors && free_rank == o.free_rank && order == o.order;
  }
};

AbelianStructure abelianisation(const Presentation& p);

/// Order of the image of w in the abelianisation of p.
Order word_order(const Presentation& p, const Word& w);

/// Surjection onto Z given by the image of each generator.
struct ZMap {
  std::vector<Integer> values;

  Integer operator()(std::size_t gen) const { return values.at(gen); }
  bool operator==(const ZMap&) const = default;
};

/// Checks that phi kills every relator and has coprime values.
bool is_valid_zmap(const Presentation& p, const ZMap& phi);

/// Throws E_INVALID_ZMAP with the failing condition.
void validate_zmap(const Presentation& p, const ZMap& phi);

/// A canonical surjection onto Z, or nullopt when the abelianisation is
/// finite. Taken from the last free column of the Smith transform V and
/// sign-normalised so its first nonzero value is positive.
std::optional<ZMap> surjection_to_Z(const Presentation& p);

struct RemovalEntry {
  std::size_t index = 0;  // 0-based relator index
  AbelianStructure structure;
  bool in_J = false;  // deletion leaves a finite abelianisation
};

/// Abelianisation of each single-relator deletion P_i.
std::vector<RemovalEntry> removal_spectrum(const Presentation& p);

/// Indices (0-based) whose deletion leaves a finite abelianisation.
std::vector<std::size_t> finite_deletions(const std::vector<RemovalEntry>& spectrum);

struct NontrivialityEvidence {
  AbelianStructure abelian;
  bool nontrivial = false;
  /// Smallest i with G_i of infinite abelianisation and m_i > 1.
  std::optional<std::size_t> infinite_deletion_with_power;
  /// Smallest (i, j), j != i, with G_i of finite abelianisation and
  /// gcd(m_i, m_j) != 1. Only evaluated for s = d + 1 relators.
  std::optional<std::pair<std::size_t, std::size_t>> finite_deletion_shared_factor;
  bool shared_factor_rule_applicable = false;
};

NontrivialityEvidence nontriviality_evidence(const Presentation& p);

}  // namespace largeness
