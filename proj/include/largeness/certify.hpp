#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "largeness/abelian.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

using Rational = mpq_class;

/// "num/den" in lowest terms, always with a denominator.
std::string rational_string(const Rational& q);

enum class Rule {
  DeficiencyGe2,  // deficiency at least two
  CorInfAbel,     // infinite abelianisation, powers share a prime
  ThmFinAbelP1,   // deficiency -1, finite abelianisation, J-count inequality
  ThmFinAbelP2,   // deficiency -1, finite abelianisation, commutator image of a relator
};

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

struct DeficiencyWitness {
  long deficiency = 0;
};

struct FinAbelPart1Witness {
  std::vector<std::size_t> J;          // 0-based relator indices
  std::vector<std::size_t> outside_J;  // complement of J
};

struct FinAbelPart2Witness {
  std::size_t j = 0;                         // 0-based relator index
  Integer k = 0;                             // order of u_j in ab(G_j)
  std::vector<Integer> target;               // exponent vector of u_j^{m_j}
  std::vector<Integer> lattice_coefficients; // coefficients over the rows of P_j
};

struct InfAbelWitness {
  std::uint64_t prime = 2;
  std::vector<std::size_t> exempt;  // relators whose power p does not divide
  ZMap phi;
  bool user_supplied_phi = false;
  std::vector<Integer> deltas;  // delta of each relator under phi
  Integer bound = 0;            // K = max deltas
};

using Witness = std::variant<DeficiencyWitness, FinAbelPart1Witness, FinAbelPart2Witness, InfAbelWitness>;

struct Certificate {
  Rule rule = Rule::DeficiencyGe2;
  Rational inequality_lhs;
  Rational threshold = 1;
  Witness witness;
  AbelianStructure abelian_summary;
};

struct Rejection {
  Rule rule = Rule::DeficiencyGe2;
  std::string clause;  // e.g. "INEQUALITY_FAILS", "ABELIANISATION_FINITE"
  std::optional<Rational> lhs;
  std::string detail;
};

using CheckOutcome = std::variant<Certificate, Rejection>;

inline const Certificate* certificate_of(const CheckOutcome& o) { return std::get_if<Certificate>(&o); }
inline const Rejection* rejection_of(const CheckOutcome& o) { return std::get_if<Rejection>(&o); }

/// Deficiency d - s > 1.
CheckOutcome check_deficiency(const Presentation& p);

/// d - l - sum_{i not in J} 1/m_i > 1 for deficiency -1 presentations with
/// non-trivial finite abelianisation. Throws E_WRONG_DEFICIENCY.
CheckOutcome check_fin_abel_part1(const Presentation& p);

/// d - sum_{i != j} 1/m_i - 1/k > 1 for the smallest j in J whose relator
/// u_j^{m_j} dies in the abelianisation of G_j. Throws E_WRONG_DEFICIENCY.
CheckOutcome check_fin_abel_part2(const Presentation& p);

/// Infinite abelianisation and a prime p with #{i : p does not divide m_i}
/// at most n - 2. `phi` overrides the canonical surjection used for K.
CheckOutcome check_inf_abel(const Presentation& p, const std::optional<ZMap>& phi = std::nullopt);

struct DeficiencyBound {
  Integer index = 0;            // |ab(G)|
  std::vector<Integer> orders;  // k_i, order of u_i in ab(G)
  Rational rdef;                // d - sum 1/k_i
  Rational bound;               // 1 + index (rdef - 1)
};

/// Lower bound for the deficiency of the commutator subgroup.
/// Throws E_INFINITE_ABELIANISATION.
DeficiencyBound deficiency_bound(const Presentation& p);

struct CertifyOptions {
  std::vector<Rule> order{Rule::DeficiencyGe2, Rule::CorInfAbel, Rule::ThmFinAbelP1,
                          Rule::ThmFinAbelP2};
  std::optional<ZMap> phi;
};

struct CertificateReport {
  std::optional<Certificate> certificate;
  std::vector<Rejection> rejections;
};

/// First certificate in rule order, or every rejection.
CertificateReport certify(const Presentation& p, const CertifyOptions& options = {});

/// Re-derives every witness of `cert` from scratch. Returns the first
/// discrepancy, or nullopt when the certificate checks out.
std::optional<std::string> revalidate(const Presentation& p, const Certificate& cert);

}  // namespace largeness
