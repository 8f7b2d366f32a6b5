#include "largeness/certify.hpp"

#include <algorithm>

#include "largeness/error.hpp"
#include "largeness/primes.hpp"
#include "largeness/rewrite.hpp"

namespace largeness {

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::DeficiencyGe2: return "DEFICIENCY_GE_2";
    case Rule::CorInfAbel: return "COR_INF_ABEL";
    case Rule::ThmFinAbelP1: return "THM_FIN_ABEL_P1";
    case Rule::ThmFinAbelP2: return "THM_FIN_ABEL_P2";
  }
  return "UNKNOWN";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (Rule r : {Rule::DeficiencyGe2, Rule::CorInfAbel, Rule::ThmFinAbelP1, Rule::ThmFinAbelP2})
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

namespace {

Rational reciprocal(std::uint64_t m) { return Rational(Integer(1), Integer(m)); }

Rejection reject(Rule rule, std::string clause, std::string detail,
                 std::optional<Rational> lhs = std::nullopt) {
  return Rejection{rule, std::move(clause), std::move(lhs), std::move(detail)};
}

void require_deficiency_minus_one(const Presentation& p) {
  if (p.deficiency() != -1)
    throw Error(ErrorCode::WrongDeficiency,
                "presentation has deficiency " + std::to_string(p.deficiency()) + ", expected -1");
}

// Shared guard for both finite-abelianisation rules.
std::optional<Rejection> finite_guard(Rule rule, const Presentation& p, const AbelianStructure& ab) {
  if (p.rank() < 2)
    return reject(rule, "TOO_FEW_GENERATORS", "needs at least two generators");
  if (!ab.is_finite())
    return reject(rule, "ABELIANISATION_INFINITE", "abelianisation is " + ab.to_string());
  if (ab.is_trivial())
    return reject(rule, "ABELIANISATION_TRIVIAL", "abelianisation is trivial");
  return std::nullopt;
}

}  // namespace

CheckOutcome check_deficiency(const Presentation& p) {
  Rational lhs(p.deficiency());
  if (p.deficiency() >= 2)
    return Certificate{Rule::DeficiencyGe2, lhs, 1, DeficiencyWitness{p.deficiency()}, abelianisation(p)};
  return reject(Rule::DeficiencyGe2, "DEFICIENCY_BELOW_2",
                "deficiency " + std::to_string(p.deficiency()) + " is not greater than one", lhs);
}

CheckOutcome check_fin_abel_part1(const Presentation& p) {
  require_deficiency_minus_one(p);
  const Rule rule = Rule::ThmFinAbelP1;
  AbelianStructure ab = abelianisation(p);
  if (auto r = finite_guard(rule, p, ab)) return *r;

  FinAbelPart1Witness w;
  for (const auto& e : removal_spectrum(p)) (e.in_J ? w.J : w.outside_J).push_back(e.index);

  Rational lhs(static_cast<long>(p.rank()) - static_cast<long>(w.J.size()));
  for (std::size_t i : w.outside_J) lhs -= reciprocal(p.relators[i].power);

  if (lhs > 1) return Certificate{rule, lhs, 1, std::move(w), std::move(ab)};
  return reject(rule, "INEQUALITY_FAILS",
                "d - l - sum 1/m_i = " + rational_string(lhs) + " with l = " + std::to_string(w.J.size()),
                lhs);
}

CheckOutcome check_fin_abel_part2(const Presentation& p) {
  require_deficiency_minus_one(p);
  const Rule rule = Rule::ThmFinAbelP2;
  AbelianStructure ab = abelianisation(p);
  if (auto r = finite_guard(rule, p, ab)) return *r;

  Rational sum_all = 0;
  for (const auto& r : p.relators) sum_all += reciprocal(r.power);

  IntMatrix full = p.exponent_matrix();
  std::optional<Rational> best;
  std::size_t lattice_hits = 0;
  for (const auto& e : removal_spectrum(p)) {
    if (!e.in_J) continue;
    const std::size_t j = e.index;
    IntMatrix rows = full.without_row(j);
    std::vector<Integer> target = full.row(j);
    auto coeffs = in_row_lattice(rows, target);
    if (!coeffs) continue;
    ++lattice_hits;
    Order k = order_in_quotient(rows, exponent_vector(p.relators[j].root, p.rank()));
    Rational lhs = Rational(static_cast<long>(p.rank())) - (sum_all - reciprocal(p.relators[j].power)) -
                   Rational(Integer(1), k.value());
    if (lhs > 1) {
      FinAbelPart2Witness w{j, k.value(), std::move(target), std::move(*coeffs)};
      return Certificate{rule, lhs, 1, std::move(w), std::move(ab)};
    }
    if (!best || lhs > *best) best = lhs;
  }
  if (lattice_hits == 0)
    return reject(rule, "NO_COMMUTATOR_IMAGE",
                  "no j in J has u_j^m_j in the commutator subgroup of G_j");
  return reject(rule, "INEQUALITY_FAILS",
                "best d - sum 1/m_i - 1/k over qualifying j is " + rational_string(*best), best);
}

CheckOutcome check_inf_abel(const Presentation& p, const std::optional<ZMap>& phi_override) {
  const Rule rule = Rule::CorInfAbel;
  const long n = static_cast<long>(p.rank());
  if (n <= 1) return reject(rule, "TOO_FEW_GENERATORS", "needs more than one generator");
  AbelianStructure ab = abelianisation(p);
  if (ab.is_finite())
    return reject(rule, "ABELIANISATION_FINITE", "abelianisation is " + ab.to_string());

  std::vector<std::uint64_t> candidates;
  for (const auto& r : p.relators)
    for (auto q : prime_divisors(r.power)) candidates.push_back(q);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // With no proper powers at all every prime exempts every relator alike.
  if (candidates.empty()) candidates.push_back(2);

  std::optional<std::uint64_t> chosen;
  std::size_t fewest = p.relator_count() + 1;
  std::vector<std::size_t> exempt;
  for (auto q : candidates) {
    std::vector<std::size_t> ex;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (p.relators[i].power % q != 0) ex.push_back(i);
    if (ex.size() < fewest) fewest = ex.size();
    if (static_cast<long>(ex.size()) <= n - 2) {
      chosen = q;
      exempt = std::move(ex);
      break;
    }
  }
  if (!chosen) {
    Rational lhs(n - static_cast<long>(fewest));
    return reject(rule, "NO_COMMON_PRIME",
                  "every prime leaves at least " + std::to_string(fewest) +
                      " relators exempt, more than n - 2 = " + std::to_string(n - 2),
                  lhs);
  }

  InfAbelWitness w;
  w.prime = *chosen;
  w.exempt = std::move(exempt);
  if (phi_override) {
    validate_zmap(p, *phi_override);
    w.phi = *phi_override;
    w.user_supplied_phi = true;
  } else {
    w.phi = *surjection_to_Z(p);
  }
  // phi kills each root, so delta(u^m) = delta(u).
  for (const auto& r : p.relators) {
    w.deltas.push_back(delta(r.root, w.phi));
    if (w.deltas.back() > w.bound) w.bound = w.deltas.back();
  }
  Rational lhs(n - static_cast<long>(w.exempt.size()));
  return Certificate{rule, lhs, 1, std::move(w), std::move(ab)};
}

DeficiencyBound deficiency_bound(const Presentation& p) {
  SmithDecomposition snf = smith_normal_form(p.exponent_matrix());
  if (snf.rank < p.rank())
    throw Error(ErrorCode::InfiniteAbelianisation,
                "abelianisation is infinite; the commutator subgroup has infinite index");
  DeficiencyBound b;
  b.index = 1;
  for (const auto& f : snf.invariant_factors) b.index *= f;
  b.rdef = Rational(static_cast<long>(p.rank()));
  for (const auto& r : p.relators) {
    Order k = order_in_quotient(snf, exponent_vector(r.root, p.rank()));
    b.orders.push_back(k.value());
    b.rdef -= Rational(Integer(1), k.value());
  }
  b.bound = 1 + Rational(b.index) * (b.rdef - 1);
  return b;
}

CertificateReport certify(const Presentation& p, const CertifyOptions& options) {
  CertificateReport report;
  for (Rule rule : options.order) {
    CheckOutcome outcome = [&]() -> CheckOutcome {
      switch (rule) {
        case Rule::DeficiencyGe2: return check_deficiency(p);
        case Rule::CorInfAbel: return check_inf_abel(p, options.phi);
        case Rule::ThmFinAbelP1:
        case Rule::ThmFinAbelP2:
          if (p.deficiency() != -1)
            return reject(rule, "NOT_DEFICIENCY_MINUS_ONE",
                          "deficiency is " + std::to_string(p.deficiency()));
          return rule == Rule::ThmFinAbelP1 ? check_fin_abel_part1(p) : check_fin_abel_part2(p);
      }
      return reject(rule, "UNKNOWN_RULE", "");
    }();
    if (auto* c = certificate_of(outcome)) {
      report.certificate = std::move(*c);
      return report;
    }
    report.rejections.push_back(std::get<Rejection>(std::move(outcome)));
  }
  return report;
}

std::optional<std::string> revalidate(const Presentation& p, const Certificate& cert) {
  if (!(cert.inequality_lhs > cert.threshold)) return "inequality does not exceed its threshold";
  AbelianStructure ab = abelianisation(p);
  if (!(ab == cert.abelian_summary)) return "abelianisation summary differs";
  const long d = static_cast<long>(p.rank());

  if (const auto* w = std::get_if<DeficiencyWitness>(&cert.witness)) {
    if (w->deficiency != p.deficiency() || Rational(w->deficiency) != cert.inequality_lhs)
      return "deficiency mismatch";
    return std::nullopt;
  }

  if (const auto* w = std::get_if<FinAbelPart1Witness>(&cert.witness)) {
    if (p.deficiency() != -1 || !ab.is_finite() || ab.is_trivial()) return "hypotheses fail";
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (abelianisation(p.without_relator(i)).is_finite()) J.push_back(i);
    if (J != w->J) return "J differs";
    Rational lhs(d - static_cast<long>(J.size()));
    for (std::size_t i : w->outside_J) lhs -= reciprocal(p.relators[i].power);
    if (lhs != cert.inequality_lhs) return "lhs differs";
    return std::nullopt;
  }

  if (const auto* w = std::get_if<FinAbelPart2Witness>(&cert.witness)) {
    if (p.deficiency() != -1 || !ab.is_finite() || ab.is_trivial()) return "hypotheses fail";
    if (w->j >= p.relators.size()) return "j out of range";
    Presentation pj = p.without_relator(w->j);
    if (!abelianisation(pj).is_finite()) return "j is not in J";
    if (row_times(w->lattice_coefficients, pj.exponent_matrix()) != p.exponent_matrix().row(w->j))
      return "lattice coefficients do not reproduce u_j^m_j";
    Order k = word_order(pj, p.relators[w->j].root);
    if (!k.is_finite() || k.value() != w->k) return "order k differs";
    Rational lhs(d);
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (i != w->j) lhs -= reciprocal(p.relators[i].power);
    lhs -= Rational(Integer(1), w->k);
    if (lhs != cert.inequality_lhs) return "lhs differs";
    return std::nullopt;
  }

  if (const auto* w = std::get_if<InfAbelWitness>(&cert.witness)) {
    if (d <= 1 || ab.is_finite()) return "hypotheses fail";
    if (!is_prime(w->prime)) return "witness prime is not prime";
    std::vector<std::size_t> exempt;
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (p.relators[i].power % w->prime != 0) exempt.push_back(i);
    if (exempt != w->exempt) return "exempt set differs";
    if (static_cast<long>(exempt.size()) > d - 2) return "too many exempt relators";
    if (!is_valid_zmap(p, w->phi)) return "phi is not a surjection onto Z";
    Integer bound = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      Integer dl = delta(p.relators[i].full(), w->phi);
      if (dl != w->deltas.at(i)) return "delta of relator " + std::to_string(i + 1) + " differs";
      if (dl > bound) bound = dl;
    }
    if (bound != w->bound) return "K differs";
    if (Rational(d - static_cast<long>(exempt.size())) != cert.inequality_lhs) return "lhs differs";
    return std::nullopt;
  }
  return "unknown witness";
}

}  // namespace largeness
