#include "largeness/abelian.hpp"

#include <numeric>

#include "largeness/error.hpp"

namespace largeness {

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators.size(), generators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    auto v = exponent_vector(relators[i].root, generators.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j] * Integer(relators[i].power);
  }
  return m;
}

IntMatrix Presentation::root_matrix() const {
  IntMatrix m(relators.size(), generators.size());
  for (std::size_t i = 0; i < relators.size(); ++i) {
    auto v = exponent_vector(relators[i].root, generators.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

Presentation Presentation::without_relator(std::size_t i) const {
  Presentation out = *this;
  out.relators.erase(out.relators.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

std::string AbelianStructure::to_string() const {
  std::string out;
  for (const auto& f : invariant_factors) {
    if (!out.empty()) out += " x ";
    out += "Z/" + f.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " x ";
    out += free_rank == 1 ? std::string("Z") : "Z^" + std::to_string(free_rank);
  }
  return out.empty() ? "1" : out;
}

namespace {

AbelianStructure structure_from(const SmithDecomposition& snf, std::size_t d) {
  AbelianStructure s;
  s.free_rank = d - snf.rank;
  Integer order = 1;
  for (const auto& f : snf.invariant_factors) {
    order *= f;
    if (f != 1) s.invariant_factors.push_back(f);
  }
  s.order = s.free_rank == 0 ? Order::finite(order) : Order::infinite();
  return s;
}

}  // namespace

AbelianStructure abelianisation(const Presentation& p) {
  return structure_from(smith_normal_form(p.exponent_matrix()), p.rank());
}

Order word_order(const Presentation& p, const Word& w) {
  return order_in_quotient(p.exponent_matrix(), exponent_vector(w, p.rank()));
}

bool is_valid_zmap(const Presentation& p, const ZMap& phi) {
  try {
    validate_zmap(p, phi);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void validate_zmap(const Presentation& p, const ZMap& phi) {
  if (phi.values.size() != p.rank())
    throw Error(ErrorCode::InvalidZMap, "map has " + std::to_string(phi.values.size()) +
                                            " values for " + std::to_string(p.rank()) + " generators");
  Integer g = 0;
  for (const auto& x : phi.values) g = gcd(g, x);
  if (g != 1) throw Error(ErrorCode::InvalidZMap, "map values have gcd " + g.get_str() + ", not 1");
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    auto v = exponent_vector(p.relators[i].root, p.rank());
    Integer dot = 0;
    for (std::size_t j = 0; j < v.size(); ++j) dot += v[j] * phi.values[j];
    if (dot != 0)
      throw Error(ErrorCode::InvalidZMap,
                  "relator " + std::to_string(i + 1) + " maps to " + dot.get_str() + ", not 0");
  }
}

std::optional<ZMap> surjection_to_Z(const Presentation& p) {
  SmithDecomposition snf = smith_normal_form(p.exponent_matrix());
  if (snf.rank == p.rank()) return std::nullopt;
  // M V e_j = U^-1 D e_j = 0 for every column j >= rank.
  std::size_t col = p.rank() - 1;
  ZMap phi;
  phi.values.reserve(p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) phi.values.push_back(snf.V(i, col));
  for (const auto& x : phi.values) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : phi.values) y = -y;
    break;
  }
  return phi;
}

std::vector<RemovalEntry> removal_spectrum(const Presentation& p) {
  std::vector<RemovalEntry> out;
  out.reserve(p.relators.size());
  IntMatrix full = p.exponent_matrix();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    AbelianStructure s = structure_from(smith_normal_form(full.without_row(i)), p.rank());
    bool finite = s.is_finite();
    out.push_back({i, std::move(s), finite});
  }
  return out;
}

std::vector<std::size_t> finite_deletions(const std::vector<RemovalEntry>& spectrum) {
  std::vector<std::size_t> j;
  for (const auto& e : spectrum)
    if (e.in_J) j.push_back(e.index);
  return j;
}

NontrivialityEvidence nontriviality_evidence(const Presentation& p) {
  NontrivialityEvidence ev;
  ev.abelian = abelianisation(p);
  ev.nontrivial = !ev.abelian.is_trivial();
  auto spectrum = removal_spectrum(p);

  for (const auto& e : spectrum) {
    if (!e.in_J && p.relators[e.index].power > 1) {
      ev.infinite_deletion_with_power = e.index;
      break;
    }
  }

  ev.shared_factor_rule_applicable = p.relator_count() == p.rank() + 1;
  if (ev.shared_factor_rule_applicable) {
    for (const auto& e : spectrum) {
      if (!e.in_J) continue;
      for (std::size_t j = 0; j < p.relators.size(); ++j) {
        if (j == e.index) continue;
        if (std::gcd(p.relators[e.index].power, p.relators[j].power) != 1) {
          ev.finite_deletion_shared_factor = std::make_pair(e.index, j);
          break;
        }
      }
      if (ev.finite_deletion_shared_factor) break;
    }
  }
  return ev;
}

}  // namespace largeness
