#include "largeness/report.hpp"

#include <sstream>

#include "largeness/presentation_io.hpp"

namespace largeness::report {

namespace {

json indices(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i + 1);
  return out;
}

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + 1);
  return out + "}";
}

json substitution(const Substitution& s, const Alphabet& from, const Alphabet& to) {
  json out = json::object();
  for (const auto& [g, w] : s) out[from.name(g)] = format_word(w, to);
  return out;
}

struct WitnessJson {
  const Presentation& p;
  json operator()(const DeficiencyWitness& w) const { return {{"deficiency", w.deficiency}}; }
  json operator()(const FinAbelPart1Witness& w) const {
    return {{"J", indices(w.J)}, {"l", w.J.size()}, {"outside_J", indices(w.outside_J)}};
  }
  json operator()(const FinAbelPart2Witness& w) const {
    return {{"j", w.j + 1},
            {"k", w.k.get_str()},
            {"relator_exponents", integers(w.target)},
            {"lattice_coefficients", integers(w.lattice_coefficients)}};
  }
  json operator()(const InfAbelWitness& w) const {
    return {{"prime", w.prime},
            {"exempt", indices(w.exempt)},
            {"phi", format_zmap(w.phi, p.generators)},
            {"phi_user_supplied", w.user_supplied_phi},
            {"deltas", integers(w.deltas)},
            {"K", w.bound.get_str()}};
  }
};

}  // namespace

json summary(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(g.name);
  json rels = json::array();
  for (const auto& r : p.relators)
    rels.push_back({{"root", format_word(r.root, p.generators)}, {"power", r.power}});
  return {{"text", format_presentation(p)},
          {"generators", gens},
          {"relators", rels},
          {"deficiency", p.deficiency()}};
}

json abelian(const AbelianStructure& a) {
  return {{"invariant_factors", integers(a.invariant_factors)},
          {"free_rank", a.free_rank},
          {"order", a.order.to_string()},
          {"text", a.to_string()}};
}

json evidence(const NontrivialityEvidence& e) {
  json out{{"nontrivial", e.nontrivial}};
  out["infinite_deletion_with_power"] =
      e.infinite_deletion_with_power ? json(*e.infinite_deletion_with_power + 1) : json(nullptr);
  if (!e.shared_factor_rule_applicable)
    out["finite_deletion_shared_factor"] = "not_applicable";
  else if (e.finite_deletion_shared_factor)
    out["finite_deletion_shared_factor"] = {e.finite_deletion_shared_factor->first + 1,
                                            e.finite_deletion_shared_factor->second + 1};
  else
    out["finite_deletion_shared_factor"] = nullptr;
  return out;
}

json spectrum(const std::vector<RemovalEntry>& entries) {
  json rows = json::array();
  for (const auto& e : entries)
    rows.push_back({{"relator", e.index + 1}, {"abelianisation", abelian(e.structure)}, {"in_J", e.in_J}});
  auto J = finite_deletions(entries);
  return {{"deletions", rows}, {"J", indices(J)}, {"l", J.size()}};
}

json rewrite(const RewriteResult& r, const Presentation& source, std::string_view mode, const ZMap* phi) {
  json steps = json::array();
  for (const auto& s : r.trace.steps) steps.push_back(s.description);
  json out{{"mode", mode},
           {"output", summary(r.presentation)},
           {"steps", steps},
           {"forward", substitution(r.trace.forward, source.generators, r.trace.target)},
           {"backward", substitution(r.trace.backward, r.trace.target, source.generators)}};
  if (phi) out["phi"] = format_zmap(*phi, source.generators);
  return out;
}

json bound(const DeficiencyBound& b) {
  return {{"index", b.index.get_str()},
          {"orders", integers(b.orders)},
          {"rdef", rational_string(b.rdef)},
          {"bound", rational_string(b.bound)}};
}

json certificate(const Certificate& c, const Presentation& p) {
  return {{"rule", rule_name(c.rule)},
          {"lhs", rational_string(c.inequality_lhs)},
          {"threshold", rational_string(c.threshold)},
          {"witnesses", std::visit(WitnessJson{p}, c.witness)},
          {"abelian_summary", abelian(c.abelian_summary)}};
}

json rejection(const Rejection& r) {
  return {{"rule", rule_name(r.rule)},
          {"clause", r.clause},
          {"lhs", r.lhs ? json(rational_string(*r.lhs)) : json(nullptr)},
          {"detail", r.detail}};
}

json certification(const CertificateReport& r, const Presentation& p) {
  json out = json::object();
  json rejections = json::array();
  for (const auto& x : r.rejections) rejections.push_back(rejection(x));
  if (r.certificate) {
    out = certificate(*r.certificate, p);
  } else {
    out["rule"] = nullptr;
    out["witnesses"] = json::object();
  }
  out["rejections"] = rejections;
  return out;
}

std::string abelian_text(const AbelianStructure& a) {
  return "abelianisation: " + a.to_string() + "\norder: " + a.order.to_string() + "\n";
}

std::string certification_text(const CertificateReport& r, const Presentation& p) {
  std::ostringstream os;
  if (r.certificate) {
    const Certificate& c = *r.certificate;
    os << "large: yes (" << rule_name(c.rule) << ")\n";
    os << "lhs: " << rational_string(c.inequality_lhs) << " > " << rational_string(c.threshold) << "\n";
    os << "abelianisation: " << c.abelian_summary.to_string() << "\n";
    if (const auto* w = std::get_if<FinAbelPart1Witness>(&c.witness))
      os << "J: " << index_list(w->J) << " (l = " << w->J.size() << ")\n";
    if (const auto* w = std::get_if<FinAbelPart2Witness>(&c.witness))
      os << "j: " << w->j + 1 << ", k: " << w->k.get_str() << "\n";
    if (const auto* w = std::get_if<InfAbelWitness>(&c.witness))
      os << "prime: " << w->prime << ", exempt: " << index_list(w->exempt)
         << ", K: " << w->bound.get_str() << ", phi: " << format_zmap(w->phi, p.generators) << "\n";
  } else {
    os << "large: undetermined (no rule applies)\n";
  }
  for (const auto& x : r.rejections) {
    os << "rejected " << rule_name(x.rule) << ": " << x.clause;
    if (x.lhs) os << " (lhs " << rational_string(*x.lhs) << ")";
    if (!x.detail.empty()) os << " - " << x.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace largeness::report
