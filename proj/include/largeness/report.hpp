#pragma once

#include <string>

#include <json.hpp>

#include "largeness/abelian.hpp"
#include "largeness/certify.hpp"
#include "largeness/presentation.hpp"
#include "largeness/rewrite.hpp"

namespace largeness::report {

using nlohmann::json;

// Relator and generator indices in reports are 1-based. Rationals are
// "num/den" strings and big integers are decimal strings.

json summary(const Presentation& p);
json abelian(const AbelianStructure& a);
json evidence(const NontrivialityEvidence& e);
json spectrum(const std::vector<RemovalEntry>& entries);
json rewrite(const RewriteResult& r, const Presentation& source, std::string_view mode,
             const ZMap* phi);
json bound(const DeficiencyBound& b);
json certificate(const Certificate& c, const Presentation& p);
json rejection(const Rejection& r);
json certification(const CertificateReport& r, const Presentation& p);

std::string abelian_text(const AbelianStructure& a);
std::string certification_text(const CertificateReport& r, const Presentation& p);

}  // namespace largeness::report
