#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "largeness/abelian.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

/// Parses `< gens | relators >`. A relator written as a single power
/// `atom^k` keeps k as its power after extracting the minimal root of the
/// atom; any other relator is reduced and its minimal root extracted.
/// Errors: E_PARSE, E_DUP_GEN, E_UNKNOWN_GEN, E_EMPTY_RELATOR.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation on reduced presentations, e.g.
/// "< a, t | (a t a^-1 t^-1)^2 >".
std::string format_presentation(const Presentation& p);

std::string format_relator(const PowerRelator& r, const Alphabet& alphabet);

/// "t=1, a=0"; generators not mentioned map to 0.
ZMap parse_zmap(std::string_view text, const Alphabet& alphabet);

std::string format_zmap(const ZMap& phi, const Alphabet& alphabet);

struct PresentationDocument {
  std::string source;  // path, or "<string>"
  Presentation presentation;
  std::optional<ZMap> phi;  // from a `#! phi: ...` line
};

/// Parses a document; a comment line `#! phi: t=1,a=0` supplies a ZMap.
PresentationDocument parse_document(std::string_view text, std::string source = "<string>");

/// Reads and parses a file. Errors carry the path; E_IO when unreadable.
PresentationDocument load_document(const std::string& path);

}  // namespace largeness
