#include "largeness/presentation_io.hpp"

#include <fstream>
#include <sstream>

#include "largeness/error.hpp"
#include "parser_detail.hpp"

namespace largeness {

namespace {

PowerRelator fold_relator(const std::vector<detail::Factor>& factors, const detail::Reader& reader) {
  if (factors.size() == 1 && factors.front().exponent != 0 && !factors.front().atom.empty()) {
    const auto& f = factors.front();
    PowerRelator base = minimal_root(f.atom);
    std::int64_t k = f.exponent;
    if (k < 0) base.root = base.root.inverse();
    auto mag = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    return PowerRelator::make(base.root, base.power * mag);
  }
  Word w = detail::expand(factors);
  if (w.empty())
    throw Error(ErrorCode::EmptyRelator, reader.location() + ": relator reduces to the empty word");
  return PowerRelator::make(w);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  detail::Reader reader(text, &p.generators);
  reader.expect('<');
  if (reader.peek() != '|') {
    do {
      std::string name = reader.identifier();
      if (p.generators.find(name) != p.generators.size())
        throw Error(ErrorCode::DuplicateGenerator,
                    reader.location() + ": duplicate generator '" + name + "'");
      p.generators.add(name);
    } while (reader.accept(','));
  }
  reader.expect('|');
  if (reader.peek() != '>') {
    do {
      p.relators.push_back(fold_relator(reader.factors(), reader));
    } while (reader.accept(','));
  }
  reader.expect('>');
  if (!reader.at_end()) reader.fail("unexpected input after '>'");
  return p;
}

std::string format_relator(const PowerRelator& r, const Alphabet& alphabet) {
  std::string root = format_word(r.root, alphabet);
  if (r.power == 1) return root;
  if (r.root.size() == 1) return alphabet.name(r.root[0].gen) + "^" +
                                 (r.root[0].sign < 0 ? "-" : "") + std::to_string(r.power);
  return "(" + root + ")^" + std::to_string(r.power);
}

std::string format_presentation(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ", ";
    out += p.generators.name(i);
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_relator(p.relators[i], p.generators);
  }
  out += " >";
  return out;
}

ZMap parse_zmap(std::string_view text, const Alphabet& alphabet) {
  ZMap phi;
  phi.values.assign(alphabet.size(), 0);
  std::vector<bool> seen(alphabet.size(), false);
  detail::Reader reader(text, &alphabet);
  if (reader.at_end()) return phi;
  do {
    std::string name = reader.identifier();
    std::size_t idx = alphabet.find(name);
    if (idx == alphabet.size())
      throw Error(ErrorCode::UnknownGenerator, "phi names unknown generator '" + name + "'");
    if (seen[idx]) throw Error(ErrorCode::Parse, "phi assigns '" + name + "' twice");
    seen[idx] = true;
    reader.expect('=');
    phi.values[idx] = Integer(reader.integer());
  } while (reader.accept(','));
  if (!reader.at_end()) reader.fail("unexpected input in phi");
  return phi;
}

std::string format_zmap(const ZMap& phi, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < phi.values.size(); ++i) {
    if (i) out += ", ";
    out += alphabet.name(i) + "=" + phi.values[i].get_str();
  }
  return out;
}

PresentationDocument parse_document(std::string_view text, std::string source) {
  PresentationDocument doc;
  doc.source = std::move(source);
  doc.presentation = parse_presentation(text);

  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line.compare(start, 2, "#!") != 0) continue;
    std::string_view rest = std::string_view(line).substr(start + 2);
    auto key = rest.find("phi:");
    if (key == std::string_view::npos) continue;
    ZMap phi = parse_zmap(rest.substr(key + 4), doc.presentation.generators);
    validate_zmap(doc.presentation, phi);
    doc.phi = std::move(phi);
  }
  return doc;
}

PresentationDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str(), path);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace largeness
