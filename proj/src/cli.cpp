#include "largeness/cli.hpp"

#include <chrono>
#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "largeness/abelian.hpp"
#include "largeness/certify.hpp"
#include "largeness/error.hpp"
#include "largeness/presentation_io.hpp"
#include "largeness/report.hpp"
#include "largeness/rewrite.hpp"

namespace largeness::cli {

namespace {

using report::json;

struct Options {
  std::string command;
  std::vector<std::string> files;
  std::string format = "text";
  std::string phi;
  std::string word;
  std::string mode = "normalize";
  std::string rules;
  bool require = false;
  bool no_timings = false;
};

struct FileResult {
  std::string text;
  json doc;
  bool ok = true;
  bool certified = false;
  std::string error;
};

ZMap surjection_or_throw(const Presentation& p) {
  auto phi = surjection_to_Z(p);
  if (!phi)
    throw Error(ErrorCode::InvalidZMap,
                "abelianisation is finite, so there is no surjection onto Z");
  return *phi;
}

ZMap resolve_phi(const Options& opt, const PresentationDocument& doc, bool* user) {
  if (!opt.phi.empty()) {
    ZMap phi = parse_zmap(opt.phi, doc.presentation.generators);
    validate_zmap(doc.presentation, phi);
    *user = true;
    return phi;
  }
  if (doc.phi) {
    *user = true;
    return *doc.phi;
  }
  *user = false;
  return surjection_or_throw(doc.presentation);
}

std::vector<Rule> parse_rules(const std::string& text) {
  std::vector<Rule> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(' ');
    auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    auto rule = rule_from_name(item.substr(b, e - b + 1));
    if (!rule) throw Error(ErrorCode::Parse, "unknown rule '" + item + "'");
    out.push_back(*rule);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty rule list");
  return out;
}

void run_abel(const Presentation& p, FileResult& r) {
  auto ev = nontriviality_evidence(p);
  r.doc["abelianisation"] = report::abelian(ev.abelian);
  r.doc["nontriviality"] = report::evidence(ev);
  r.text = report::abelian_text(ev.abelian);
  r.text += std::string("nontrivial: ") + (ev.nontrivial ? "yes" : "no") + "\n";
}

void run_spectrum(const Presentation& p, FileResult& r) {
  auto entries = removal_spectrum(p);
  r.doc["spectrum"] = report::spectrum(entries);
  std::ostringstream os;
  std::string J;
  for (const auto& e : entries) {
    os << "delete " << e.index + 1 << ": " << e.structure.to_string() << (e.in_J ? "  [J]" : "") << "\n";
    if (e.in_J) J += (J.empty() ? "" : ",") + std::to_string(e.index + 1);
  }
  os << "J = {" << J << "}, l = " << finite_deletions(entries).size() << "\n";
  r.text = os.str();
}

void run_rewrite(const Options& opt, const PresentationDocument& doc, FileResult& r) {
  const Presentation& p = doc.presentation;
  std::ostringstream os;
  if (opt.mode == "triangularize") {
    auto res = triangularize(p);
    r.doc["rewrite"] = report::rewrite(res, p, opt.mode, nullptr);
    os << format_presentation(res.presentation) << "\n";
    for (const auto& s : res.trace.steps) os << "  step: " << s.description << "\n";
  } else if (opt.mode == "normalize") {
    bool user = false;
    ZMap phi = resolve_phi(opt, doc, &user);
    auto res = normalize_to_t(p, phi);
    r.doc["rewrite"] = report::rewrite(res, p, opt.mode, &phi);
    os << format_presentation(res.presentation) << "\n";
    os << "phi: " << format_zmap(phi, p.generators) << "\n";
    for (const auto& s : res.trace.steps) os << "  step: " << s.description << "\n";
  } else if (opt.mode == "conjugate") {
    bool user = false;
    ZMap phi = resolve_phi(opt, doc, &user);
    std::vector<Word> words;
    if (!opt.word.empty())
      words.push_back(parse_word(opt.word, p.generators));
    else
      for (const auto& rel : p.relators) words.push_back(rel.full());
    json rows = json::array();
    for (const auto& w : words) {
      auto cw = conjugate_rewrite(w, phi);
      std::string text = format_conjugate_word(cw, p.generators);
      Integer dl = delta(w, phi);
      rows.push_back({{"word", format_word(w, p.generators)}, {"rewritten", text}, {"delta", dl.get_str()}});
      os << format_word(w, p.generators) << " = " << text << "  (delta " << dl.get_str() << ")\n";
    }
    r.doc["rewrite"] = {{"mode", opt.mode}, {"phi", format_zmap(phi, p.generators)}, {"words", rows}};
  } else {
    throw Error(ErrorCode::Parse, "unknown rewrite mode '" + opt.mode + "'");
  }
  r.text = os.str();
}

void run_delta(const Options& opt, const PresentationDocument& doc, FileResult& r) {
  const Presentation& p = doc.presentation;
  bool user = false;
  ZMap phi = resolve_phi(opt, doc, &user);
  json out{{"phi", format_zmap(phi, p.generators)}, {"phi_user_supplied", user}};
  std::ostringstream os;
  if (!opt.word.empty()) {
    Word w = parse_word(opt.word, p.generators);
    Integer v = delta(w, phi);
    out["word"] = format_word(w, p.generators);
    out["value"] = v.get_str();
    os << "delta: " << v.get_str() << "\n";
  } else {
    json values = json::array();
    Integer K = 0;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      Integer v = delta(p.relators[i].full(), phi);
      values.push_back(v.get_str());
      if (v > K) K = v;
      os << "relator " << i + 1 << ": " << v.get_str() << "\n";
    }
    out["relators"] = values;
    out["K"] = K.get_str();
    os << "K: " << K.get_str() << "\n";
  }
  r.doc["delta"] = out;
  r.text = os.str();
}

void run_bound(const Presentation& p, FileResult& r) {
  auto b = deficiency_bound(p);
  r.doc["deficiency_bound"] = report::bound(b);
  std::ostringstream os;
  os << "index: " << b.index.get_str() << "\norders:";
  for (const auto& k : b.orders) os << ' ' << k.get_str();
  os << "\nrdef: " << rational_string(b.rdef) << "\nbound: " << rational_string(b.bound) << "\n";
  r.text = os.str();
}

void run_certify(const Options& opt, const PresentationDocument& doc, FileResult& r) {
  CertifyOptions co;
  if (!opt.rules.empty()) co.order = parse_rules(opt.rules);
  if (!opt.phi.empty()) {
    co.phi = parse_zmap(opt.phi, doc.presentation.generators);
    validate_zmap(doc.presentation, *co.phi);
  } else {
    co.phi = doc.phi;
  }
  auto rep = certify(doc.presentation, co);
  r.certified = rep.certificate.has_value();
  json body = report::certification(rep, doc.presentation);
  for (auto& [k, v] : body.items()) r.doc[k] = v;
  r.text = report::certification_text(rep, doc.presentation);
}

FileResult process(const Options& opt, const std::string& path) {
  auto start = std::chrono::steady_clock::now();
  FileResult r;
  try {
    PresentationDocument doc = load_document(path);
    r.doc["input"] = path;
    r.doc["presentation_summary"] = report::summary(doc.presentation);
    const Presentation& p = doc.presentation;
    if (opt.command == "abel") run_abel(p, r);
    else if (opt.command == "spectrum") run_spectrum(p, r);
    else if (opt.command == "rewrite") run_rewrite(opt, doc, r);
    else if (opt.command == "delta") run_delta(opt, doc, r);
    else if (opt.command == "bound") run_bound(p, r);
    else if (opt.command == "certify") run_certify(opt, doc, r);
  } catch (const Error& e) {
    r.ok = false;
    std::string msg = e.what();
    if (msg.rfind(path, 0) != 0) msg = path + ": " + msg;
    r.error = std::string(error_code_name(e.code())) + ": " + msg;
    return r;
  }
  if (!opt.no_timings) {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    r.doc["timings"] = {{"total_ms", ms.count()}};
  }
  return r;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("files", opt.files, "Presentation files")->required();
  sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--no-timings", opt.no_timings, "Omit timings from JSON reports");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Largeness certificates for finitely presented groups with proper-power relators"};
  app.require_subcommand(1);
  Options opt;

  auto* abel = app.add_subcommand("abel", "Abelianisation and non-triviality evidence");
  auto* spec = app.add_subcommand("spectrum", "Abelianisation of every single-relator deletion");
  auto* rew = app.add_subcommand("rewrite", "Triangularize, normalise to a t-coordinate, or rewrite over conjugates");
  auto* del = app.add_subcommand("delta", "Delta statistic of a word or of every relator");
  auto* bnd = app.add_subcommand("bound", "Deficiency lower bound for the commutator subgroup");
  auto* cer = app.add_subcommand("certify", "Try every largeness rule");
  for (auto* s : {abel, spec, rew, del, bnd, cer}) add_common(s, opt);

  rew->add_option("--mode", opt.mode, "normalize | triangularize | conjugate")
      ->check(CLI::IsMember({"normalize", "triangularize", "conjugate"}));
  for (auto* s : {rew, del, cer}) s->add_option("--phi", opt.phi, "Surjection onto Z, e.g. \"t=1,a=0\"");
  for (auto* s : {rew, del}) s->add_option("--word", opt.word, "Word over the presentation's generators");
  cer->add_flag("--require", opt.require, "Exit with status 2 unless every input is certified");
  cer->add_option("--rules", opt.rules, "Comma-separated rule order");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  for (auto* s : app.get_subcommands()) opt.command = s->get_name();

  std::vector<std::future<FileResult>> jobs;
  for (const auto& f : opt.files) jobs.push_back(std::async(std::launch::async, process, opt, f));

  int status = kOk;
  bool missing_certificate = false;
  json all = json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    FileResult r = jobs[i].get();
    if (!r.ok) {
      err << r.error << "\n";
      status = kInputError;
      continue;
    }
    if (opt.command == "certify" && !r.certified) missing_certificate = true;
    if (opt.format == "json") {
      all.push_back(std::move(r.doc));
    } else {
      if (opt.files.size() > 1) out << "== " << opt.files[i] << " ==\n";
      out << r.text;
    }
  }
  if (opt.format == "json") {
    if (opt.files.size() == 1 && all.size() == 1)
      out << all[0].dump(2) << "\n";
    else
      out << all.dump(2) << "\n";
  }
  if (status == kOk && opt.require && missing_certificate) status = kNoCertificate;
  return status;
}

}  // namespace largeness::cli
