#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "largeness/certify.hpp"
#include "largeness/error.hpp"
#include "largeness/presentation_io.hpp"
#include "largeness/report.hpp"
#include "largeness/rewrite.hpp"

namespace py = pybind11;
using namespace largeness;
using nlohmann::json;

namespace {

ZMap phi_for(const Presentation& p, const std::optional<std::string>& text) {
  if (text) {
    ZMap phi = parse_zmap(*text, p.generators);
    validate_zmap(p, phi);
    return phi;
  }
  auto phi = surjection_to_Z(p);
  if (!phi) throw Error(ErrorCode::InvalidZMap, "abelianisation is finite; there is no surjection onto Z");
  return *phi;
}

std::vector<std::vector<std::string>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
  return out;
}

IntMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<std::vector<Integer>> ints;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    std::vector<Integer> row;
    for (const auto& x : r) row.emplace_back(x);
    ints.push_back(std::move(row));
  }
  return IntMatrix::from_rows(ints, cols);
}

std::string abel(const std::string& text) {
  Presentation p = parse_presentation(text);
  auto ev = nontriviality_evidence(p);
  json out{{"abelianisation", report::abelian(ev.abelian)}, {"nontriviality", report::evidence(ev)}};
  return out.dump();
}

std::string certify_json(const std::string& text, const std::optional<std::string>& phi,
                         const std::optional<std::vector<std::string>>& rules) {
  PresentationDocument doc = parse_document(text);
  CertifyOptions opt;
  if (rules) {
    opt.order.clear();
    for (const auto& r : *rules) {
      auto rule = rule_from_name(r);
      if (!rule) throw Error(ErrorCode::Parse, "unknown rule '" + r + "'");
      opt.order.push_back(*rule);
    }
  }
  opt.phi = phi ? std::optional<ZMap>(phi_for(doc.presentation, phi)) : doc.phi;
  return report::certification(certify(doc.presentation, opt), doc.presentation).dump();
}

std::string normalize_json(const std::string& text, const std::optional<std::string>& phi_text) {
  Presentation p = parse_presentation(text);
  ZMap phi = phi_for(p, phi_text);
  return report::rewrite(normalize_to_t(p, phi), p, "normalize", &phi).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Largeness certificates for finitely presented groups with proper-power relators";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> exc;
  exc.call_once_and_store_result([&]() { return py::exception<Error>(m, "LargenessError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(exc.get_stored().ptr(), (std::string(error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("normalize", [](const std::string& text) { return format_presentation(parse_presentation(text)); },
        py::arg("text"));
  m.def("summary", [](const std::string& text) { return report::summary(parse_presentation(text)).dump(); },
        py::arg("text"));
  m.def("abelianisation", &abel, py::arg("text"));
  m.def("spectrum", [](const std::string& text) {
    return report::spectrum(removal_spectrum(parse_presentation(text))).dump();
  }, py::arg("text"));
  m.def("deficiency_bound", [](const std::string& text) {
    return report::bound(deficiency_bound(parse_presentation(text))).dump();
  }, py::arg("text"));
  m.def("certify", &certify_json, py::arg("text"), py::arg("phi") = py::none(), py::arg("rules") = py::none());
  m.def("delta", [](const std::string& text, const std::string& word, const std::optional<std::string>& phi) {
    Presentation p = parse_presentation(text);
    return delta(parse_word(word, p.generators), phi_for(p, phi)).get_str();
  }, py::arg("text"), py::arg("word"), py::arg("phi") = py::none());
  m.def("normalize_to_t", &normalize_json, py::arg("text"), py::arg("phi") = py::none());
  m.def("triangularize", [](const std::string& text) {
    Presentation p = parse_presentation(text);
    return report::rewrite(triangularize(p), p, "triangularize", nullptr).dump();
  }, py::arg("text"));
  m.def("conjugate_rewrite", [](const std::string& text, const std::string& word, const std::optional<std::string>& phi) {
    Presentation p = parse_presentation(text);
    ZMap z = phi_for(p, phi);
    return format_conjugate_word(conjugate_rewrite(parse_word(word, p.generators), z), p.generators);
  }, py::arg("text"), py::arg("word"), py::arg("phi") = py::none());
  m.def("smith_normal_form", [](const std::vector<std::vector<std::string>>& rows) {
    auto s = smith_normal_form(matrix_of(rows));
    std::vector<std::string> f;
    for (const auto& x : s.invariant_factors) f.push_back(x.get_str());
    py::dict d;
    d["U"] = rows_of(s.U);
    d["D"] = rows_of(s.D);
    d["V"] = rows_of(s.V);
    d["invariant_factors"] = f;
    d["rank"] = s.rank;
    return d;
  }, py::arg("rows"));
}
