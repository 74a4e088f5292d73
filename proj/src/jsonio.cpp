#include "utimage/jsonio.hpp"

namespace utimage {

Json matrix_to_json(const UTMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.dim(); ++j) {
      row.push_back(i <= j ? m.at(i, j).to_string() : "0");
    }
    rows.push_back(std::move(row));
  }
  return Json{{"entries", std::move(rows)}, {"n", m.dim()}};
}

UTMatrix matrix_from_json(const Json& j, const FieldDescriptor& field) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    fail(Errc::ParseError, "matrix JSON needs \"n\" and \"entries\"");
  }
  std::size_t n = j.at("n").get<std::size_t>();
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != n) {
    fail(Errc::ParseError, "matrix JSON needs " + std::to_string(n) + " rows");
  }
  UTMatrix m(n, field);
  for (std::size_t i = 1; i <= n; ++i) {
    const Json& row = rows[i - 1];
    if (!row.is_array() || row.size() != n) {
      fail(Errc::ParseError, "matrix row " + std::to_string(i) + " needs " + std::to_string(n) +
                                 " entries");
    }
    for (std::size_t jcol = 1; jcol <= n; ++jcol) {
      std::string text = row[jcol - 1].get<std::string>();
      if (i > jcol) {
        if (text != "0") {
          fail(Errc::NotUpperTriangular, "entry (" + std::to_string(i) + "," +
                                             std::to_string(jcol) + ") below the diagonal is '" +
                                             text + "'");
        }
        continue;
      }
      m.set(i, jcol, Scalar::parse(text, field));
    }
  }
  return m;
}

Json decomposition_to_json(const ProperDecomposition& d) {
  Json out;
  auto values = d.all();
  auto names = ProperDecomposition::names();
  for (std::size_t k = 0; k < 9; ++k) out[names[k]] = values[k]->to_string();
  return out;
}

namespace {

Json perm_to_json(const Perm& p) {
  Json out = Json::array();
  for (std::uint8_t v : p) out.push_back(int(v));
  return out;
}

struct CertJson {
  Json operator()(const ZeroPolyCert&) const { return Json{{"branch", "zero_poly"}}; }
  Json operator()(const CoeffSumCert& c) const {
    return Json{{"branch", "coeff_sum_nonzero"}, {"sum", c.sum.to_string()}};
  }
  Json operator()(const CommutatorCert& c) const {
    return Json{{"branch", "commutator"}, {"gamma", c.gamma.to_string()}};
  }
  Json operator()(const IdentitySubstitutionCert& c) const {
    return Json{{"branch", "identity_substitution"},
                {"slot", c.slot},
                {"reduced_poly", c.reduced.to_string()},
                {"reduced", certificate_to_json(c.inner->certificate)}};
  }
  Json operator()(const Lie3Cert& c) const {
    return Json{{"branch", "lie3"},
                {"renaming", perm_to_json(c.renaming)},
                {"alpha2", c.canonical.to_string()},
                {"alpha3", c.other.to_string()}};
  }
  Json operator()(const TripleBracketCert& c) const {
    return Json{{"branch", "triple_bracket"},
                {"slot", c.slot},
                {"coefficient", c.coefficient.to_string()}};
  }
  Json operator()(const Case1Cert& c) const {
    return Json{{"branch", "case1"}, {"alpha", c.alpha.to_string()}};
  }
  Json operator()(const Case2Cert& c) const {
    return Json{{"branch", "case2"},
                {"pattern", c.pattern.pattern},
                {"mu", c.pattern.mu.to_string()},
                {"nu", c.pattern.nu.to_string()},
                {"lambda", c.pattern.lambda.to_string()},
                {"swapped", c.pattern.swapped},
                {"renaming", perm_to_json(c.renaming)}};
  }
};

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json out = std::visit(CertJson{}, cert.branch);
  if (cert.decomposition) out["decomposition"] = decomposition_to_json(*cert.decomposition);
  return out;
}

Json classification_to_json(const MultilinearPoly& p, std::size_t n,
                            const ClassificationResult& result) {
  return Json{{"degree", p.degree()},
              {"n", n},
              {"field", p.field().to_string()},
              {"class", result.image.name()},
              {"certificate", certificate_to_json(result.certificate)}};
}

Json witness_to_json(const WitnessTuple& tuple) {
  Json inputs = Json::array();
  for (const UTMatrix& m : tuple.inputs) inputs.push_back(matrix_to_json(m));
  return Json{{"inputs", std::move(inputs)}, {"verified", tuple.verified}};
}

Json span_to_json(const SpanResult& result) {
  Json span;
  if (result.is_zero) {
    span = "zero";
  } else {
    span = Json{{"level", result.level}};
  }
  return Json{{"span", std::move(span)}, {"tuples_scanned", result.tuples_scanned}};
}

Json compare_report_to_json(const CompareReport& report, const FieldDescriptor& field,
                            std::size_t n) {
  Json examples_img = Json::array();
  for (std::uint64_t code : report.image_not_class) {
    examples_img.push_back(matrix_to_json(decode_matrix(code, n, field)));
  }
  Json examples_cls = Json::array();
  for (std::uint64_t code : report.class_not_image) {
    examples_cls.push_back(matrix_to_json(decode_matrix(code, n, field)));
  }
  return Json{{"class", report.classified.name()},
              {"class_size", report.class_size},
              {"image_size", report.image_size},
              {"equals_classification", report.equal},
              {"image_not_class", std::move(examples_img)},
              {"class_not_image", std::move(examples_cls)}};
}

Json containment_report_to_json(const ContainmentReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json inputs = Json::array();
    for (const UTMatrix& m : v.inputs) inputs.push_back(matrix_to_json(m));
    violations.push_back(Json{{"inputs", std::move(inputs)}, {"value", matrix_to_json(v.value)}});
  }
  return Json{{"class", report.classified.name()},
              {"trials", report.trials},
              {"violation_count", report.violation_count},
              {"violations", std::move(violations)}};
}

}  // namespace utimage
