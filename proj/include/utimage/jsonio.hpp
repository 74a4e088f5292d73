#pragma once

#include <json.hpp>

#include "utimage/classify.hpp"
#include "utimage/oracle.hpp"
#include "utimage/span.hpp"
#include "utimage/witness.hpp"

namespace utimage {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// {"n": 2, "entries": [["0","1"],["0","0"]]} -- n rows of n canonical scalar
// strings; entries below the diagonal must be exactly "0".
Json matrix_to_json(const UTMatrix& m);
UTMatrix matrix_from_json(const Json& j, const FieldDescriptor& field);

Json decomposition_to_json(const ProperDecomposition& d);
Json certificate_to_json(const Certificate& cert);
Json classification_to_json(const MultilinearPoly& p, std::size_t n,
                            const ClassificationResult& result);
Json witness_to_json(const WitnessTuple& tuple);
Json span_to_json(const SpanResult& result);
Json compare_report_to_json(const CompareReport& report, const FieldDescriptor& field, std::size_t n);
Json containment_report_to_json(const ContainmentReport& report);

}  // namespace utimage
