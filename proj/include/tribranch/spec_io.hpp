#pragma once

#include <json.hpp>
#include <string>

#include "tribranch/complex.hpp"
#include "tribranch/openbook.hpp"

namespace tribranch {

using Json = nlohmann::json;

/// Parses a spec document. Throws SchemaError on malformed JSON or on
/// missing / mistyped fields. Domain checks (matrix sizes, pants
/// invariants) are left to the validators.
OpenBookSpec parse_spec(const std::string& text);

Json spec_to_json(const OpenBookSpec& spec);
Json decomposition_to_json(const PantsDecomposition& pd);
PantsDecomposition decomposition_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);
Json group_to_json(const AbelianGroup& g);

Json complex_to_json(const TribranchedComplex& tc);
Json inventory_to_json(const TribranchedComplex& tc);
Json essentiality_to_json(const EssentialityReport& rep);
Json certificate_to_json(const RankCertificate& cert);
Json validation_to_json(const ValidationReport& rep);

/// Canonical text form used for files and hashes.
std::string dump(const Json& j);

std::string sha256_hex(const std::string& bytes);

}  // namespace tribranch
