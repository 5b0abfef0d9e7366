#pragma once

// Serialization of verification results (JSON and CSV).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sjack/algebra.hpp"
#include "sjack/constants.hpp"

namespace sjack {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// {"min_exp": int, "coeffs": ["12", "3/4", ...]}
Json to_json(const AlphaLaurent& l);
/// Throws std::invalid_argument on a malformed object.
AlphaLaurent laurent_from_json(const Json& j);

/// {"num": [...], "den": [...]} with integer coefficient strings, ascending.
Json to_json(const AlphaRational& r);
AlphaRational rational_from_json(const Json& j);

Json to_json(const ConstantRecord& rec);

struct ReportMetadata {
  int max_mu = 0;
  int max_nu = 0;
  std::vector<BigRat> alpha_samples;
  /// Omitted (null) unless pinned, so repeated runs are byte-identical.
  std::optional<std::string> timestamp;
};

Json report_to_json(const ReportMetadata& meta, const VerifyResult& result);
std::string report_to_csv(const VerifyResult& result);

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

}  // namespace sjack
