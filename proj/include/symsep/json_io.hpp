#ifndef SYMSEP_JSON_IO_HPP
#define SYMSEP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "symsep/norms.hpp"
#include "symsep/separation.hpp"
#include "symsep/tsirelson.hpp"

namespace symsep {

/// Vectors serialise as {"index": value, ...} with decimal string keys.
/// Deserialisation rejects non-positive, non-numeric, or duplicate indices.
nlohmann::json toJson(const CoordVector& x);
CoordVector coordVectorFromJson(const nlohmann::json& j);

nlohmann::json toJson(const BiorthogonalSystem& s);
BiorthogonalSystem biorthogonalSystemFromJson(const nlohmann::json& j);

/// Descriptors carry a "kind" discriminator.
nlohmann::json toJson(const NormDescriptor& d);
NormDescriptor normDescriptorFromJson(const nlohmann::json& j);

nlohmann::json toJson(const SeparationReport& r);

nlohmann::json toJson(const TsirelsonCertificate& c);

/// CLI norm specs: "lp:<p>", "sup", "tsirelson", "auerbach:<file>",
/// "phi:<file>:<eps>"; the files hold {"base": descriptor, "system": system}.
NormDescriptor parseNormSpec(const std::string& spec);

}  // namespace symsep

#endif
