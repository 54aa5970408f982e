#ifndef QCI_SERIALIZE_HPP
#define QCI_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qci/bifrobenius.hpp"
#include "qci/obstructions.hpp"

namespace qci {

using Json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path);

/// Spec documents carry `field`, `a` and `q`; q entries are scalar literals
/// (integers are accepted too).  Shape or syntax problems throw
/// ErrorKind::parse; algebraic violations ErrorKind::invalid_spec.
SpecPtr spec_from_json(const Json& doc);
Json spec_to_json(const AlgebraSpec& spec);

/// Flat `key = value` documents with JSON-compatible values, `#` comments
/// and arrays spanning lines.  Enough for spec files; tables are rejected.
Json parse_toml_subset(const std::string& text);

/// JSON when the first significant character is `{`, otherwise TOML.
SpecPtr load_spec_file(const std::string& path);

Json exponent_to_json(const ExponentVec& v);
ExponentVec exponent_from_json(const Json& doc);

/// {"kind", "field", "a", "q", "coproduct": [{"v", "image": [{"v1","v2","coeff"}]}],
///  "counit": [...], "g": [{"v","value"}]?, "h": [...]?}
Json coproduct_to_json(const CoproductTable& d, const std::optional<GAssignment>& g = std::nullopt);
/// Accepts the document above or a bare `coproduct` array.  Every basis
/// vector must appear exactly once.
CoproductTable coproduct_from_json(const Json& doc, const SpecPtr& spec);
/// Accepts {"g": [...], "h": [...]?} or a bare array of {"v","value"}.
GAssignment g_from_json(const Json& doc, const SpecPtr& spec);
Json g_to_json(const GAssignment& g);

Json check_to_json(const CheckResult& check);
Json report_to_json(const VerificationReport& report);
Json obstruction_to_json(const ObstructionVerdict& verdict, const std::vector<int>& a,
                         std::uint64_t characteristic);

}  // namespace qci

#endif  // QCI_SERIALIZE_HPP
