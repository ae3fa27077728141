#ifndef TANGLEKIT_IO_HPP
#define TANGLEKIT_IO_HPP

#include <string>

#include "json.hpp"

#include "tanglekit/element.hpp"
#include "tanglekit/report.hpp"

namespace tanglekit {

inline constexpr int kTableFormatVersion = 1;

/// Serialized scalar: a list of terms {num, den, pows}, term order canonical.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json kind_to_json(const AlgebraKind& kind);
AlgebraKind kind_from_json(const nlohmann::json& j);

/// Parse the canonical text form produced by DecoratedTangle::str().
DecoratedTangle tangle_from_text(const std::string& text);

nlohmann::json table_to_json(const StructureTable& t);
StructureTable table_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);

/// Hex digest binding a table file to its kind, parameters and format
/// version; load_table rejects files whose digest does not match.
std::string param_hash(const AlgebraKind& kind);

void save_table(const StructureTable& t, const std::string& path);
StructureTable load_table(const std::string& path);

}  // namespace tanglekit

#endif
