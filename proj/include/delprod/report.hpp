#ifndef DELPROD_REPORT_HPP
#define DELPROD_REPORT_HPP

#include "delprod/abelian_group.hpp"
#include "delprod/embeddability.hpp"
#include "delprod/gysin.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace delprod {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema_version = 1;

/// {"free_rank", "torsion", "text"}; torsion orders too large for int64 become strings.
Json to_json(const AbelianGroup& g);
AbelianGroup group_from_json(const Json& j);
Json to_json(const std::vector<DegreeGroup>& groups);
Json to_json(const EmbedVerdict& v);
Json to_json(const Lemma1Report& r);
Json to_json(const ConnectivityReport& r);
Json to_json(const std::vector<GysinSegment>& segments, const ExactnessReport& exactness);
Json to_json(const SplittingReport& r);

/// Envelope: schema_version, command, inputs, results, timing_seconds.
Json make_report(const std::string& command, Json inputs, Json results, double seconds);

/// Indented "key: value" rendering of the same document; groups print as their text form.
std::string render_text(const Json& report);

} // namespace delprod

#endif
