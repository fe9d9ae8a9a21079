#pragma once

// JSON formats. Exact numbers are decimal strings, coset and vertex numbers
// are 1-based, words use the text syntax of words.hpp.
//
//   subgroup   {"rank": n, "generators": ["aaaa", "aB", ...]}
//              {"rank": n, "permutations": [[2, 3, 1], ...], "basepoint": 1}
//   partition  {"rank": n, "members": [{"subgroup": {...}, "coset_rep": "ab"}, ...]}
//              (a member's subgroup may omit "rank")
//   Z family   {"moduli": [[d, r], ...]}
//
// Every parse function throws ParseError with a 1-based line and column.

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fgcover/analysis.hpp"
#include "fgcover/partition.hpp"
#include "fgcover/zcover.hpp"

namespace fgc::io {

using Json = nlohmann::ordered_json;

enum class InputKind { Subgroup, Partition, ZFamily };

/// Sniffs the top-level keys. Throws ParseError for malformed JSON or an
/// object of no known shape.
InputKind detect_kind(std::string_view text);

std::shared_ptr<const SchreierGraph> parse_subgroup(std::string_view text);
PartitionSpec parse_partition(std::string_view text);
ZCoveringSpec parse_z_family(std::string_view text);

/// Members are written with canonical 1-based permutations; members sharing
/// a subgroup repeat it. `meta` entries are appended verbatim.
Json partition_to_json(const PartitionSpec& spec, const Json& meta = Json::object());
Json subgroup_to_json(const SchreierGraph& graph);
Json z_family_to_json(const ZCoveringSpec& spec);

Json to_json(const IntPolynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const CycloNumber& c);
IntPolynomial polynomial_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);
CycloNumber cyclo_from_json(const Json& j);

Json report_to_json(const AnalysisReport& r);
Json report_to_json(const SubgroupReport& r);
Json report_to_json(const ZAnalysisReport& r);
AnalysisReport analysis_report_from_json(std::string_view text);
SubgroupReport subgroup_report_from_json(std::string_view text);
ZAnalysisReport z_report_from_json(std::string_view text);

/// Text rendering for terminals.
std::string to_text(const AnalysisReport& r);
std::string to_text(const SubgroupReport& r);
std::string to_text(const ZAnalysisReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace fgc::io
