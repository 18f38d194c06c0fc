#pragma once

#include <json.hpp>

#include "sympgm/family.hpp"
#include "sympgm/partition.hpp"
#include "sympgm/switching.hpp"
#include "sympgm/triples.hpp"
#include "sympgm/verify.hpp"

namespace sympgm {

// Serializers for the report files the command line tool writes.  All object
// keys come out alphabetically sorted, so dumps are byte deterministic.

nlohmann::json partition_to_json(const VertexPartition& p);

// Toggle pairs are listed only up to this count; beyond it the record keeps
// the count alone.
inline constexpr std::size_t kMaxSerializedToggles = std::size_t{1} << 20;

nlohmann::json switch_record_to_json(const SwitchRecord& rec, const VertexPartition& p);

nlohmann::json scan_report_to_json(const TripleScanReport& report);

nlohmann::json verify_to_json(const VerifySuiteResult& result);

}  // namespace sympgm
