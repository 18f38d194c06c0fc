#include "sympgm/json_io.hpp"

namespace sympgm {

using nlohmann::json;

json partition_to_json(const VertexPartition& p) {
    json cells = json::array();
    for (const PartitionCell& c : p.cells)
        cells.push_back({{"id", c.id},
                         {"label", c.label},
                         {"size", c.vertices.size()}});
    json out{{"n", p.n}, {"cells", std::move(cells)}};
    out["designated"] = p.designated ? json(p.cells[*p.designated].label) : json(nullptr);
    return out;
}

json switch_record_to_json(const SwitchRecord& rec, const VertexPartition& p) {
    json flipped = json::array();
    for (int c : rec.flipped_cells) flipped.push_back(p.cells[c].label);
    json out{{"designated", p.cells[rec.designated].label},
             {"flipped_cells", std::move(flipped)},
             {"toggle_count", rec.toggles.size()}};
    if (rec.toggles.size() <= kMaxSerializedToggles) {
        json toggles = json::array();
        for (const auto& [u, v] : rec.toggles) toggles.push_back({u, v});
        out["toggles"] = std::move(toggles);
    }
    return out;
}

json scan_report_to_json(const TripleScanReport& report) {
    json out{{"graph", report.graph_id},
             {"mode", report.exhaustive ? "exhaustive" : "sampled"},
             {"min_nonzero", report.min_nonzero},
             {"witness", report.witness},
             {"zero_triples_seen", report.zero_triples_seen}};
    if (!report.exhaustive) {
        out["samples"] = report.samples;
        out["seed"] = report.seed;
    }
    if (report.histogram) {
        json hist = json::object();
        for (const auto& [count, times] : *report.histogram)
            hist[std::to_string(count)] = times;
        out["histogram"] = std::move(hist);
    }
    return out;
}

json verify_to_json(const VerifySuiteResult& result) {
    json checks = json::array();
    for (const CheckResult& c : result.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return json{{"nu", result.nu}, {"all_pass", result.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace sympgm
