#include <doctest.h>

#include "sympgm/family.hpp"
#include "sympgm/json_io.hpp"
#include "sympgm/verify.hpp"

using namespace sympgm;
using nlohmann::json;

TEST_CASE("partition reports carry cells, sizes and the designated label") {
    SympGraph g = build_symplectic(3);
    VertexPartition p = basis_orbit_partition(g);
    json doc = partition_to_json(p);
    CHECK(doc["n"] == 63);
    CHECK(doc["designated"] == "O(0,3,0)");
    REQUIRE(doc["cells"].is_array());
    CHECK(doc["cells"].size() == p.cells.size());
    std::int64_t total = 0;
    for (const json& cell : doc["cells"]) {
        CHECK(cell.contains("id"));
        CHECK(cell.contains("label"));
        total += cell["size"].get<std::int64_t>();
    }
    CHECK(total == 63);

    VertexPartition q = quad_orbit_partition(g, canonical_quadruple(3));
    CHECK(partition_to_json(q)["designated"].is_null());
}

TEST_CASE("switch records serialize designated cell, flips and toggles") {
    FamilyBuild fb = build_family(3, Variant::S);
    REQUIRE(fb.record.has_value());
    json doc = switch_record_to_json(*fb.record, fb.partition);
    CHECK(doc["designated"] == "S");
    CHECK(doc["toggle_count"] == fb.record->toggles.size());
    REQUIRE(doc.contains("toggles"));
    CHECK(doc["toggles"].size() == fb.record->toggles.size());
    CHECK(doc["toggles"][0].size() == 2);
    bool s2_flipped = false;
    for (const json& label : doc["flipped_cells"]) s2_flipped |= label == "S2";
    CHECK(s2_flipped);
}

TEST_CASE("scan reports keep sampling metadata and stringify histogram keys") {
    TripleScanReport r;
    r.graph_id = "g";
    r.exhaustive = false;
    r.samples = 10;
    r.seed = 7;
    r.min_nonzero = 4;
    r.witness = {1, 2, 5};
    r.zero_triples_seen = true;
    r.histogram = std::map<int, std::uint64_t>{{0, 3}, {4, 7}};
    json doc = scan_report_to_json(r);
    CHECK(doc["mode"] == "sampled");
    CHECK(doc["samples"] == 10);
    CHECK(doc["seed"] == 7);
    CHECK(doc["witness"] == json::array({1, 2, 5}));
    CHECK(doc["histogram"]["0"] == 3);
    CHECK(doc["histogram"]["4"] == 7);

    r.exhaustive = true;
    json doc2 = scan_report_to_json(r);
    CHECK(doc2["mode"] == "exhaustive");
    CHECK_FALSE(doc2.contains("samples"));
    CHECK_FALSE(doc2.contains("seed"));
}

TEST_CASE("verify reports mirror the suite outcome") {
    VerifySuiteResult result;
    result.nu = 3;
    result.checks.push_back({"alpha", true, "fine"});
    result.checks.push_back({"beta", false, "broken"});
    json doc = verify_to_json(result);
    CHECK(doc["nu"] == 3);
    CHECK(doc["all_pass"] == false);
    CHECK(doc["checks"].size() == 2);
    CHECK(doc["checks"][1]["name"] == "beta");
    CHECK(doc["checks"][1]["pass"] == false);
}

TEST_CASE("dumps are byte deterministic") {
    FamilyBuild fb = build_family(3, Variant::S);
    ScanSettings settings;
    settings.graph_id = fb.graph_id;
    settings.histogram = true;
    std::string a = scan_report_to_json(scan_min_nonzero(fb.graph, settings)).dump(2);
    settings.threads = 3;
    std::string b = scan_report_to_json(scan_min_nonzero(fb.graph, settings)).dump(2);
    CHECK(a == b);

    std::string pa = partition_to_json(fb.partition).dump();
    std::string pb = partition_to_json(build_family(3, Variant::S).partition).dump();
    CHECK(pa == pb);
}
