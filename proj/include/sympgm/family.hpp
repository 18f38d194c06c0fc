#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympgm/graph.hpp"
#include "sympgm/partition.hpp"
#include "sympgm/switching.hpp"
#include "sympgm/triples.hpp"

namespace sympgm {

// One member of the cospectral family: the base graph, the partition the
// variant switches against, and the switched graph with its record. A variant
// whose designated cell is empty at this nu degenerates to a no-op switch
// (graph == base, no record), flagged with noop.
struct FamilyBuild {
    int nu = 0;
    Variant variant = Variant::Base;
    std::string graph_id;
    SympGraph base;
    SympGraph graph;
    VertexPartition partition;
    std::optional<int> designated;
    std::optional<SwitchRecord> record;
    bool noop = false;
    SpecialQuadruple quad;
};

std::string family_graph_id(int nu, Variant v);

// Builds the requested variant; the quadruple defaults to the canonical one.
FamilyBuild build_family(int nu, Variant v,
                         const std::optional<SpecialQuadruple>& quad = std::nullopt);

// Scan of all five family members with one settings template (graph_id is
// filled per member).
struct FamilyScan {
    int nu = 0;
    std::vector<std::pair<Variant, TripleScanReport>> reports;
    std::vector<std::string> flags;       // degeneracies worth surfacing
    bool pairwise_distinct = false;       // the five minima differ pairwise
    bool asserted = false;                // closed forms asserted (nu >= 4)
    bool matches_expected = false;        // meaningful when asserted
};

FamilyScan scan_family(int nu, const ScanSettings& settings);

}  // namespace sympgm
