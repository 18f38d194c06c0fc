#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sympgm/graph.hpp"
#include "sympgm/partition.hpp"

namespace sympgm {

struct EquitableCheck {
    bool equitable = true;
    // Witness when not: vertices x and xprime of cell_i see count_x resp.
    // count_xprime neighbors in cell_j.
    int cell_i = -1, cell_j = -1, x = 0, xprime = 0, count_x = 0, count_xprime = 0;

    std::string describe() const;
};

EquitableCheck is_equitable(const SympGraph& g, const VertexPartition& p);

enum class CellVerdict { AllZero, AllHalf, AllFull, Mixed };

std::string verdict_name(CellVerdict v);

// Relation of a candidate designated cell D to one other cell C: the set of
// values |N(x) cap C| over x in D. valid means every value is 0, |C|/2 or
// |C|, which is what the switch requires; the verdict summarizes the uniform
// cases.
struct GmCellRelation {
    int cell = -1;
    int cell_size = 0;
    std::set<int> observed;
    CellVerdict verdict = CellVerdict::Mixed;
    bool valid = false;
};

struct GmCellReport {
    int designated = -1;
    bool qualifies = false;  // all relations valid
    std::vector<GmCellRelation> relations;
};

GmCellReport gm_cell_report(const SympGraph& g, const VertexPartition& p, int designated);

// Reports for every cell that qualifies as a designated switching cell.
std::vector<GmCellReport> find_gm_cells(const SympGraph& g, const VertexPartition& p);

struct SwitchRecord {
    int designated = -1;
    std::vector<int> flipped_cells;             // cells with at least one toggled vertex
    std::vector<std::pair<int, int>> toggles;   // unordered pairs, u < v, sorted
};

struct SwitchedGraph {
    SympGraph graph;
    SwitchRecord record;
};

// Switches g with respect to the partition and designated cell D: adjacency
// between x in D and a cell C is interchanged exactly when x has |C|/2
// neighbors in C. Requires the cells other than D to be equitable among
// themselves and every (x, C) count to be 0, |C|/2 or |C|; violations throw
// with the offending vertex and cell named.
SwitchedGraph apply_switch(const SympGraph& g, const VertexPartition& p, int designated);

// Observed values |N(x) cap C_j| over x in C_i, for every ordered cell pair,
// plus the reduced fraction value/|C_j| when the value is constant.
struct NeighborCountEntry {
    std::set<int> observed;
    bool constant = false;
    int value = -1;           // when constant
    int frac_num = 0, frac_den = 1;  // value/|C_j| reduced, when constant
};

struct NeighborCountTable {
    std::vector<std::vector<NeighborCountEntry>> entries;  // [from][to]
};

NeighborCountTable neighbor_count_table(const SympGraph& g, const VertexPartition& p);

}  // namespace sympgm
