#include "sympgm/switching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sympgm {

namespace {

void check_partition_fits(const SympGraph& g, const VertexPartition& p) {
    if (p.n != g.vertex_count())
        throw std::invalid_argument("partition and graph have different vertex counts");
}

}  // namespace

std::string EquitableCheck::describe() const {
    if (equitable) return "equitable";
    return "vertices " + std::to_string(x) + " and " + std::to_string(xprime) + " of cell " +
           std::to_string(cell_i) + " see " + std::to_string(count_x) + " resp. " +
           std::to_string(count_xprime) + " neighbors in cell " + std::to_string(cell_j);
}

EquitableCheck is_equitable(const SympGraph& g, const VertexPartition& p) {
    check_partition_fits(g, p);
    EquitableCheck out;
    for (const PartitionCell& ci : p.cells) {
        const int x0 = ci.vertices.front();
        std::vector<int> base(p.cells.size());
        for (const PartitionCell& cj : p.cells)
            base[cj.id] = intersection_count(g.row(x0), cj.members);
        for (int x : ci.vertices) {
            if (x == x0) continue;
            for (const PartitionCell& cj : p.cells) {
                int c = intersection_count(g.row(x), cj.members);
                if (c != base[cj.id]) {
                    out.equitable = false;
                    out.cell_i = ci.id;
                    out.cell_j = cj.id;
                    out.x = x0;
                    out.xprime = x;
                    out.count_x = base[cj.id];
                    out.count_xprime = c;
                    return out;
                }
            }
        }
    }
    return out;
}

std::string verdict_name(CellVerdict v) {
    switch (v) {
        case CellVerdict::AllZero: return "all-zero";
        case CellVerdict::AllHalf: return "all-half";
        case CellVerdict::AllFull: return "all-full";
        case CellVerdict::Mixed: return "mixed";
    }
    throw std::logic_error("unreachable");
}

GmCellReport gm_cell_report(const SympGraph& g, const VertexPartition& p, int designated) {
    check_partition_fits(g, p);
    if (designated < 0 || designated >= static_cast<int>(p.cells.size()))
        throw std::invalid_argument("designated cell id out of range");
    GmCellReport report;
    report.designated = designated;
    report.qualifies = true;
    const PartitionCell& d = p.cells[designated];
    for (const PartitionCell& c : p.cells) {
        if (c.id == designated) continue;
        GmCellRelation rel;
        rel.cell = c.id;
        rel.cell_size = static_cast<int>(c.vertices.size());
        for (int x : d.vertices) rel.observed.insert(intersection_count(g.row(x), c.members));
        rel.valid = true;
        for (int v : rel.observed)
            rel.valid &= (v == 0 || v == rel.cell_size || 2 * v == rel.cell_size);
        if (rel.observed.size() == 1) {
            int v = *rel.observed.begin();
            if (v == 0)
                rel.verdict = CellVerdict::AllZero;
            else if (v == rel.cell_size)
                rel.verdict = CellVerdict::AllFull;
            else if (2 * v == rel.cell_size)
                rel.verdict = CellVerdict::AllHalf;
            else
                rel.verdict = CellVerdict::Mixed;
        } else {
            rel.verdict = CellVerdict::Mixed;
        }
        report.qualifies &= rel.valid;
        report.relations.push_back(std::move(rel));
    }
    return report;
}

std::vector<GmCellReport> find_gm_cells(const SympGraph& g, const VertexPartition& p) {
    std::vector<GmCellReport> out;
    for (const PartitionCell& d : p.cells) {
        GmCellReport r = gm_cell_report(g, p, d.id);
        if (r.qualifies) out.push_back(std::move(r));
    }
    return out;
}

SwitchedGraph apply_switch(const SympGraph& g, const VertexPartition& p, int designated) {
    check_partition_fits(g, p);
    if (designated < 0 || designated >= static_cast<int>(p.cells.size()))
        throw std::invalid_argument("designated cell id out of range");

    // The cells other than D must be equitable among themselves.
    for (const PartitionCell& ci : p.cells) {
        if (ci.id == designated) continue;
        const int x0 = ci.vertices.front();
        for (const PartitionCell& cj : p.cells) {
            if (cj.id == designated) continue;
            int base = intersection_count(g.row(x0), cj.members);
            for (int x : ci.vertices) {
                if (intersection_count(g.row(x), cj.members) != base)
                    throw std::invalid_argument(
                        "cells outside the designated one are not equitable: cell " +
                        p.cells[ci.id].label + " against cell " + cj.label);
            }
        }
    }

    const PartitionCell& d = p.cells[designated];
    const std::size_t wpr = g.words_per_row();
    std::vector<std::uint64_t> adj = g.copy_adjacency();
    SwitchRecord record;
    record.designated = designated;
    std::vector<bool> flipped(p.cells.size(), false);

    for (int x : d.vertices) {
        for (const PartitionCell& c : p.cells) {
            if (c.id == designated) continue;
            const int size = static_cast<int>(c.vertices.size());
            const int cnt = intersection_count(g.row(x), c.members);
            if (cnt == 0 || cnt == size) continue;
            if (2 * cnt != size)
                throw std::invalid_argument("vertex " + std::to_string(x) + " has " +
                                            std::to_string(cnt) + " neighbors in cell " + c.label +
                                            " of size " + std::to_string(size) +
                                            "; switching requires 0, half or all");
            flipped[c.id] = true;
            std::uint64_t* rx = adj.data() + static_cast<std::size_t>(x) * wpr;
            for (std::size_t w = 0; w < wpr; ++w) rx[w] ^= c.members.words[w];
            for (int v : c.vertices) {
                adj[static_cast<std::size_t>(v) * wpr + (x >> 6)] ^= std::uint64_t{1} << (x & 63);
                record.toggles.emplace_back(std::min(x, v), std::max(x, v));
            }
        }
    }
    for (const PartitionCell& c : p.cells)
        if (flipped[c.id]) record.flipped_cells.push_back(c.id);
    std::sort(record.toggles.begin(), record.toggles.end());
    return SwitchedGraph{SympGraph(g.vertex_count(), g.nu(), std::move(adj)), std::move(record)};
}

NeighborCountTable neighbor_count_table(const SympGraph& g, const VertexPartition& p) {
    check_partition_fits(g, p);
    NeighborCountTable table;
    table.entries.assign(p.cells.size(), std::vector<NeighborCountEntry>(p.cells.size()));
    for (const PartitionCell& ci : p.cells) {
        for (int x : ci.vertices) {
            for (const PartitionCell& cj : p.cells)
                table.entries[ci.id][cj.id].observed.insert(
                    intersection_count(g.row(x), cj.members));
        }
        for (const PartitionCell& cj : p.cells) {
            NeighborCountEntry& e = table.entries[ci.id][cj.id];
            if (e.observed.size() == 1) {
                e.constant = true;
                e.value = *e.observed.begin();
                int den = static_cast<int>(cj.vertices.size());
                int gcd = std::gcd(e.value, den);
                gcd = gcd == 0 ? 1 : gcd;
                e.frac_num = e.value / gcd;
                e.frac_den = den / gcd;
            }
        }
    }
    return table;
}

}  // namespace sympgm
