#include <doctest.h>

#include <stdexcept>
#include <algorithm>
#include <set>

#include "sympgm/partition.hpp"
#include "sympgm/switching.hpp"

using namespace sympgm;

TEST_CASE("equitability checks") {
    SympGraph g = build_symplectic(3);
    CHECK(is_equitable(g, basis_orbit_partition(g)).equitable);
    CHECK(is_equitable(g, quad_orbit_partition(g, canonical_quadruple(3))).equitable);
    // the two-cell partition is not equitable (counts against S vary over the
    // complement), yet it still switches: only the cells outside the
    // designated one must be equitable among themselves
    CHECK_FALSE(is_equitable(g, quad_two_cell_partition(g, canonical_quadruple(3))).equitable);

    SympGraph p3 = graph_from_edges(3, {{1, 2}, {2, 3}});
    EquitableCheck bad = is_equitable(p3, make_partition(3, {{"a", {1, 2}}, {"b", {3}}}));
    CHECK_FALSE(bad.equitable);
    CHECK(bad.cell_i == 0);
    CHECK(bad.cell_j == 1);
    CHECK(bad.describe().find("cell") != std::string::npos);

    CHECK(is_equitable(p3, make_partition(3, {{"ends", {1, 3}}, {"mid", {2}}})).equitable);
}

TEST_CASE("the all-weight-1 cell is the only basis cell with half relations") {
    for (int nu : {3, 4}) {
        SympGraph g = build_symplectic(nu);
        VertexPartition p = basis_orbit_partition(g);
        auto reports = find_gm_cells(g, p);

        std::set<std::string> with_half, qualifying;
        for (const GmCellReport& r : reports) {
            qualifying.insert(p.cells[r.designated].label);
            for (const GmCellRelation& rel : r.relations)
                if (rel.verdict == CellVerdict::AllHalf)
                    with_half.insert(p.cells[r.designated].label);
        }
        CHECK(with_half == std::set<std::string>{basis_orbit_label(0, nu, 0)});
        // the all-full vector's singleton cell qualifies too, trivially: every
        // relation is all-zero or all-full, so switching it does nothing
        CHECK(qualifying ==
              std::set<std::string>{basis_orbit_label(0, nu, 0), basis_orbit_label(nu, 0, 0)});

        // relations of the designated cell: half iff the other cell has a
        // weight-1 block, else full/zero by the parity of weight-2 blocks
        GmCellReport rep = gm_cell_report(g, p, *p.designated);
        CHECK(rep.qualifies);
        for (const GmCellRelation& rel : rep.relations) {
            OrbitLabelE lab = classify_basis_orbit(g.label(p.cells[rel.cell].vertices.front()));
            CellVerdict want = lab.w1 >= 1 ? CellVerdict::AllHalf
                               : lab.w2 % 2 ? CellVerdict::AllFull
                                            : CellVerdict::AllZero;
            CHECK(rel.verdict == want);
        }
    }
}

TEST_CASE("quadruple cells qualify as S, S0MinusST, S4 and nothing else") {
    for (int nu : {3, 4}) {
        SympGraph g = build_symplectic(nu);
        VertexPartition p = quad_orbit_partition(g, canonical_quadruple(nu));
        std::set<std::string> got;
        for (const GmCellReport& r : find_gm_cells(g, p)) got.insert(p.cells[r.designated].label);
        std::set<std::string> want = {"S", "S4"};
        if (nu >= 4) want.insert("S0MinusST");
        CHECK(got == want);

        // T fails through its S2 relation, and S2 fails against T: both sit at
        // fraction 2/3, which no switch tolerates
        GmCellReport t_rep = gm_cell_report(g, p, *p.cell_id_by_label("T"));
        CHECK_FALSE(t_rep.qualifies);
        for (const GmCellRelation& rel : t_rep.relations)
            if (rel.cell == *p.cell_id_by_label("S2")) {
                CHECK_FALSE(rel.valid);
                CHECK(*rel.observed.begin() * 3 == rel.cell_size * 2);
            }
        GmCellReport s2_rep = gm_cell_report(g, p, *p.cell_id_by_label("S2"));
        CHECK_FALSE(s2_rep.qualifies);
        for (const GmCellRelation& rel : s2_rep.relations)
            if (rel.cell == *p.cell_id_by_label("T")) CHECK(rel.observed == std::set<int>{2});
    }
}

TEST_CASE("switching on S toggles exactly the S x S2 pairs") {
    for (int nu : {3, 4}) {
        SympGraph g = build_symplectic(nu);
        SpecialQuadruple q = canonical_quadruple(nu);
        VertexPartition p = quad_orbit_partition(g, q);
        SwitchedGraph sw = apply_switch(g, p, *p.cell_id_by_label("S"));

        std::vector<std::pair<int, int>> want;
        for (int s : p.cells[*p.cell_id_by_label("S")].vertices)
            for (int x : p.cells[*p.cell_id_by_label("S2")].vertices)
                want.emplace_back(std::min(s, x), std::max(s, x));
        std::sort(want.begin(), want.end());
        CHECK(sw.record.toggles == want);

        // switching preserves degrees and strong regularity, and the edge
        // difference against the base is exactly the toggle list
        for (int v = 1; v <= g.vertex_count(); ++v) CHECK(sw.graph.degree(v) == g.degree(v));
        CHECK(verify_srg(sw.graph).ok);
        CHECK(edge_difference(g, sw.graph) == want);

        // switching twice restores the base graph
        CHECK(apply_switch(sw.graph, p, *p.cell_id_by_label("S")).graph.same_edges(g));
    }
}

TEST_CASE("the two-cell form of the S switch produces the same graph") {
    for (int nu : {3, 4}) {
        SympGraph g = build_symplectic(nu);
        SpecialQuadruple q = canonical_quadruple(nu);
        VertexPartition orbit = quad_orbit_partition(g, q);
        VertexPartition two = quad_two_cell_partition(g, q);
        SwitchedGraph a = apply_switch(g, orbit, *orbit.cell_id_by_label("S"));
        SwitchedGraph b = apply_switch(g, two, *two.designated);
        CHECK(a.graph.same_edges(b.graph));
        CHECK(a.record.toggles == b.record.toggles);
    }
}

TEST_CASE("switching rejects cells that sit at forbidden fractions") {
    SympGraph g = build_symplectic(3);
    VertexPartition p = quad_orbit_partition(g, canonical_quadruple(3));
    CHECK_THROWS_WITH_AS(apply_switch(g, p, *p.cell_id_by_label("T")),
                         doctest::Contains("requires 0, half or all"), std::invalid_argument);
    CHECK_THROWS_AS(apply_switch(g, p, *p.cell_id_by_label("S2")), std::invalid_argument);
}

TEST_CASE("switching requires the other cells to stay equitable among themselves") {
    // path 1-2-3-4 with cells {1} and {2,3,4}: inside the big cell vertex 3
    // has two neighbors while 2 and 4 have one
    SympGraph path = graph_from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
    VertexPartition p = make_partition(4, {{"d", {1}}, {"rest", {2, 3, 4}}});
    CHECK_THROWS_WITH_AS(apply_switch(path, p, 0), doctest::Contains("not equitable"),
                         std::invalid_argument);
}

TEST_CASE("neighbor count table carries constants and reduced fractions") {
    SympGraph g = build_symplectic(4);
    VertexPartition p = quad_orbit_partition(g, canonical_quadruple(4));
    NeighborCountTable t = neighbor_count_table(g, p);
    auto id = [&](const char* label) { return *p.cell_id_by_label(label); };

    const NeighborCountEntry& s_to_s4 = t.entries[id("S")][id("S4")];
    CHECK(s_to_s4.constant);
    CHECK(s_to_s4.frac_num == 1);
    CHECK(s_to_s4.frac_den == 1);

    const NeighborCountEntry& s_to_s2 = t.entries[id("S")][id("S2")];
    CHECK(s_to_s2.constant);
    CHECK(s_to_s2.frac_num == 1);
    CHECK(s_to_s2.frac_den == 2);

    const NeighborCountEntry& s2_to_t = t.entries[id("S2")][id("T")];
    CHECK(s2_to_t.constant);
    CHECK(s2_to_t.value == 2);
    CHECK(s2_to_t.frac_num == 2);
    CHECK(s2_to_t.frac_den == 3);

    const NeighborCountEntry& s_to_t = t.entries[id("S")][id("T")];
    CHECK(s_to_t.constant);
    CHECK(s_to_t.value == 0);

    // edge double counting across every cell pair
    for (const PartitionCell& ci : p.cells)
        for (const PartitionCell& cj : p.cells) {
            const NeighborCountEntry& eij = t.entries[ci.id][cj.id];
            const NeighborCountEntry& eji = t.entries[cj.id][ci.id];
            REQUIRE(eij.constant);
            CHECK(static_cast<std::int64_t>(ci.vertices.size()) * eij.value ==
                  static_cast<std::int64_t>(cj.vertices.size()) * eji.value);
        }
}

TEST_CASE("switching on the all-weight-1 basis cell") {
    SympGraph g = build_symplectic(3);
    VertexPartition p = basis_orbit_partition(g);
    SwitchedGraph sw = apply_switch(g, p, *p.designated);
    CHECK_FALSE(sw.record.toggles.empty());
    CHECK(verify_srg(sw.graph).ok);
    CHECK(verify_srg(sw.graph).params == symplectic_srg_params(3));
    // every toggle touches the designated cell
    const PartitionCell& d = p.cells[*p.designated];
    for (auto [u, v] : sw.record.toggles) CHECK((d.members.contains(u) || d.members.contains(v)));
    // and no toggle stays inside it
    for (auto [u, v] : sw.record.toggles)
        CHECK_FALSE((d.members.contains(u) && d.members.contains(v)));
}

TEST_CASE("switching the all-full singleton changes nothing") {
    SympGraph g = build_symplectic(3);
    VertexPartition p = basis_orbit_partition(g);
    SwitchedGraph sw = apply_switch(g, p, *p.cell_id_by_label(basis_orbit_label(3, 0, 0)));
    CHECK(sw.record.toggles.empty());
    CHECK(sw.graph.same_edges(g));
}
