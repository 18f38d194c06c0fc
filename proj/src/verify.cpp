#include "sympgm/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "sympgm/graph6.hpp"
#include "sympgm/switching.hpp"

namespace sympgm {

bool VerifySuiteResult::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

std::int64_t multinomial(int n, int a, int b, int c) {
    std::int64_t f[9] = {1};
    for (int i = 1; i <= 8; ++i) f[i] = f[i - 1] * i;
    return f[n] / (f[a] * f[b] * f[c]);
}

struct SuiteBuilder {
    VerifySuiteResult result;

    void add(const std::string& name, bool pass, const std::string& detail) {
        result.checks.push_back(CheckResult{name, pass, detail});
    }
};

// The uniform relation every cell must show against the all-weight-1 cell's
// vertices: half when the cell has a weight-1 block, otherwise full or zero
// by the parity of its weight-2 blocks.
CellVerdict expected_basis_verdict(const OrbitLabelE& lab) {
    if (lab.w1 >= 1) return CellVerdict::AllHalf;
    return (lab.w2 % 2 == 1) ? CellVerdict::AllFull : CellVerdict::AllZero;
}

}  // namespace

VerifySuiteResult run_verify_suite(int nu, const std::optional<SpecialQuadruple>& quad) {
    SuiteBuilder sb;
    sb.result.nu = nu;

    const SympGraph base = build_symplectic(nu);
    const SpecialQuadruple q = quad ? *quad : canonical_quadruple(nu);
    const VertexPartition basis_part = basis_orbit_partition(base);
    const VertexPartition quad_part = quad_orbit_partition(base, q);
    const SrgCertificate want = symplectic_srg_params(nu);

    // Strong regularity of the base graph and every switched variant, with
    // one shared certificate.
    std::map<Variant, FamilyBuild> builds;
    for (Variant v : kScanVariants) builds.emplace(v, build_family(nu, v, q));
    builds.emplace(Variant::AH2Cell, build_family(nu, Variant::AH2Cell, q));
    for (const auto& [v, fb] : builds) {
        SrgCheck check = verify_srg(fb.graph);
        std::ostringstream detail;
        if (check.ok)
            detail << "(" << check.params.n << "," << check.params.k << "," << check.params.lambda
                   << "," << check.params.mu << ")" << (fb.noop ? ", no-op switch" : "");
        else
            detail << check.failure;
        sb.add("srg_" + variant_name(v), check.ok && check.params == want, detail.str());
    }

    sb.add("equitable_basis_partition", is_equitable(base, basis_part).equitable,
           is_equitable(base, basis_part).describe());
    sb.add("equitable_quad_partition", is_equitable(base, quad_part).equitable,
           is_equitable(base, quad_part).describe());

    // Switching cells of the basis partition: exactly one qualifying cell has
    // half relations (the all-weight-1 cell), and its relations follow the
    // half/full/zero rule.
    {
        std::vector<GmCellReport> reports = find_gm_cells(base, basis_part);
        std::vector<int> nontrivial;
        for (const GmCellReport& r : reports) {
            bool has_half = std::any_of(r.relations.begin(), r.relations.end(),
                                        [](const GmCellRelation& rel) {
                                            return rel.verdict == CellVerdict::AllHalf;
                                        });
            if (has_half) nontrivial.push_back(r.designated);
        }
        bool pass = nontrivial.size() == 1 && basis_part.designated &&
                    nontrivial.front() == *basis_part.designated;
        std::ostringstream detail;
        detail << reports.size() << " qualifying cells, " << nontrivial.size()
               << " with half relations";
        if (pass) {
            GmCellReport rep = gm_cell_report(base, basis_part, *basis_part.designated);
            for (const GmCellRelation& rel : rep.relations) {
                OrbitLabelE lab = classify_basis_orbit(
                    base.label(basis_part.cells[rel.cell].vertices.front()));
                if (rel.verdict != expected_basis_verdict(lab)) {
                    pass = false;
                    detail << "; cell " << basis_part.cells[rel.cell].label << " is "
                           << verdict_name(rel.verdict) << ", rule says "
                           << verdict_name(expected_basis_verdict(lab));
                    break;
                }
            }
        }
        sb.add("gm_cells_basis_partition", pass, detail.str());
    }

    // Switching cells of the quadruple partition: S, S0MinusST (when present)
    // and S4 qualify; T and S2 are rejected, S2 against T with the fraction
    // 2/3 that breaks the half rule.
    {
        std::set<std::string> got;
        for (const GmCellReport& r : find_gm_cells(base, quad_part))
            got.insert(quad_part.cells[r.designated].label);
        std::set<std::string> want_cells = {"S", "S4"};
        if (quad_part.cell_id_by_label("S0MinusST")) want_cells.insert("S0MinusST");
        bool pass = got == want_cells;
        std::ostringstream detail;
        detail << "qualifying:";
        for (const std::string& s : got) detail << " " << s;

        const int t_id = *quad_part.cell_id_by_label("T");
        const int s2_id = *quad_part.cell_id_by_label("S2");
        GmCellReport s2_rep = gm_cell_report(base, quad_part, s2_id);
        for (const GmCellRelation& rel : s2_rep.relations) {
            if (rel.cell != t_id) continue;
            // every S2 vertex sees exactly two of the three vertices of T
            bool frac_ok = rel.observed.size() == 1 &&
                           *rel.observed.begin() * 3 == 2 * rel.cell_size && !rel.valid;
            pass &= frac_ok;
            detail << "; S2 sees " << *rel.observed.begin() << "/" << rel.cell_size
                   << " of T (fraction 2/3, not 0, 1/2 or 1)";
        }
        GmCellReport t_rep = gm_cell_report(base, quad_part, t_id);
        bool t_rejected = !t_rep.qualifies;
        pass &= t_rejected;
        sb.add("gm_cells_quad_partition", pass, detail.str());
    }

    // Neighbor fractions along the designated basis cell, all cells at once.
    {
        NeighborCountTable table = neighbor_count_table(base, basis_part);
        const int d = *basis_part.designated;
        bool pass = true;
        std::ostringstream detail;
        for (const PartitionCell& c : basis_part.cells) {
            OrbitLabelE lab = classify_basis_orbit(base.label(c.vertices.front()));
            const NeighborCountEntry& e = table.entries[d][c.id];
            int size = static_cast<int>(c.vertices.size());
            int expect = 0;
            switch (expected_basis_verdict(lab)) {
                case CellVerdict::AllHalf: expect = size / 2; break;
                case CellVerdict::AllFull: expect = size; break;
                default: expect = 0;
            }
            if (!(e.constant && e.value == expect)) {
                pass = false;
                detail << "cell " << c.label << " expected " << expect << "; ";
            }
        }
        if (pass) detail << "all cells follow the half/full/zero rule";
        sb.add("neighbor_fractions_basis", pass, detail.str());
    }

    // Neighbor fractions for the quadruple partition rows S, S4, S0MinusST.
    {
        NeighborCountTable table = neighbor_count_table(base, quad_part);
        auto entry = [&](const std::string& from, const std::string& to) {
            return table.entries[*quad_part.cell_id_by_label(from)]
                                [*quad_part.cell_id_by_label(to)];
        };
        auto cell_size = [&](const std::string& label) {
            return static_cast<int>(
                quad_part.cells[*quad_part.cell_id_by_label(label)].vertices.size());
        };
        auto is_const = [&](const std::string& from, const std::string& to, int v) {
            NeighborCountEntry e = entry(from, to);
            return e.constant && e.value == v;
        };
        bool pass = true;
        pass &= is_const("S", "T", 0);
        pass &= is_const("S", "S4", cell_size("S4"));
        pass &= is_const("S", "S2", cell_size("S2") / 2);
        pass &= is_const("S4", "T", 0);
        pass &= is_const("S4", "S", cell_size("S"));
        pass &= is_const("S4", "S2", cell_size("S2") / 2);
        if (quad_part.cell_id_by_label("S0MinusST")) {
            pass &= is_const("S", "S0MinusST", 0);
            pass &= is_const("S4", "S0MinusST", cell_size("S0MinusST") / 2);
            pass &= is_const("S0MinusST", "S", 0);
            pass &= is_const("S0MinusST", "T", 0);
            pass &= is_const("S0MinusST", "S2", cell_size("S2") / 2);
            pass &= is_const("S0MinusST", "S4", cell_size("S4") / 2);
        }
        sb.add("neighbor_fractions_quad", pass,
               pass ? "rows S, S4, S0MinusST follow the zero/half/full pattern"
                    : "a row deviates from the zero/half/full pattern");
    }

    // Basis cell sizes against the product formula, summing to n.
    {
        bool pass = true;
        std::int64_t total = 0;
        std::ostringstream detail;
        for (const PartitionCell& c : basis_part.cells) {
            OrbitLabelE lab = classify_basis_orbit(base.label(c.vertices.front()));
            std::int64_t expect =
                multinomial(nu, lab.w2, lab.w1, lab.w0) * (std::int64_t{1} << lab.w1);
            total += static_cast<std::int64_t>(c.vertices.size());
            if (expect != static_cast<std::int64_t>(c.vertices.size())) {
                pass = false;
                detail << "cell " << c.label << " has " << c.vertices.size() << ", formula gives "
                       << expect << "; ";
            }
        }
        pass &= total == base.vertex_count();
        if (pass) detail << basis_part.cells.size() << " cells, sizes match and sum to n";
        sb.add("cell_sizes_basis", pass, detail.str());
    }

    // Quadruple cell sizes: closed forms plus the six equal slices of S2.
    {
        auto size_of = [&](const std::string& label) -> std::int64_t {
            auto id = quad_part.cell_id_by_label(label);
            return id ? static_cast<std::int64_t>(quad_part.cells[*id].vertices.size()) : 0;
        };
        const std::int64_t s0_expected = (std::int64_t{1} << (2 * nu - 3)) - 8;
        bool pass = size_of("S") == 4 && size_of("T") == 3 &&
                    size_of("S2") == 3 * (std::int64_t{1} << (2 * nu - 2)) &&
                    size_of("S4") == (std::int64_t{1} << (2 * nu - 3)) &&
                    size_of("S0MinusST") == s0_expected;
        std::map<std::pair<int, int>, std::int64_t> slices;
        for (int v = 1; v <= base.vertex_count(); ++v) {
            OrbitLabelS lab = classify_quad_orbit(base.label(v), q);
            if (lab.kind == OrbitLabelS::Kind::S2) ++slices[{lab.i, lab.j}];
        }
        pass &= slices.size() == 6;
        for (const auto& [pair, count] : slices) pass &= count == size_of("S2") / 6;
        std::ostringstream detail;
        detail << "|S|=" << size_of("S") << " |T|=" << size_of("T")
               << " |S0MinusST|=" << size_of("S0MinusST") << " |S2|=" << size_of("S2")
               << " |S4|=" << size_of("S4") << ", S2 splits into 6 slices of " << size_of("S2") / 6;
        sb.add("cell_sizes_quad", pass, detail.str());
    }

    // Within each basis cell having weight-1 blocks, vectors split evenly by
    // the parity of their lead-bit blocks.
    {
        std::map<std::array<int, 3>, std::array<std::int64_t, 2>> split;
        for (int v = 1; v <= base.vertex_count(); ++v) {
            OrbitLabelE lab = classify_basis_orbit(base.label(v));
            if (lab.w1 == 0) continue;
            ++split[{lab.w2, lab.w1, lab.w0}][lab.lead_parity == BlockParity::Odd ? 1 : 0];
        }
        bool pass = true;
        for (const auto& [key, counts] : split) pass &= counts[0] == counts[1];
        sb.add("even_odd_balance", pass,
               std::to_string(split.size()) + " cells with weight-1 blocks split evenly");
    }

    // Edge double counting between every ordered cell pair, both partitions.
    {
        bool pass = true;
        for (const VertexPartition* part : {&basis_part, &quad_part}) {
            NeighborCountTable table = neighbor_count_table(base, *part);
            for (const PartitionCell& ci : part->cells)
                for (const PartitionCell& cj : part->cells) {
                    const NeighborCountEntry& eij = table.entries[ci.id][cj.id];
                    const NeighborCountEntry& eji = table.entries[cj.id][ci.id];
                    pass &= eij.constant && eji.constant &&
                            static_cast<std::int64_t>(ci.vertices.size()) * eij.value ==
                                static_cast<std::int64_t>(cj.vertices.size()) * eji.value;
                }
        }
        sb.add("edge_double_counting", pass,
               "|C_i| * c_ij == |C_j| * c_ji over all cell pairs of both partitions");
    }

    if (nu <= 5) {
        auto group = basis_stabilizer_group(nu);
        std::int64_t want_size = (std::int64_t{1} << nu);
        for (int i = 2; i <= nu; ++i) want_size *= i;
        VertexPartition closure = orbit_closure(group, nu);
        bool pass = static_cast<std::int64_t>(group.size()) == want_size &&
                    same_cells(closure, basis_part);
        sb.add("orbit_closure_match", pass,
               std::to_string(group.size()) + " stabilizer elements; closure orbits " +
                   (same_cells(closure, basis_part) ? "match" : "differ from") +
                   " the block-weight cells");
    }

    // The quadruple-cell switch and the two-cell switch toggle the same pairs.
    {
        const FamilyBuild& via_s = builds.at(Variant::S);
        const FamilyBuild& via_two = builds.at(Variant::AH2Cell);
        bool pass = via_s.record && via_two.record &&
                    via_s.record->toggles == via_two.record->toggles &&
                    via_s.graph.same_edges(via_two.graph);
        sb.add("two_cell_switch_equality", pass,
               pass ? std::to_string(via_s.record->toggles.size()) +
                          " toggled pairs agree pair for pair"
                    : "toggle sets differ");
    }

    // Switching twice with the same cell restores the original graph.
    {
        bool pass = true;
        std::ostringstream detail;
        for (Variant v : {Variant::S, Variant::O, Variant::S4, Variant::S0MinusST}) {
            const FamilyBuild& fb = builds.at(v);
            if (fb.noop) {
                detail << variant_name(v) << ": no-op; ";
                continue;
            }
            SwitchedGraph again = apply_switch(fb.graph, fb.partition, *fb.designated);
            if (!again.graph.same_edges(fb.base)) {
                pass = false;
                detail << variant_name(v) << ": not restored; ";
            }
        }
        sb.add("switch_involution", pass, detail.str().empty() ? "all variants" : detail.str());
    }

    {
        bool pass = true;
        for (const auto& [v, fb] : builds)
            pass &= graph6_decode(graph6_encode(fb.graph)).same_edges(fb.graph);
        sb.add("graph6_roundtrip", pass, "encode/decode preserves every variant");
    }

    return sb.result;
}

}  // namespace sympgm
