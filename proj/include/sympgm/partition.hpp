#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sympgm/graph.hpp"

namespace sympgm {

struct PartitionCell {
    int id = -1;
    std::string label;
    VertexSet members;
    std::vector<int> vertices;  // sorted ascending
};

// Ordered partition of the vertex ids 1..n into labeled cells, optionally
// with one cell designated for switching.
struct VertexPartition {
    int n = 0;
    std::vector<PartitionCell> cells;
    std::vector<int> membership;  // vertex id -> cell id; entry 0 is -1
    std::optional<int> designated;

    int cell_of(int v) const { return membership[v]; }
    std::optional<int> cell_id_by_label(std::string_view label) const;
};

// Builds and validates a partition: cells must be nonempty, disjoint, and
// cover 1..n.
VertexPartition make_partition(int n,
                               std::vector<std::pair<std::string, std::vector<int>>> cells);

// True when both partitions have the same cells as vertex sets, ignoring
// order, labels, and designation.
bool same_cells(const VertexPartition& a, const VertexPartition& b);

enum class BlockParity { None, Even, Odd };

// Orbit label of a nonzero vector under the group fixing the standard basis
// setwise: the number of coordinate blocks of weight 2, 1 and 0, plus the
// parity of the blocks whose set bit is the first of the pair (defined only
// when some block has weight 1).
struct OrbitLabelE {
    int w2 = 0, w1 = 0, w0 = 0;
    BlockParity lead_parity = BlockParity::None;

    friend bool operator==(const OrbitLabelE&, const OrbitLabelE&) = default;
};

OrbitLabelE classify_basis_orbit(const BitVector& x);

std::string basis_orbit_label(int w2, int w1, int w0);  // "O(w2,w1,w0)"

// Cells are the basis-stabilizer orbits, ordered lexicographically by
// (w2,w1,w0); the all-weight-1 cell is designated.
VertexPartition basis_orbit_partition(const SympGraph& g);

// Four vectors v1..v4 with v1,v2,v3 independent, pairwise form 0, and
// v4 = v1+v2+v3.
struct SpecialQuadruple {
    std::array<BitVector, 4> v;
    int dim = 0;
};

SpecialQuadruple canonical_quadruple(int nu);  // {e1, e3, e5, e1+e3+e5}
SpecialQuadruple make_quadruple(int nu, const std::array<std::uint32_t, 4>& vecs);

struct OrbitLabelS {
    enum class Kind { S, T, S0MinusST, S2, S4 };
    Kind kind = Kind::S0MinusST;
    int i = 0, j = 0;  // for S2: the 1-based pair of quadruple indices hit, i < j

    friend bool operator==(const OrbitLabelS&, const OrbitLabelS&) = default;
};

std::string quad_cell_label(OrbitLabelS::Kind kind);

// Classifies x by its form values against the quadruple: all four 1 -> S4,
// exactly two -> S2(i,j), none -> S itself, the three pairwise sums (T), or
// the rest of the orthogonal class.
OrbitLabelS classify_quad_orbit(const BitVector& x, const SpecialQuadruple& q);

// Cells in fixed order S, T, S0MinusST, S2, S4; empty cells are dropped. No
// cell is designated here; callers pick one.
VertexPartition quad_orbit_partition(const SympGraph& g, const SpecialQuadruple& q);

// The two-cell partition {S, V \ S} with the complement designated.
VertexPartition quad_two_cell_partition(const SympGraph& g, const SpecialQuadruple& q);

// All vertex permutations induced by block permutations combined with
// per-block bit swaps; each element is verified to preserve the form and to
// permute the standard basis. Index = vector encoding, entry 0 maps to 0.
// Limited to nu <= 5 (group size nu! * 2^nu).
std::vector<std::vector<std::uint32_t>> basis_stabilizer_group(int nu);

// Orbit partition from explicit permutations by union-find; cells are ordered
// by smallest member.
VertexPartition orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms, int nu);

}  // namespace sympgm
