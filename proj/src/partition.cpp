#include "sympgm/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sympgm {

std::optional<int> VertexPartition::cell_id_by_label(std::string_view label) const {
    for (const PartitionCell& c : cells)
        if (c.label == label) return c.id;
    return std::nullopt;
}

VertexPartition make_partition(int n,
                               std::vector<std::pair<std::string, std::vector<int>>> cells) {
    VertexPartition p;
    p.n = n;
    p.membership.assign(static_cast<std::size_t>(n) + 1, -1);
    for (auto& [label, verts] : cells) {
        if (verts.empty()) throw std::invalid_argument("cell '" + label + "' is empty");
        PartitionCell cell;
        cell.id = static_cast<int>(p.cells.size());
        cell.label = label;
        cell.members = VertexSet::empty(n);
        std::sort(verts.begin(), verts.end());
        for (int v : verts) {
            if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range in cell");
            if (p.membership[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two cells");
            p.membership[v] = cell.id;
            cell.members.add(v);
        }
        cell.vertices = std::move(verts);
        p.cells.push_back(std::move(cell));
    }
    for (int v = 1; v <= n; ++v)
        if (p.membership[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is in no cell");
    return p;
}

bool same_cells(const VertexPartition& a, const VertexPartition& b) {
    if (a.n != b.n || a.cells.size() != b.cells.size()) return false;
    auto canon = [](const VertexPartition& p) {
        std::vector<std::vector<int>> cs;
        cs.reserve(p.cells.size());
        for (const PartitionCell& c : p.cells) cs.push_back(c.vertices);
        std::sort(cs.begin(), cs.end());
        return cs;
    };
    return canon(a) == canon(b);
}

OrbitLabelE classify_basis_orbit(const BitVector& x) {
    if (x.bits == 0) throw std::invalid_argument("the zero vector lies in no orbit");
    OrbitLabelE lab;
    int lead = 0;
    for (int l = 0; l < x.dim / 2; ++l) {
        switch ((x.bits >> (2 * l)) & 3u) {
            case 0: ++lab.w0; break;
            case 1: ++lab.w1; ++lead; break;
            case 2: ++lab.w1; break;
            case 3: ++lab.w2; break;
        }
    }
    if (lab.w1 > 0) lab.lead_parity = (lead & 1) ? BlockParity::Odd : BlockParity::Even;
    return lab;
}

std::string basis_orbit_label(int w2, int w1, int w0) {
    return "O(" + std::to_string(w2) + "," + std::to_string(w1) + "," + std::to_string(w0) + ")";
}

VertexPartition basis_orbit_partition(const SympGraph& g) {
    if (!g.labeled()) throw std::invalid_argument("orbit partition needs a vector-labeled graph");
    const int nu = g.nu();
    std::map<std::array<int, 3>, std::vector<int>> orbits;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        OrbitLabelE lab = classify_basis_orbit(g.label(v));
        orbits[{lab.w2, lab.w1, lab.w0}].push_back(v);
    }
    std::vector<std::pair<std::string, std::vector<int>>> cells;
    cells.reserve(orbits.size());
    for (auto& [key, verts] : orbits)
        cells.emplace_back(basis_orbit_label(key[0], key[1], key[2]), std::move(verts));
    VertexPartition p = make_partition(g.vertex_count(), std::move(cells));
    p.designated = p.cell_id_by_label(basis_orbit_label(0, nu, 0));
    return p;
}

namespace {

void validate_quadruple(const SpecialQuadruple& q) {
    for (const BitVector& v : q.v) {
        if (v.dim != q.dim) throw std::invalid_argument("quadruple entries have mixed dimensions");
        if (v.bits == 0) throw std::invalid_argument("quadruple entries must be nonzero");
    }
    if ((q.v[0] ^ q.v[1] ^ q.v[2]).bits != q.v[3].bits)
        throw std::invalid_argument("fourth entry must be the sum of the first three");
    if (rank(make_matrix({q.v[0], q.v[1], q.v[2]})) != 3)
        throw std::invalid_argument("first three quadruple entries must be independent");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (symp_form(q.v[i], q.v[j]) != 0)
                throw std::invalid_argument("quadruple entries " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " have form value 1");
}

}  // namespace

SpecialQuadruple canonical_quadruple(int nu) {
    const int dim = 2 * nu;
    SpecialQuadruple q;
    q.dim = dim;
    q.v[0] = basis_vector(1, dim);
    q.v[1] = basis_vector(3, dim);
    q.v[2] = basis_vector(5, dim);
    q.v[3] = q.v[0] ^ q.v[1] ^ q.v[2];
    validate_quadruple(q);
    return q;
}

SpecialQuadruple make_quadruple(int nu, const std::array<std::uint32_t, 4>& vecs) {
    const int dim = 2 * nu;
    SpecialQuadruple q;
    q.dim = dim;
    for (int i = 0; i < 4; ++i) q.v[i] = make_vector(vecs[i], dim);
    validate_quadruple(q);
    return q;
}

std::string quad_cell_label(OrbitLabelS::Kind kind) {
    switch (kind) {
        case OrbitLabelS::Kind::S: return "S";
        case OrbitLabelS::Kind::T: return "T";
        case OrbitLabelS::Kind::S0MinusST: return "S0MinusST";
        case OrbitLabelS::Kind::S2: return "S2";
        case OrbitLabelS::Kind::S4: return "S4";
    }
    throw std::logic_error("unreachable");
}

OrbitLabelS classify_quad_orbit(const BitVector& x, const SpecialQuadruple& q) {
    if (x.bits == 0) throw std::invalid_argument("the zero vector lies in no orbit");
    int f[4];
    int hits = 0;
    for (int i = 0; i < 4; ++i) {
        f[i] = symp_form(x, q.v[i]);
        hits += f[i];
    }
    OrbitLabelS lab;
    switch (hits) {
        case 4:
            lab.kind = OrbitLabelS::Kind::S4;
            return lab;
        case 2: {
            lab.kind = OrbitLabelS::Kind::S2;
            int idx[2], k = 0;
            for (int i = 0; i < 4; ++i)
                if (f[i]) idx[k++] = i + 1;
            lab.i = idx[0];
            lab.j = idx[1];
            return lab;
        }
        case 0: {
            for (const BitVector& v : q.v)
                if (x == v) {
                    lab.kind = OrbitLabelS::Kind::S;
                    return lab;
                }
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (x == (q.v[i] ^ q.v[j])) {
                        lab.kind = OrbitLabelS::Kind::T;
                        return lab;
                    }
            lab.kind = OrbitLabelS::Kind::S0MinusST;
            return lab;
        }
        default:
            throw std::logic_error("form values against the quadruple summed to " +
                                   std::to_string(hits) + "; the four entries must sum to zero");
    }
}

VertexPartition quad_orbit_partition(const SympGraph& g, const SpecialQuadruple& q) {
    if (!g.labeled()) throw std::invalid_argument("orbit partition needs a vector-labeled graph");
    if (q.dim != 2 * g.nu()) throw std::invalid_argument("quadruple dimension mismatch");
    using Kind = OrbitLabelS::Kind;
    std::map<Kind, std::vector<int>> buckets;
    for (int v = 1; v <= g.vertex_count(); ++v)
        buckets[classify_quad_orbit(g.label(v), q).kind].push_back(v);
    std::vector<std::pair<std::string, std::vector<int>>> cells;
    for (Kind k : {Kind::S, Kind::T, Kind::S0MinusST, Kind::S2, Kind::S4}) {
        auto it = buckets.find(k);
        if (it != buckets.end()) cells.emplace_back(quad_cell_label(k), std::move(it->second));
    }
    return make_partition(g.vertex_count(), std::move(cells));
}

VertexPartition quad_two_cell_partition(const SympGraph& g, const SpecialQuadruple& q) {
    if (!g.labeled()) throw std::invalid_argument("two-cell partition needs a vector-labeled graph");
    if (q.dim != 2 * g.nu()) throw std::invalid_argument("quadruple dimension mismatch");
    std::vector<int> inner, outer;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        bool in_quad = false;
        for (const BitVector& qv : q.v) in_quad |= (qv.bits == static_cast<std::uint32_t>(v));
        (in_quad ? inner : outer).push_back(v);
    }
    VertexPartition p = make_partition(
        g.vertex_count(), {{"S", std::move(inner)}, {"VminusS", std::move(outer)}});
    p.designated = 1;
    return p;
}

std::vector<std::vector<std::uint32_t>> basis_stabilizer_group(int nu) {
    if (nu < kMinNu) throw std::invalid_argument("nu out of range");
    if (nu > 5) throw std::invalid_argument("stabilizer enumeration is limited to nu <= 5");
    const int dim = 2 * nu;
    const std::uint32_t total = std::uint32_t{1} << dim;

    std::vector<int> src(nu);
    std::iota(src.begin(), src.end(), 0);
    std::vector<std::vector<std::uint32_t>> group;
    do {
        for (std::uint32_t sw = 0; sw < (std::uint32_t{1} << nu); ++sw) {
            std::vector<std::uint32_t> perm(total);
            for (std::uint32_t x = 0; x < total; ++x) {
                std::uint32_t y = 0;
                for (int i = 0; i < nu; ++i) {
                    std::uint32_t blk = (x >> (2 * src[i])) & 3u;
                    if ((sw >> i) & 1) blk = ((blk & 1) << 1) | (blk >> 1);
                    y |= blk << (2 * i);
                }
                perm[x] = y;
            }
            // Check it permutes the basis and preserves the form on it.
            std::uint32_t basis_seen = 0;
            for (int c = 1; c <= dim; ++c) {
                std::uint32_t img = perm[std::uint32_t{1} << (c - 1)];
                if (std::popcount(img) != 1)
                    throw std::logic_error("stabilizer element does not permute the basis");
                basis_seen |= img;
            }
            if (basis_seen != total - 1)
                throw std::logic_error("stabilizer element does not permute the basis");
            for (int a = 1; a <= dim; ++a)
                for (int b = 1; b <= dim; ++b) {
                    BitVector ea = basis_vector(a, dim), eb = basis_vector(b, dim);
                    BitVector fa{perm[ea.bits], dim}, fb{perm[eb.bits], dim};
                    if (symp_form(fa, fb) != symp_form(ea, eb))
                        throw std::logic_error("stabilizer element does not preserve the form");
                }
            group.push_back(std::move(perm));
        }
    } while (std::next_permutation(src.begin(), src.end()));
    return group;
}

VertexPartition orbit_closure(const std::vector<std::vector<std::uint32_t>>& perms, int nu) {
    if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("nu out of range");
    const int n = (1 << (2 * nu)) - 1;
    for (const auto& perm : perms)
        if (perm.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("permutation has wrong length");

    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& perm : perms)
        for (int v = 1; v <= n; ++v) {
            int a = find(v), b = find(static_cast<int>(perm[v]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<int, std::vector<int>> orbits;
    for (int v = 1; v <= n; ++v) orbits[find(v)].push_back(v);
    std::vector<std::pair<std::string, std::vector<int>>> cells;
    int idx = 0;
    for (auto& [root, verts] : orbits)
        cells.emplace_back("orbit" + std::to_string(idx++), std::move(verts));
    return make_partition(n, std::move(cells));
}

}  // namespace sympgm
