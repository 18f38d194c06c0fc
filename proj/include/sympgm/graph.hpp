#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sympgm/gf2.hpp"

namespace sympgm {

inline std::size_t words_for_ids(int n) { return (static_cast<std::size_t>(n) + 64) / 64; }

// Dense set over vertex ids 1..n; bit index = id, bit 0 unused.
struct VertexSet {
    int n = 0;
    std::vector<std::uint64_t> words;

    static VertexSet empty(int n);
    static VertexSet all(int n);

    bool contains(int v) const { return (words[v >> 6] >> (v & 63)) & 1; }
    void add(int v) { words[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { words[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    int count() const;
    int first() const;  // smallest member, 0 if empty
    std::vector<int> to_vector() const;

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& and_not(const VertexSet& o);

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

int intersection_count(const VertexSet& a, const VertexSet& b);
int intersection_count(std::span<const std::uint64_t> row, const VertexSet& b);

// Undirected graph on vertex ids 1..n, adjacency held as one bitset row per
// vertex (row 0 kept zero so ids index directly). When nu > 0 the graph is
// vector-labeled: vertex id v is the vector with encoding v.
class SympGraph {
  public:
    // adj must hold (n+1) rows of words_for_ids(n) words each, symmetric, with
    // zero diagonal, bit 0 and all bits > n clear. Validated on construction.
    SympGraph(int n, int nu, std::vector<std::uint64_t> adj);

    int vertex_count() const { return n_; }
    int nu() const { return nu_; }
    bool labeled() const { return nu_ > 0; }
    std::size_t words_per_row() const { return wpr_; }

    std::span<const std::uint64_t> row(int v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }
    bool adjacent(int u, int v) const {
        return (row(v)[static_cast<std::size_t>(u) >> 6] >> (u & 63)) & 1;
    }
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    const VertexSet& universe() const { return universe_; }
    BitVector label(int v) const;  // labeled graphs only

    std::vector<std::uint64_t> copy_adjacency() const { return adj_; }
    bool same_edges(const SympGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

  private:
    int n_;
    int nu_;
    std::size_t wpr_;
    std::vector<std::uint64_t> adj_;
    VertexSet universe_;
};

// The symplectic graph over F_2 with 2^{2*nu}-1 vertices: ids are the nonzero
// vectors, edges join pairs with form value 1.
SympGraph build_symplectic(int nu);

// Small helper for tests and decoding; vertices 1..n, nu = 0.
SympGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

struct SrgCertificate {
    int n = 0, k = 0, lambda = 0, mu = 0;

    friend bool operator==(const SrgCertificate&, const SrgCertificate&) = default;
};

struct SrgCheck {
    bool ok = false;
    SrgCertificate params;   // meaningful when ok
    std::string failure;     // witness description when !ok
};

// Exact strong-regularity check by pairwise common-neighbor counts.
SrgCheck verify_srg(const SympGraph& g);

// Expected certificate for the symplectic graph and all its switches.
SrgCertificate symplectic_srg_params(int nu);

// Vertices adjacent to everything in adjacent_to and to nothing in
// nonadjacent_to, excluding both lists. The two lists must be disjoint.
VertexSet common_neighbors(const SympGraph& g, const std::vector<int>& adjacent_to,
                           const std::vector<int>& nonadjacent_to);

// Unordered pairs {u,v} adjacent in exactly one of the two graphs, sorted.
std::vector<std::pair<int, int>> edge_difference(const SympGraph& a, const SympGraph& b);

}  // namespace sympgm
