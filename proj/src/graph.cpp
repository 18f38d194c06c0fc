#include "sympgm/graph.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace sympgm {

VertexSet VertexSet::empty(int n) {
    VertexSet s;
    s.n = n;
    s.words.assign(words_for_ids(n), 0);
    return s;
}

VertexSet VertexSet::all(int n) {
    VertexSet s = empty(n);
    for (int v = 1; v <= n; ++v) s.words[v >> 6] |= std::uint64_t{1} << (v & 63);
    return s;
}

int VertexSet::count() const {
    int c = 0;
    for (std::uint64_t w : words) c += std::popcount(w);
    return c;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i]) return static_cast<int>(i * 64 + std::countr_zero(words[i]));
    return 0;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = words[i];
        while (w) {
            out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
    return *this;
}

VertexSet& VertexSet::and_not(const VertexSet& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~o.words[i];
    return *this;
}

int intersection_count(const VertexSet& a, const VertexSet& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.words.size(); ++i) c += std::popcount(a.words[i] & b.words[i]);
    return c;
}

int intersection_count(std::span<const std::uint64_t> row, const VertexSet& b) {
    int c = 0;
    for (std::size_t i = 0; i < row.size(); ++i) c += std::popcount(row[i] & b.words[i]);
    return c;
}

namespace {

// In-place transpose of a 64x64 bit matrix, bit c of a[r] = element (r, c).
void transpose64(std::uint64_t a[64]) {
    std::uint64_t m = 0x00000000FFFFFFFFull;
    for (int j = 32; j != 0; j >>= 1, m ^= m << j) {
        for (int k = 0; k < 64; k = (k + j + 1) & ~j) {
            std::uint64_t t = ((a[k] >> j) ^ a[k + j]) & m;
            a[k] ^= t << j;
            a[k + j] ^= t;
        }
    }
}

}  // namespace

SympGraph::SympGraph(int n, int nu, std::vector<std::uint64_t> adj)
    : n_(n), nu_(nu), wpr_(words_for_ids(n)), adj_(std::move(adj)), universe_(VertexSet::all(n)) {
    if (n_ < 1 || n_ > 65535) throw std::invalid_argument("vertex count out of range [1, 65535]");
    if (nu_ != 0) {
        if (nu_ < kMinNu || nu_ > kMaxNu) throw std::invalid_argument("nu out of range");
        if (n_ != (1 << (2 * nu_)) - 1)
            throw std::invalid_argument("labeled graph must have 2^(2*nu)-1 vertices");
    }
    if (adj_.size() != static_cast<std::size_t>(n_ + 1) * wpr_)
        throw std::invalid_argument("adjacency storage has wrong size");

    for (std::size_t w = 0; w < wpr_; ++w)
        if (adj_[w] != 0) throw std::invalid_argument("row 0 must stay empty");
    for (int v = 1; v <= n_; ++v) {
        auto r = row(v);
        for (std::size_t w = 0; w < wpr_; ++w)
            if (r[w] & ~universe_.words[w])
                throw std::invalid_argument("adjacency row touches ids outside 1..n");
        if ((r[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    }

    // Symmetry, checked blockwise: transpose of block (I,J) must equal block
    // (J,I). Rows past n are treated as zero.
    const std::size_t blocks = wpr_;
    std::array<std::uint64_t, 64> a{}, b{};
    for (std::size_t bi = 0; bi < blocks; ++bi) {
        for (std::size_t bj = 0; bj <= bi; ++bj) {
            for (int r = 0; r < 64; ++r) {
                std::size_t ri = bi * 64 + r;
                std::size_t rj = bj * 64 + r;
                a[r] = ri <= static_cast<std::size_t>(n_) ? adj_[ri * wpr_ + bj] : 0;
                b[r] = rj <= static_cast<std::size_t>(n_) ? adj_[rj * wpr_ + bi] : 0;
            }
            transpose64(a.data());
            if (a != b) throw std::invalid_argument("adjacency is not symmetric");
        }
    }
}

int SympGraph::degree(int v) const {
    int c = 0;
    for (std::uint64_t w : row(v)) c += std::popcount(w);
    return c;
}

VertexSet SympGraph::neighbors(int v) const {
    VertexSet s;
    s.n = n_;
    auto r = row(v);
    s.words.assign(r.begin(), r.end());
    return s;
}

BitVector SympGraph::label(int v) const {
    if (!labeled()) throw std::logic_error("graph carries no vector labels");
    if (v < 1 || v > n_) throw std::out_of_range("vertex id out of range");
    return BitVector{static_cast<std::uint32_t>(v), 2 * nu_};
}

namespace {

// walsh[m] has bit j set iff popcount(j & m) is odd, so a full adjacency row
// against mask m is a sign pattern of these words.
std::array<std::uint64_t, 64> make_walsh_table() {
    std::array<std::uint64_t, 64> t{};
    for (int m = 0; m < 64; ++m) {
        std::uint64_t w = 0;
        for (int j = 0; j < 64; ++j)
            if (std::popcount(static_cast<unsigned>(j & m)) & 1) w |= std::uint64_t{1} << j;
        t[m] = w;
    }
    return t;
}

}  // namespace

SympGraph build_symplectic(int nu) {
    if (nu < kMinNu || nu > kMaxNu)
        throw std::invalid_argument("nu must be in [" + std::to_string(kMinNu) + ", " +
                                    std::to_string(kMaxNu) + "]");
    static const std::array<std::uint64_t, 64> walsh = make_walsh_table();
    const int dim = 2 * nu;
    const int n = (1 << dim) - 1;
    const std::size_t wpr = words_for_ids(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n + 1) * wpr, 0);
    for (int v = 1; v <= n; ++v) {
        // Bit u of row v is popcount(u & m) mod 2 with m = K*v; split u into
        // its low 6 bits (table lookup) and the word index (sign flip). The
        // zero vector and the diagonal come out non-adjacent on their own.
        const std::uint32_t m = pair_swap_bits(static_cast<std::uint32_t>(v));
        const std::uint64_t low = walsh[m & 63];
        const std::uint32_t mh = m >> 6;
        std::uint64_t* r = adj.data() + static_cast<std::size_t>(v) * wpr;
        for (std::size_t w = 0; w < wpr; ++w)
            r[w] = (std::popcount(static_cast<unsigned>(w) & mh) & 1) ? ~low : low;
    }
    return SympGraph(n, nu, std::move(adj));
}

SympGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 65535) throw std::invalid_argument("vertex count out of range [1, 65535]");
    const std::size_t wpr = words_for_ids(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n + 1) * wpr, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw std::invalid_argument("bad edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        adj[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj[static_cast<std::size_t>(v) * wpr + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    return SympGraph(n, 0, std::move(adj));
}

SrgCertificate symplectic_srg_params(int nu) {
    if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("nu out of range");
    return SrgCertificate{(1 << (2 * nu)) - 1, 1 << (2 * nu - 1), 1 << (2 * nu - 2),
                          1 << (2 * nu - 2)};
}

SrgCheck verify_srg(const SympGraph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("strong regularity needs at least 3 vertices");
    SrgCheck out;
    const int k = g.degree(1);
    for (int v = 2; v <= n; ++v) {
        int d = g.degree(v);
        if (d != k) {
            out.failure = "vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                          ", vertex 1 has degree " + std::to_string(k);
            return out;
        }
    }
    int lambda = -1, mu = -1;
    const std::size_t wpr = g.words_per_row();
    for (int u = 1; u <= n; ++u) {
        auto ru = g.row(u);
        for (int v = u + 1; v <= n; ++v) {
            auto rv = g.row(v);
            int c = 0;
            for (std::size_t w = 0; w < wpr; ++w) c += std::popcount(ru[w] & rv[w]);
            int& expect = g.adjacent(u, v) ? lambda : mu;
            if (expect == -1) {
                expect = c;
            } else if (c != expect) {
                out.failure = std::string(g.adjacent(u, v) ? "adjacent" : "non-adjacent") +
                              " pair (" + std::to_string(u) + ", " + std::to_string(v) + ") has " +
                              std::to_string(c) + " common neighbors, expected " +
                              std::to_string(expect);
                return out;
            }
        }
    }
    if (lambda == -1) {
        out.failure = "graph has no edges";
        return out;
    }
    if (mu == -1) {
        out.failure = "graph is complete, co-edge count undefined";
        return out;
    }
    out.ok = true;
    out.params = SrgCertificate{n, k, lambda, mu};
    return out;
}

VertexSet common_neighbors(const SympGraph& g, const std::vector<int>& adjacent_to,
                           const std::vector<int>& nonadjacent_to) {
    const int n = g.vertex_count();
    VertexSet seen = VertexSet::empty(n);
    auto check = [&](const std::vector<int>& vs) {
        for (int v : vs) {
            if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
            seen.add(v);
        }
    };
    check(adjacent_to);
    for (int v : nonadjacent_to) {
        if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
        if (seen.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " appears on both sides of the common-neighbor query");
        seen.add(v);
    }
    VertexSet acc = g.universe();
    for (int a : adjacent_to) {
        auto r = g.row(a);
        for (std::size_t w = 0; w < r.size(); ++w) acc.words[w] &= r[w];
    }
    for (int b : nonadjacent_to) {
        auto r = g.row(b);
        for (std::size_t w = 0; w < r.size(); ++w) acc.words[w] &= ~r[w];
    }
    for (int a : adjacent_to) acc.remove(a);
    for (int b : nonadjacent_to) acc.remove(b);
    return acc;
}

std::vector<std::pair<int, int>> edge_difference(const SympGraph& a, const SympGraph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("graphs have different vertex counts");
    const int n = a.vertex_count();
    const std::size_t wpr = a.words_per_row();
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= n; ++v) {
        auto ra = a.row(v);
        auto rb = b.row(v);
        for (std::size_t w = static_cast<std::size_t>(v) >> 6; w < wpr; ++w) {
            std::uint64_t d = ra[w] ^ rb[w];
            if (w == static_cast<std::size_t>(v) >> 6)
                d &= ~((std::uint64_t{2} << (v & 63)) - 1);  // keep ids > v only
            while (d) {
                int u = static_cast<int>(w * 64 + std::countr_zero(d));
                out.emplace_back(v, u);
                d &= d - 1;
            }
        }
    }
    return out;
}

}  // namespace sympgm
