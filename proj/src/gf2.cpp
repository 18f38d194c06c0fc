#include "sympgm/gf2.hpp"

#include <stdexcept>
#include <string>

namespace sympgm {

namespace {

void check_dim(int dim) {
    if (dim < 2 * kMinNu || dim > 2 * kMaxNu || dim % 2 != 0)
        throw std::invalid_argument("vector dimension must be even and in [" +
                                    std::to_string(2 * kMinNu) + ", " + std::to_string(2 * kMaxNu) +
                                    "], got " + std::to_string(dim));
}

}  // namespace

BitVector make_vector(std::uint32_t bits, int dim) {
    check_dim(dim);
    if (dim < 32 && (bits >> dim) != 0)
        throw std::invalid_argument("value " + std::to_string(bits) + " does not fit in " +
                                    std::to_string(dim) + " bits");
    return BitVector{bits, dim};
}

BitVector basis_vector(int coord, int dim) {
    check_dim(dim);
    if (coord < 1 || coord > dim)
        throw std::invalid_argument("basis coordinate " + std::to_string(coord) +
                                    " out of range [1, " + std::to_string(dim) + "]");
    return BitVector{std::uint32_t{1} << (coord - 1), dim};
}

BitVector pair_swap(const BitVector& v) {
    check_dim(v.dim);
    return BitVector{pair_swap_bits(v.bits), v.dim};
}

int symp_form(const BitVector& x, const BitVector& y) {
    if (x.dim != y.dim)
        throw std::invalid_argument("form arguments have dimensions " + std::to_string(x.dim) +
                                    " and " + std::to_string(y.dim));
    check_dim(x.dim);
    return std::popcount(x.bits & pair_swap_bits(y.bits)) & 1;
}

BitVector operator^(const BitVector& a, const BitVector& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("xor arguments have dimensions " + std::to_string(a.dim) +
                                    " and " + std::to_string(b.dim));
    return BitVector{a.bits ^ b.bits, a.dim};
}

Gf2Matrix make_matrix(std::vector<BitVector> rows, int dim) {
    if (rows.empty()) {
        check_dim(dim);
        return Gf2Matrix{{}, dim};
    }
    int d = rows.front().dim;
    for (const BitVector& r : rows)
        if (r.dim != d) throw std::invalid_argument("matrix rows have mixed dimensions");
    if (dim != 0 && dim != d)
        throw std::invalid_argument("explicit dim disagrees with row dimension");
    check_dim(d);
    return Gf2Matrix{std::move(rows), d};
}

namespace {

struct Elimination {
    int dim = 0;
    int rank = 0;
    bool consistent = true;
    std::vector<std::uint32_t> reduced;  // RREF rows (pivot rows only)
    std::vector<int> rhs;                // rhs per reduced row
    std::vector<int> pivot_col;
};

Elimination eliminate(const Gf2Matrix& m, const std::vector<int>& rhs_in) {
    if (rhs_in.size() != m.rows.size())
        throw std::invalid_argument("rhs length " + std::to_string(rhs_in.size()) +
                                    " does not match row count " + std::to_string(m.rows.size()));
    Elimination e;
    e.dim = m.dim;
    std::vector<std::uint32_t> rows;
    std::vector<int> rhs;
    rows.reserve(m.rows.size());
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        if (m.rows[i].dim != m.dim) throw std::invalid_argument("matrix row dimension mismatch");
        if (rhs_in[i] != 0 && rhs_in[i] != 1)
            throw std::invalid_argument("rhs entries must be 0 or 1");
        rows.push_back(m.rows[i].bits);
        rhs.push_back(rhs_in[i]);
    }

    std::size_t piv = 0;
    for (int col = 0; col < e.dim && piv < rows.size(); ++col) {
        std::size_t r = piv;
        while (r < rows.size() && ((rows[r] >> col) & 1) == 0) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        std::swap(rhs[piv], rhs[r]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k != piv && ((rows[k] >> col) & 1)) {
                rows[k] ^= rows[piv];
                rhs[k] ^= rhs[piv];
            }
        }
        e.pivot_col.push_back(col);
        ++piv;
    }
    e.rank = static_cast<int>(piv);
    for (std::size_t k = piv; k < rows.size(); ++k)
        if (rhs[k] != 0) e.consistent = false;
    e.reduced.assign(rows.begin(), rows.begin() + piv);
    e.rhs.assign(rhs.begin(), rhs.begin() + piv);
    return e;
}

}  // namespace

int rank(const Gf2Matrix& m) {
    return eliminate(m, std::vector<int>(m.rows.size(), 0)).rank;
}

AffineSolutionSet solve_affine(const Gf2Matrix& m, const std::vector<int>& rhs) {
    Elimination e = eliminate(m, rhs);
    AffineSolutionSet out;
    out.rank = e.rank;
    out.consistent = e.consistent;
    out.count = e.consistent ? (std::uint64_t{1} << (e.dim - e.rank)) : 0;
    return out;
}

AffineSolutionSet solve_affine_enumerate(const Gf2Matrix& m, const std::vector<int>& rhs,
                                         std::uint64_t cap) {
    Elimination e = eliminate(m, rhs);
    AffineSolutionSet out;
    out.rank = e.rank;
    out.consistent = e.consistent;
    out.count = e.consistent ? (std::uint64_t{1} << (e.dim - e.rank)) : 0;
    if (!e.consistent || out.count > cap) return out;

    std::uint32_t particular = 0;
    for (int p = 0; p < e.rank; ++p)
        if (e.rhs[p]) particular |= std::uint32_t{1} << e.pivot_col[p];

    std::vector<std::uint32_t> kernel;
    std::uint32_t pivot_mask = 0;
    for (int c : e.pivot_col) pivot_mask |= std::uint32_t{1} << c;
    for (int f = 0; f < e.dim; ++f) {
        if ((pivot_mask >> f) & 1) continue;
        std::uint32_t v = std::uint32_t{1} << f;
        for (int p = 0; p < e.rank; ++p)
            if ((e.reduced[p] >> f) & 1) v |= std::uint32_t{1} << e.pivot_col[p];
        kernel.push_back(v);
    }

    std::vector<BitVector> sols;
    sols.reserve(out.count);
    for (std::uint64_t k = 0; k < out.count; ++k) {
        std::uint32_t x = particular;
        for (std::size_t j = 0; j < kernel.size(); ++j)
            if ((k >> j) & 1) x ^= kernel[j];
        sols.push_back(BitVector{x, e.dim});
    }
    out.solutions = std::move(sols);
    return out;
}

}  // namespace sympgm
