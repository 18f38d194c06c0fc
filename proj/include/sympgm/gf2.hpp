#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace sympgm {

inline constexpr int kMinNu = 3;
inline constexpr int kMaxNu = 8;

// Vector in F_2^{2*nu}. Coordinate c (1-based) is bit c-1; coordinate block l
// (1-based) occupies bits 2l-2 and 2l-1. The nonzero vectors are therefore
// exactly the integers 1 .. 2^{2*nu}-1, which doubles as the vertex id space.
struct BitVector {
    std::uint32_t bits = 0;
    int dim = 0;

    friend bool operator==(const BitVector&, const BitVector&) = default;
};

// Validates dim (even, in [2*kMinNu, 2*kMaxNu]) and that bits fit in dim bits.
BitVector make_vector(std::uint32_t bits, int dim);

// e_coord, coord 1-based.
BitVector basis_vector(int coord, int dim);

inline int weight(const BitVector& v) { return std::popcount(v.bits); }

// Swaps the two bits of every coordinate block. This is multiplication by the
// block-diagonal form matrix K = diag(R, ..., R), R = [[0,1],[1,0]].
inline std::uint32_t pair_swap_bits(std::uint32_t b) {
    return ((b & 0x55555555u) << 1) | ((b >> 1) & 0x55555555u);
}

BitVector pair_swap(const BitVector& v);

// The alternating bilinear form x^T K y over F_2. Throws on dimension
// mismatch.
int symp_form(const BitVector& x, const BitVector& y);

BitVector operator^(const BitVector& a, const BitVector& b);

struct Gf2Matrix {
    std::vector<BitVector> rows;
    int dim = 0;
};

// Derives dim from the rows (which must agree); dim must be passed explicitly
// for an empty matrix.
Gf2Matrix make_matrix(std::vector<BitVector> rows, int dim = 0);

int rank(const Gf2Matrix& m);

inline constexpr std::uint64_t kDefaultSolutionCap = std::uint64_t{1} << 20;

struct AffineSolutionSet {
    int rank = 0;
    bool consistent = false;
    std::uint64_t count = 0;                           // 2^(dim-rank) or 0
    std::optional<std::vector<BitVector>> solutions;   // filled only on request
};

// Exact solution counting for M w = b by Gaussian elimination. rhs holds one
// 0/1 entry per row. An empty matrix leaves the whole space.
AffineSolutionSet solve_affine(const Gf2Matrix& m, const std::vector<int>& rhs);

// As above, and additionally enumerates the solutions when count <= cap.
AffineSolutionSet solve_affine_enumerate(const Gf2Matrix& m, const std::vector<int>& rhs,
                                         std::uint64_t cap = kDefaultSolutionCap);

}  // namespace sympgm
