#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympgm/graph.hpp"
#include "sympgm/partition.hpp"
#include "sympgm/switching.hpp"

namespace sympgm {

enum class Variant { Base, S, O, S4, S0MinusST, AH2Cell };

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
inline constexpr std::array<Variant, 5> kScanVariants = {Variant::Base, Variant::S, Variant::O,
                                                         Variant::S4, Variant::S0MinusST};

// |N(x) cap N(y) cap N(z)| excluding x, y, z themselves. The three vertices
// must be distinct.
int triple_count(const SympGraph& g, int x, int y, int z);

// Per-cell switching scheme of an orbit partition: the designated cell plus
// the set of cells every designated vertex half-sees. Requires uniform
// relations (each cell all-zero, all-half or all-full against D).
struct SwitchScheme {
    int designated = -1;  // -1: no switch, nothing is half
    std::vector<bool> half;
};

SwitchScheme make_switch_scheme(const SympGraph& base, const VertexPartition& p,
                                std::optional<int> designated);

// How a vertex triple sits relative to the designated cell and the half
// cells: DaHb means a of the three lie in the designated cell and b of the
// remaining ones lie in half cells.
enum class SwitchCase { D0H0, D0H1, D0H2, D0H3, D1H0, D1H1, D1H2, D2H0, D2H1, D3 };

std::string switch_case_name(SwitchCase c);

struct CellTriple {
    SwitchCase id;
    // The input triple reordered to the case's canonical roles: designated
    // vertices first, then half-cell vertices, ties by ascending id.
    std::array<int, 3> arranged;
};

CellTriple classify_switch_case(const VertexPartition& p, const SwitchScheme& scheme, int x, int y,
                                int z);

// Predicted common-neighbor count of the triple in the switched graph,
// computed on the base graph only, case by case.
std::int64_t predict_switched_count(const SympGraph& base, const VertexPartition& p,
                                    const SwitchScheme& scheme, int x, int y, int z);

inline constexpr int kExhaustiveScanLimit = 1100;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct ScanSettings {
    std::string graph_id;
    bool exhaustive = true;
    std::uint64_t samples = 0;  // sampled mode: number of triples
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;  // 0: pick from hardware
    bool histogram = false;
};

struct TripleScanReport {
    std::string graph_id;
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int min_nonzero = 0;
    std::array<int, 3> witness{0, 0, 0};
    bool zero_triples_seen = false;
    std::optional<std::map<int, std::uint64_t>> histogram;
};

// Minimum nonzero triple common-neighbor count, with the lexicographically
// smallest witness. Exhaustive mode walks all triples (n <= 1100); sampled
// mode draws uniformly with a fixed generator so reports are reproducible.
// The result does not depend on the worker count.
TripleScanReport scan_min_nonzero(const SympGraph& g, const ScanSettings& settings);

struct ExpectedMinimum {
    std::int64_t value = 0;
    bool asserted = false;  // closed forms are only asserted for nu >= 4
};

// Closed-form minimum nonzero triple count for each family.
ExpectedMinimum expected_scan_minimum(Variant v, int nu);

}  // namespace sympgm
