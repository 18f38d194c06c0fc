#include "sympgm/triples.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <random>
#include <stdexcept>
#include <thread>

namespace sympgm {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Base: return "base";
        case Variant::S: return "S";
        case Variant::O: return "O";
        case Variant::S4: return "S4";
        case Variant::S0MinusST: return "S0MinusST";
        case Variant::AH2Cell: return "AH2cell";
    }
    throw std::logic_error("unreachable");
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (Variant v : {Variant::Base, Variant::S, Variant::O, Variant::S4, Variant::S0MinusST,
                      Variant::AH2Cell})
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

int triple_count(const SympGraph& g, int x, int y, int z) {
    const int n = g.vertex_count();
    if (x < 1 || x > n || y < 1 || y > n || z < 1 || z > n)
        throw std::invalid_argument("vertex id out of range");
    if (x == y || x == z || y == z) throw std::invalid_argument("triple vertices must be distinct");
    auto rx = g.row(x), ry = g.row(y), rz = g.row(z);
    int c = 0;
    // x, y, z drop out on their own: each misses its own row.
    for (std::size_t w = 0; w < rx.size(); ++w) c += std::popcount(rx[w] & ry[w] & rz[w]);
    return c;
}

SwitchScheme make_switch_scheme(const SympGraph& base, const VertexPartition& p,
                                std::optional<int> designated) {
    SwitchScheme s;
    s.half.assign(p.cells.size(), false);
    if (!designated) return s;
    s.designated = *designated;
    GmCellReport report = gm_cell_report(base, p, *designated);
    for (const GmCellRelation& rel : report.relations) {
        if (rel.verdict == CellVerdict::Mixed)
            throw std::invalid_argument("cell " + p.cells[rel.cell].label +
                                        " is not uniformly zero, half or full against cell " +
                                        p.cells[*designated].label);
        if (rel.verdict == CellVerdict::AllHalf) s.half[rel.cell] = true;
    }
    return s;
}

std::string switch_case_name(SwitchCase c) {
    switch (c) {
        case SwitchCase::D0H0: return "D0H0";
        case SwitchCase::D0H1: return "D0H1";
        case SwitchCase::D0H2: return "D0H2";
        case SwitchCase::D0H3: return "D0H3";
        case SwitchCase::D1H0: return "D1H0";
        case SwitchCase::D1H1: return "D1H1";
        case SwitchCase::D1H2: return "D1H2";
        case SwitchCase::D2H0: return "D2H0";
        case SwitchCase::D2H1: return "D2H1";
        case SwitchCase::D3: return "D3";
    }
    throw std::logic_error("unreachable");
}

CellTriple classify_switch_case(const VertexPartition& p, const SwitchScheme& scheme, int x, int y,
                                int z) {
    if (x == y || x == z || y == z) throw std::invalid_argument("triple vertices must be distinct");
    std::vector<int> in_d, in_half, rest;
    for (int v : {x, y, z}) {
        if (v < 1 || v > p.n) throw std::invalid_argument("vertex id out of range");
        int cell = p.cell_of(v);
        if (cell == scheme.designated)
            in_d.push_back(v);
        else if (scheme.half[cell])
            in_half.push_back(v);
        else
            rest.push_back(v);
    }
    std::sort(in_d.begin(), in_d.end());
    std::sort(in_half.begin(), in_half.end());
    std::sort(rest.begin(), rest.end());

    static constexpr SwitchCase kByCounts[4][4] = {
        {SwitchCase::D0H0, SwitchCase::D0H1, SwitchCase::D0H2, SwitchCase::D0H3},
        {SwitchCase::D1H0, SwitchCase::D1H1, SwitchCase::D1H2, SwitchCase::D1H2},
        {SwitchCase::D2H0, SwitchCase::D2H1, SwitchCase::D2H1, SwitchCase::D2H1},
        {SwitchCase::D3, SwitchCase::D3, SwitchCase::D3, SwitchCase::D3},
    };
    CellTriple ct;
    ct.id = kByCounts[in_d.size()][in_half.size()];
    int k = 0;
    for (int v : in_d) ct.arranged[k++] = v;
    for (int v : in_half) ct.arranged[k++] = v;
    for (int v : rest) ct.arranged[k++] = v;
    return ct;
}

std::int64_t predict_switched_count(const SympGraph& base, const VertexPartition& p,
                                    const SwitchScheme& scheme, int x, int y, int z) {
    const CellTriple ct = classify_switch_case(p, scheme, x, y, z);
    const int X = ct.arranged[0], Y = ct.arranged[1], Z = ct.arranged[2];

    // Sums |C cap s| over the cells of the selected classes.
    auto sum_cells = [&](const VertexSet& s, bool others, bool halves, bool desig) {
        std::int64_t total = 0;
        for (const PartitionCell& c : p.cells) {
            bool is_d = c.id == scheme.designated;
            bool take = is_d ? desig : (scheme.half[c.id] ? halves : others);
            if (take) total += intersection_count(c.members, s);
        }
        return total;
    };
    auto in_desig = [&](const VertexSet& s) { return sum_cells(s, false, false, true); };
    auto cn = [&](std::vector<int> a, std::vector<int> b) {
        return common_neighbors(base, std::move(a), std::move(b));
    };

    switch (ct.id) {
        case SwitchCase::D0H0:
            return cn({X, Y, Z}, {}).count();
        case SwitchCase::D0H1:
            return sum_cells(cn({X, Y, Z}, {}), true, true, false) + in_desig(cn({Y, Z}, {X}));
        case SwitchCase::D0H2:
            return sum_cells(cn({X, Y, Z}, {}), true, true, false) + in_desig(cn({Z}, {X, Y}));
        case SwitchCase::D0H3:
            return sum_cells(cn({X, Y, Z}, {}), true, true, false) + in_desig(cn({}, {X, Y, Z}));
        case SwitchCase::D1H0:
            return sum_cells(cn({X, Y, Z}, {}), true, false, true) +
                   sum_cells(cn({Y, Z}, {X}), false, true, false);
        case SwitchCase::D1H1:
            return sum_cells(cn({X, Y, Z}, {}), true, false, false) +
                   sum_cells(cn({Y, Z}, {X}), false, true, false) + in_desig(cn({X, Z}, {Y}));
        case SwitchCase::D1H2:
            return sum_cells(cn({X, Y, Z}, {}), true, false, false) +
                   sum_cells(cn({Y, Z}, {X}), false, true, false) + in_desig(cn({X}, {Y, Z}));
        case SwitchCase::D2H0:
            return sum_cells(cn({X, Y, Z}, {}), true, false, true) +
                   sum_cells(cn({Z}, {X, Y}), false, true, false);
        case SwitchCase::D2H1:
            return sum_cells(cn({X, Y, Z}, {}), true, false, false) +
                   sum_cells(cn({Z}, {X, Y}), false, true, false) + in_desig(cn({X, Y}, {Z}));
        case SwitchCase::D3:
            return sum_cells(cn({X, Y, Z}, {}), true, false, true) +
                   sum_cells(cn({}, {X, Y, Z}), false, true, false);
    }
    throw std::logic_error("unreachable");
}

namespace {

struct ScanAccumulator {
    int min = INT_MAX;
    std::array<int, 3> witness{0, 0, 0};
    bool zero_seen = false;
    std::vector<std::uint64_t> hist;

    void take_nonzero(int c, int x, int y, int z) {
        if (c < min || (c == min && std::array{x, y, z} < witness)) {
            min = c;
            witness = {x, y, z};
        }
    }
    void merge(const ScanAccumulator& o) {
        if (o.min < min || (o.min == min && o.witness < witness)) {
            min = o.min;
            witness = o.witness;
        }
        zero_seen |= o.zero_seen;
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += o.hist[i];
    }
};

void scan_worker(const SympGraph& g, bool want_hist, std::atomic<int>& next,
                 ScanAccumulator& out) {
    const int n = g.vertex_count();
    const std::size_t wpr = g.words_per_row();
    std::vector<std::uint64_t> pairbuf(wpr);
    for (;;) {
        const int x = next.fetch_add(1, std::memory_order_relaxed);
        if (x > n - 2) break;
        auto rx = g.row(x);
        for (int y = x + 1; y <= n - 1; ++y) {
            auto ry = g.row(y);
            std::uint64_t any = 0;
            for (std::size_t w = 0; w < wpr; ++w) {
                pairbuf[w] = rx[w] & ry[w];
                any |= pairbuf[w];
            }
            if (!any) {
                out.zero_seen = true;
                if (want_hist) out.hist[0] += static_cast<std::uint64_t>(n - y);
                continue;
            }
            for (int z = y + 1; z <= n; ++z) {
                auto rz = g.row(z);
                int c = 0;
                for (std::size_t w = 0; w < wpr; ++w) c += std::popcount(pairbuf[w] & rz[w]);
                if (c == 0)
                    out.zero_seen = true;
                else
                    out.take_nonzero(c, x, y, z);
                if (want_hist) ++out.hist[c];
            }
        }
    }
}

int pick_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

}  // namespace

TripleScanReport scan_min_nonzero(const SympGraph& g, const ScanSettings& settings) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("scan needs at least 3 vertices");
    TripleScanReport report;
    report.graph_id = settings.graph_id;
    report.exhaustive = settings.exhaustive;

    ScanAccumulator total;
    total.hist.assign(settings.histogram ? static_cast<std::size_t>(n) + 1 : 0, 0);

    if (settings.exhaustive) {
        if (n > kExhaustiveScanLimit)
            throw std::invalid_argument("exhaustive scan is limited to " +
                                        std::to_string(kExhaustiveScanLimit) + " vertices; got " +
                                        std::to_string(n));
        const int nthreads = std::min(pick_threads(settings.threads), n);
        std::atomic<int> next{1};
        std::vector<ScanAccumulator> parts(nthreads);
        for (ScanAccumulator& acc : parts) acc.hist.assign(total.hist.size(), 0);
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(scan_worker, std::cref(g), settings.histogram, std::ref(next),
                              std::ref(parts[t]));
        for (std::thread& t : pool) t.join();
        for (const ScanAccumulator& acc : parts) total.merge(acc);
    } else {
        if (settings.samples == 0) throw std::invalid_argument("sampled scan needs samples > 0");
        report.samples = settings.samples;
        report.seed = settings.seed;
        std::mt19937_64 rng(settings.seed);
        auto pick = [&]() {  // uniform in [1, n], multiply-shift, stdlib-independent
            return static_cast<int>(
                       (static_cast<unsigned __int128>(rng()) * static_cast<std::uint64_t>(n)) >>
                       64) +
                   1;
        };
        for (std::uint64_t s = 0; s < settings.samples; ++s) {
            int x, y, z;
            do {
                x = pick();
                y = pick();
                z = pick();
            } while (x == y || x == z || y == z);
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            int c = triple_count(g, x, y, z);
            if (c == 0)
                total.zero_seen = true;
            else
                total.take_nonzero(c, x, y, z);
            if (settings.histogram) ++total.hist[c];
        }
    }

    if (total.min == INT_MAX)
        throw std::runtime_error("every scanned triple had zero common neighbors");
    report.min_nonzero = total.min;
    report.witness = total.witness;
    report.zero_triples_seen = total.zero_seen;
    if (settings.histogram) {
        std::map<int, std::uint64_t> h;
        for (std::size_t c = 0; c < total.hist.size(); ++c)
            if (total.hist[c]) h[static_cast<int>(c)] = total.hist[c];
        report.histogram = std::move(h);
    }
    return report;
}

ExpectedMinimum expected_scan_minimum(Variant v, int nu) {
    if (nu < kMinNu || nu > kMaxNu) throw std::invalid_argument("nu out of range");
    ExpectedMinimum out;
    out.asserted = nu >= 4;
    switch (v) {
        case Variant::Base: out.value = std::int64_t{1} << (2 * nu - 3); break;
        case Variant::S: out.value = 1; break;
        case Variant::O: out.value = std::int64_t{1} << (nu - 2); break;
        case Variant::S4: out.value = std::int64_t{1} << (2 * nu - 5); break;
        case Variant::S0MinusST: out.value = (std::int64_t{1} << (2 * nu - 5)) - 2; break;
        case Variant::AH2Cell:
            throw std::invalid_argument("no closed form is tabulated for the two-cell variant");
    }
    return out;
}

}  // namespace sympgm
