#include "sympgm/graph6.hpp"

#include <stdexcept>

namespace sympgm {

std::string graph6_encode(const SympGraph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    out.reserve(out.size() + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    int cur = 0, nbits = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i) {
            cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (cur << (6 - nbits))));
    return out;
}

SympGraph graph6_decode(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of printable range");

    std::size_t pos = 0;
    int n;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw std::invalid_argument("graph6: graphs beyond 65535 vertices not supported");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    if (n < 1 || n > 65535) throw std::invalid_argument("graph6: vertex count out of range");

    const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expect = (total_bits + 5) / 6;
    if (text.size() - pos != expect)
        throw std::invalid_argument("graph6: payload length is " +
                                    std::to_string(text.size() - pos) + " bytes, expected " +
                                    std::to_string(expect));

    const std::size_t wpr = words_for_ids(n);
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n + 1) * wpr, 0);
    auto set_edge = [&](int u, int v) {
        adj[static_cast<std::size_t>(u) * wpr + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        adj[static_cast<std::size_t>(v) * wpr + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    };
    std::size_t bit = 0;
    for (int j = 2; j <= n; ++j) {
        for (int i = 1; i < j; ++i, ++bit) {
            int byte = text[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) set_edge(i, j);
        }
    }
    for (; bit < expect * 6; ++bit) {
        int byte = text[pos + bit / 6] - 63;
        if ((byte >> (5 - bit % 6)) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return SympGraph(n, 0, std::move(adj));
}

}  // namespace sympgm
