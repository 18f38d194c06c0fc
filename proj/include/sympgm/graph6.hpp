#pragma once

#include <string>
#include <string_view>

#include "sympgm/graph.hpp"

namespace sympgm {

// Standard graph6 text encoding. Vertex id v maps to graph6 index v-1.
std::string graph6_encode(const SympGraph& g);

// Accepts an optional ">>graph6<<" prefix and trailing whitespace; rejects
// anything else malformed. Decoded graphs carry no vector labels.
SympGraph graph6_decode(std::string_view text);

}  // namespace sympgm
