#pragma once

// graph6 text encoding. Header 63+n for n <= 62, '~' plus three bytes up to
// 258047; upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...
// packed big-endian into 6-bit groups offset by 63.

#include <string>
#include <string_view>

#include "sturan/graph.hpp"

namespace sturan {

std::string graph6_encode(const Graph& g);

/// Throws std::invalid_argument on a malformed header, a wrong body length,
/// characters outside '?'..'~', or nonzero padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace sturan
