#pragma once

#include <cstddef>
#include <string>

#include "backlimit/pl_map.hpp"

namespace backlimit {

inline constexpr std::size_t kLabelDepthMax = 8;

/// Graph of f over its domain together with the diagonal.
std::string render_graph(const PLMap& f);

/// Graph, diagonal and the cobweb of the first n forward steps of x.
std::string render_cobweb(const PLMap& f, const Rat& x, std::size_t n);

/// Layered preimage tree of x: row n holds f^{-n}(x) placed by value, with
/// edges to parents. Nodes carry exact labels when depth <= kLabelDepthMax.
std::string render_preimage_tree(const PLMap& f, const Rat& x, std::size_t depth, std::size_t node_cap);

}  // namespace backlimit
