#pragma once

#include <span>
#include <string>
#include <vector>

#include "posetlab/embedding.hpp"

namespace posetlab::drawing {

/// Straight-line planar drawing of the cover graph, for inspection only.
/// Wheels get the radial layout their canonical embedding is read from;
/// other graphs are triangulated and drawn on a grid (Chrobak-Payne), so
/// their drawing need not follow the embedding's rotation system.
std::vector<Point> planar_layout(const PlaneEmbedding& emb);

/// SVG of the drawing. `highlight` is a vertex sequence whose edges are
/// drawn in red. e_inf is drawn as a dashed stub at its vertex.
std::string to_svg(const PlaneEmbedding& emb, std::span<const Point> layout, std::span<const Element> highlight = {});

/// Cover diagram in DOT, one rank per height level.
std::string to_dot(const Poset& p, std::span<const Element> highlight = {});

/// Level of every element: length of the longest chain ending there, minus one.
std::vector<int> height_levels(const Poset& p);

}  // namespace posetlab::drawing
