// transforms.hpp -- graph transforms: tensor product, star-studding,
// bipartite subdivision and its induced pair of length-2-path graphs.
#pragma once

#include "shiftlab/graph.hpp"

namespace shiftlab {

/// Vertices are pairs, edges are pairs of edges with paired labels.
GraphGen tensor_product(const GraphGen& g1, const GraphGen& g2);

/// Doubles the vertex set: each v gains a starred copy with a star edge
/// v -> *v, and each edge a: v -> w is copied as a: *v -> w. The star
/// symbol is appended as the last label code.
GraphGen star_graph(const GraphGen& g);

/// Two-colored graph produced by subdivide_bipartite: color 0 carries the
/// original vertices, color 1 the per-edge midpoints. Labels split into an
/// entering part (the original labels) and a single leaving symbol "/".
struct BipartiteGraphGen {
    GraphGen graph;
    std::function<int(const VertexId&)> color;
    Alphabet enter;  // C: labels of color0 -> color1 edges
    Alphabet leave;  // D: labels of color1 -> color0 edges
};

/// Replaces every edge v -a-> w by v -a-> mid(v,a) -/-> w.
BipartiteGraphGen subdivide_bipartite(const GraphGen& g);

/// The two graphs whose edges are the length-2 paths of bg starting at
/// color 0 / color 1. Labels are (enter,leave) resp. (leave,enter) pairs.
/// A non-crossing edge raises input_error when encountered.
std::pair<GraphGen, GraphGen> induced_pair(const BipartiteGraphGen& bg);

}  // namespace shiftlab
