// geodesic.hpp -- shortest paths and geodesic paths on lazy graphs.
//
// Distances are computed by capped BFS. DistanceRow keeps the BFS from one
// source alive and expands it layer by layer on demand, so repeated queries
// against the same source share work; a node budget guards against graphs
// whose balls explode (queries past a saturated frontier report unknown).
#pragma once

#include "shiftlab/graph.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace shiftlab {

class DistanceRow {
  public:
    DistanceRow(GraphCache& gc, int src, size_t node_budget = SIZE_MAX);

    struct Answer {
        std::optional<int> d;  // set iff distance known and <= cap
        bool exact = true;     // false when the budget cut the search
    };
    Answer query(int dst, int cap);

    bool saturated() const { return saturated_; }

  private:
    void expand();

    GraphCache* gc_;
    std::unordered_map<int, int> dist_;
    std::vector<int> frontier_;
    int radius_ = 0;
    bool saturated_ = false;
    size_t budget_;
};

/// Shortest-path length u -> v if <= cap, else nullopt. distance(v, v) = 0:
/// the empty path competes, so no nonempty closed path is ever geodesic.
std::optional<int> distance(const GraphGen& g, const VertexId& u, const VertexId& v,
                            int cap);

/// |path| == distance(src, dst) computed with cap = |path|.
bool is_geodesic(const GraphGen& g, const FinitePath& path);

/// Every subpath of length <= cap is geodesic. Equivalent to the full
/// geodesic check when |path| <= cap; a sound bounded check otherwise.
bool is_geodesic_windowed(const GraphGen& g, const FinitePath& path, int cap);

/// All length-`length` paths from v whose prefixes are all geodesic, in
/// label-lexicographic order. Subpaths of geodesics are geodesic, so these
/// are exactly the geodesic paths of that length.
std::vector<FinitePath> geodesic_rays(const GraphGen& g, const VertexId& v, int length);

/// First ray in the order above, if any.
std::optional<FinitePath> first_geodesic_ray(const GraphGen& g, const VertexId& v,
                                             int length);

}  // namespace shiftlab
