// graph.hpp -- lazy right-resolving labeled graphs.
//
// Vertices are canonical encodings (never materialized follower sets): a
// Dyck vertex is its stack of unmatched openers, an S-gap vertex the length
// of its trailing 1-run, a beta vertex the prefix index (-1 for the root).
// Transform vertices wrap other vertices. A GraphGen is a root plus a total
// out-edge function returning label-sorted edge lists; everything downstream
// (exploration, DOT, searches) treats it as an implicit infinite graph.
#pragma once

#include "shiftlab/alphabet.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <variant>
#include <vector>

namespace shiftlab {

struct VertexId;
using VertexPtr = std::shared_ptr<const VertexId>;

struct DyckStackV {
    std::vector<int> stack;  // 1-based bracket indices, bottom to top
};
struct SGapIndexV {
    std::int64_t n = 0;
};
struct BetaIndexV {
    std::int64_t n = -1;  // -1 encodes the empty-word vertex
};
struct StarV {
    VertexPtr base;
    bool starred = false;
};
struct PairV {
    VertexPtr left, right;
};
struct OriginalV {
    VertexPtr base;
};
struct MidpointV {
    VertexPtr src;
    Symbol label = 0;
};

struct VertexId {
    std::variant<DyckStackV, SGapIndexV, BetaIndexV, StarV, PairV, OriginalV, MidpointV> v;

    static VertexId dyck_stack(std::vector<int> stack);
    static VertexId sgap_index(std::int64_t n);
    static VertexId beta_index(std::int64_t n);
    static VertexId star(VertexId base, bool starred);
    static VertexId pair(VertexId left, VertexId right);
    static VertexId original(VertexId base);
    static VertexId midpoint(VertexId src, Symbol label);

    bool operator==(const VertexId& o) const;
    bool operator!=(const VertexId& o) const { return !(*this == o); }
    bool operator<(const VertexId& o) const;
};

/// Canonical display name, also used for DOT ids and deterministic
/// tie-breaking: dyck:"((", sgap:3, beta:2, star:(sgap:0,*), pair:(..,..),
/// orig:(..), mid:(..,"a").
std::string vertex_name(const VertexId& v, const Alphabet& labels);

struct VertexHash {
    size_t operator()(const VertexId& v) const;
};

struct LabeledEdge {
    VertexId src;
    Symbol label = 0;
    VertexId dst;

    bool operator==(const LabeledEdge& o) const {
        return label == o.label && src == o.src && dst == o.dst;
    }
    bool operator!=(const LabeledEdge& o) const { return !(*this == o); }
};

struct GraphGen {
    std::string family;
    Alphabet alphabet;
    VertexId root;
    std::function<std::vector<LabeledEdge>(const VertexId&)> out_edges;
};

/// Interns vertices to dense ids and memoizes out-edge lists; the working
/// representation behind every search. Not thread-safe; use one per thread.
class GraphCache {
  public:
    explicit GraphCache(const GraphGen& g) : g_(&g) {}

    int id_of(const VertexId& v);
    const VertexId& vertex(int id) const { return verts_[static_cast<size_t>(id)]; }
    int root_id() { return id_of(g_->root); }

    struct Arc {
        Symbol label;
        int dst;
    };
    const std::vector<Arc>& out(int id);

    const GraphGen& gen() const { return *g_; }
    size_t interned() const { return verts_.size(); }

  private:
    const GraphGen* g_;
    std::unordered_map<VertexId, int, VertexHash> ids_;
    std::vector<VertexId> verts_;
    std::vector<std::unique_ptr<std::vector<Arc>>> arcs_;
};

struct GraphFragment {
    std::vector<VertexId> vertices;  // BFS order: (depth, name) ascending
    std::vector<int> depth;          // parallel to vertices
    std::vector<LabeledEdge> edges;  // both endpoints explored, sorted
    int max_depth = 0;
    const Alphabet* labels = nullptr;
};

/// BFS closure to the given depth; edges include every out-edge whose
/// destination was explored.
GraphFragment explore(const GraphGen& g, int depth);

/// Deterministic DOT text. Vertices beyond the budget are dropped (with
/// their edges); vertices at the fragment's maximum depth are drawn as
/// boxes to mark the truncation frontier.
std::string to_dot(const GraphFragment& f, size_t max_vertices = 512);

std::string fragment_summary(const GraphFragment& f);

// Finite paths are nonempty edge sequences with matching endpoints.
using FinitePath = std::vector<LabeledEdge>;

/// Concatenated labels; input_error on non-contiguous paths.
Word path_label(const FinitePath& path);
void require_path(const FinitePath& path);
const VertexId& path_src(const FinitePath& path);
const VertexId& path_dst(const FinitePath& path);

/// True when a path from v back to g.root of length <= cap exists.
bool return_reachable(const GraphGen& g, const VertexId& v, int cap);

}  // namespace shiftlab
