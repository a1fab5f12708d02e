// bipartite.hpp -- bipartite recodings of configurations and of paths on
// two-colored graphs, with transport checks for geodesicness and strict
// proximality.
#pragma once

#include "shiftlab/configuration.hpp"
#include "shiftlab/proximal.hpp"
#include "shiftlab/transforms.hpp"

namespace shiftlab {

/// Partition (C, D): input symbols are pairs cd over the composed alphabet
/// (code = c * |D| + d); the forward code re-chunks ...c0d0 c1d1... into
/// ...(d0 c1)(d1 c2)..., the backward code into ...(d-1 c0)(d0 c1)...
struct BipartiteCodeSpec {
    enum class Direction { Forward, Backward };
    Direction direction = Direction::Forward;
    Alphabet c, d;

    Alphabet domain_alphabet() const { return pair_alphabet(c, d); }
    Alphabet codomain_alphabet() const { return pair_alphabet(d, c); }
};

/// Exact re-chunking; eventually periodic in, eventually periodic out with
/// the same tail periods.
Configuration bipartite_apply(const BipartiteCodeSpec& spec, const Configuration& x);

/// Inverse of the forward code: a backward re-chunk from DC back to CD.
Configuration bipartite_unapply_forward(const BipartiteCodeSpec& spec,
                                        const Configuration& y);

/// Re-expresses a path of the base graph as a path of the first induced
/// component of its subdivision (label-isomorphic lift).
FinitePath lift_to_induced_first(const BipartiteGraphGen& bg, const FinitePath& path);

/// Forward re-chunk of a first-component path into the second component:
/// c0d0 c1d1 ... -> (d0 c1)(d1 c2)...; output is one edge shorter.
FinitePath path_bipartite(const BipartiteGraphGen& bg, const FinitePath& path);

struct TransportReport {
    bool geodesic_in = false;
    bool geodesic_out = false;
    bool witness_in = false;
    bool witness_out = false;
    int window_out = 0;  // window used on the image side (one less)
    ProximalReport out_report;
};

/// Pushes a ray pair through path_bipartite and re-checks both properties
/// on the image; the image window shrinks by one.
TransportReport transport_check(const BipartiteGraphGen& bg, const RayPair& pair,
                                const Bounds& bounds);

}  // namespace shiftlab
