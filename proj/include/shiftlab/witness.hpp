// witness.hpp -- the explicit proximal-pair construction on tensor
// products, and the composed direct-primeness report.
//
// On a product G_Y x G_Z, take a geodesic ray y on G_Y and two cycles
// w1, w2 through distinct edges e1, e2 at a branching vertex v of G_Z.
// With u1 = w1 w2 and u2 = w2 w1, the rays (y, u1^inf) and
// (y, u1 u2 u1 u1 u2 ...) agree on ever longer blocks yet keep
// disagreeing, and both stay geodesic; truncations to a finite horizon
// give replayable witness candidates.
#pragma once

#include "shiftlab/membership.hpp"
#include "shiftlab/proximal.hpp"
#include "shiftlab/transforms.hpp"

namespace shiftlab {

/// Shortest cycle through `first` back to its source, lexicographically
/// least among shortest; input_error if none within cap.
FinitePath cycle_through(const GraphGen& g, const LabeledEdge& first, int cap);

/// The truncated pair ((y,z1),(y,z2)) described above, as paths on
/// tensor_product(gy, gz). v must have >= 2 out-edges; e1/e2 are chosen
/// as its first two out-edges when not given.
RayPair product_witness(const GraphGen& gy, const GraphGen& gz, const VertexId& v,
                        const LabeledEdge& e1, const LabeledEdge& e2, int horizon,
                        int cycle_cap = 64);

/// Convenience: picks the first branching vertex of gz (BFS order) and its
/// first two edges.
RayPair product_witness_auto(const GraphGen& gy, const GraphGen& gz, int horizon);

enum class PrimenessVerdict {
    CriterionSatisfiedAtBound,  // no witness at bound and a fixed point exists
    WitnessCandidateFound,
    NoFixedPoint,  // scan negative but the fixed-point hypothesis fails
    Inconclusive,
};

struct PrimenessReport {
    PrimenessVerdict verdict = PrimenessVerdict::Inconclusive;
    ProximalReport scan;
    std::optional<Symbol> fixed_symbol;
    std::string spec_name;
    std::string route;  // "scan" or "product-construction"
};

const char* primeness_verdict_name(PrimenessVerdict v);

/// For product specs, builds the explicit witness pair (verified at
/// `witness_horizon`); for other families runs the bounded scan. Either
/// way the fixed-point hypothesis is queried and reported.
PrimenessReport primeness_report(const SpecPtr& spec, const Bounds& bounds,
                                 int witness_horizon = 64);

}  // namespace shiftlab
