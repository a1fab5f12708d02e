// proximal.hpp -- bounded search for eventually geodesic strictly proximal
// pairs of rays on a cover graph.
//
// Finite-horizon semantics (the infinite notions are not finitely
// decidable, so the scan decides this bounded pattern instead): a pair of
// length-`horizon` geodesic rays PASSES iff
//   (1) some index a has x[a] == y[a] (matching edges),
//   (2) at least min_disagreements indices j > a have x[j] != y[j], and
//   (3) for every n <= window there is an agreement block
//       x[i..i+n] == y[i..i+n] starting after the min_disagreements-th
//       such j.
// Requiring the blocks to recur after the disagreements keeps the check
// meaningful: pairs that merely agree on a prefix and then branch forever
// never pass, while the interleaved witnesses built by product_witness do.
// WitnessFound is replayable finite evidence, never a proof; likewise
// NoWitnessUpToBound only exhausts the stated bounds.
#pragma once

#include "shiftlab/geodesic.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace shiftlab {

struct Bounds {
    int explore_depth = 6;
    int horizon = 12;
    int window = 4;
    int min_disagreements = 3;
    int bfs_cap = 0;  // 0 means horizon + 1

    void validate() const;
    int effective_bfs_cap() const { return bfs_cap > 0 ? bfs_cap : horizon + 1; }
    std::string describe() const;
};

struct RayPair {
    FinitePath x, y;  // equal length, aligned at index 0
    int horizon() const { return static_cast<int>(x.size()); }
};

struct AgreementBlock {
    int i = 0;
    int n = 0;
};

struct ProximalEvidence {
    int first_agreement = -1;
    std::vector<int> disagreements;        // the counted indices, ascending
    std::vector<AgreementBlock> blocks;    // (a,0) plus post-disagreement blocks
    bool geodesic_ok = false;
    std::string geodesic_check;            // "exact" or "windowed(cap)"
};

enum class ProximalStatus { WitnessFound, NoWitnessUpToBound, Inconclusive };

struct ProximalReport {
    ProximalStatus status = ProximalStatus::Inconclusive;
    Bounds bounds;
    std::optional<RayPair> pair;
    ProximalEvidence evidence;
    std::string reason;  // for Inconclusive
    std::uint64_t anchors_checked = 0;
    std::uint64_t pairs_checked = 0;   // (u,v) start pairs examined
    std::uint64_t states_visited = 0;  // joint DFS states (exhaustive runs)
};

const char* proximal_status_name(ProximalStatus s);

/// Checks the pattern above for one explicit pair, plus geodesicness of
/// both rays (exact when the rays are no longer than bfs_cap, otherwise on
/// all subpaths up to bfs_cap). Edges are validated against g; a pair that
/// does not live on g raises input_error.
ProximalReport verify_strict_proximal_prefix(const GraphGen& g, const RayPair& pair,
                                             const Bounds& bounds);

/// Exhaustive bounded search over pairs of geodesic rays of length
/// `horizon` started at vertices within `explore_depth` of the root.
/// Equivalent to enumerating all ray pairs, implemented as a joint search
/// anchored at the first matching edge. Deterministic for fixed bounds.
ProximalReport proximal_witness_search(const GraphGen& g, const Bounds& bounds);

}  // namespace shiftlab
