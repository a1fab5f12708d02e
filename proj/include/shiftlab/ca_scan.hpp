// ca_scan.hpp -- blocking-word refutation and directional sensitivity scans.
//
// A blocking candidate (w, e, p) for a radius-r code claims the cells
// [p, p+e-1] of the orbit are determined by w alone. refute_blocking
// searches for two member extensions of w inside the dependence cone whose
// orbits split that window within N steps; finding one refutes the
// candidate. A direction p/q is scanned by refuting candidates against
// sigma^p o F^q; directions where every candidate is refuted carry evidence
// of sensitivity at the bound (never a proof), and surviving candidates are
// reported as such.
#pragma once

#include "shiftlab/membership.hpp"
#include "shiftlab/sliding_block.hpp"

#include <cstdint>
#include <optional>

namespace shiftlab {

struct BlockingCandidate {
    Word w;
    int e = 1;
    int p_off = 0;
};

struct RefutationResult {
    enum class Status { Refuted, SurvivedBound };
    Status status = Status::SurvivedBound;
    // refutation witness: two member configurations in cyl(w, 0)
    std::optional<Configuration> x, y;
    int step = 0;  // first n with differing windows
    std::int64_t cone_lo = 0, cone_hi = 0;
    std::uint64_t pairs_tried = 0;
    bool exhausted = true;  // all member pairs tried (meaningful for survivors)
};

/// Enumerates pairs of member extensions of w over the dependence cone
/// (cells under w fixed, cells outside the cone pinned to the family's
/// fixed point) and runs N steps. Extensions are enumerated symbol-
/// lexicographically with cell significance ordered farthest-from-window
/// first, so near-window differences are tried earliest; the first
/// diverging pair in this order wins. Refuted witnesses are re-validated
/// for membership on a widened window before being reported.
RefutationResult refute_blocking(const SlidingBlockCode& g, const SpecPtr& domain,
                                 const BlockingCandidate& cand, int steps,
                                 std::uint64_t pair_budget = 1u << 20);

struct Direction {
    int p = 0;
    int q = 1;
    void validate() const;
    std::string describe() const;
};

/// All coprime p/q with |p| <= 3, q <= 2, ordered by (q, p).
std::vector<Direction> default_directions();

struct DirectionScan {
    Direction dir;
    std::uint64_t candidates = 0;
    std::uint64_t refuted = 0;
    std::vector<BlockingCandidate> survivors;  // capped
    bool all_exhausted = true;  // every survivor exhausted its enumeration
};

struct SensitivityReport {
    std::vector<DirectionScan> directions;
    int max_word_len = 0;
    int steps = 0;

    bool all_refuted() const {
        for (const auto& d : directions)
            if (!d.survivors.empty())
                return false;
        return true;
    }
};

/// For each direction builds sigma^p o f^q and refutes every blocking
/// candidate with |w| <= max_word_len. Candidate order: words in
/// length-then-lex order, then e ascending, then p_off ascending.
SensitivityReport sensitivity_scan(const SlidingBlockCode& f, const SpecPtr& domain,
                                   const std::vector<Direction>& directions,
                                   int max_word_len, int steps,
                                   size_t survivor_cap = 16);

}  // namespace shiftlab
