// generators.hpp -- the canonical cover graphs of the builtin families.
//
// Each generator realizes the right-resolving cover of its family with the
// family's standard root: the empty stack for Dyck, run length 0 for S-gap,
// prefix index -1 for beta shifts. Out-edge lists are sorted by label code.
#pragma once

#include "shiftlab/graph.hpp"
#include "shiftlab/shift_spec.hpp"

namespace shiftlab {

GraphGen dyck_fischer(int n);
GraphGen sgap_fischer(const GapSet& gaps);
GraphGen beta_fischer(const DigitStream& digits);

/// Cover generator for a spec: builtin generators for the base families,
/// tensor products for products, star graphs for star-studded specs.
/// SFTs have no builtin generator and raise input_error.
GraphGen fischer_of(const SpecPtr& spec);

}  // namespace shiftlab
