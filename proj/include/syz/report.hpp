#pragma once

#include <string>

#include "syz/rational.hpp"

namespace syz {

// Regenerates the reference tables (Veronese status grid, the per-genus
// certification thresholds, the Mukai summand thresholds) from the public
// certification entry points. Every number in the output is computed, none
// is transcribed; the committed golden copy guards against regressions.
std::string generate_reference_tables();

// Smallest integer value of nu at which the quadratic rule certifies the
// given level, found by upward scan.
Int quadratic_threshold(int genus, const Int& p);

// Smallest q at which the Mukai-type check certifies the given level.
Int mukai_threshold(int genus, const Int& rank, const Int& tau, const Int& p);

}  // namespace syz
