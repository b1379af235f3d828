#pragma once

#include <string>
#include <utility>
#include <vector>

#include "guess/space.hpp"

// Reference sets over the binary alphabet used across tests, the
// acceptance suite and the CLI's `--fixture` option.
namespace guess::fixtures {

ParitySet empty();     // no point
ParitySet full();      // every point
ParitySet cyl1();      // f(0) = 1
ParitySet one();       // some f(n) = 1
ParitySet no11();      // contains a 1, never the factor 11
ParitySet inf1();      // f(n) = 1 infinitely often

OpenSet contains_1();
OpenSet contains_11();

// The six named sets in a fixed order, with their names.
std::vector<std::pair<std::string, ParitySet>> all();

}  // namespace guess::fixtures
