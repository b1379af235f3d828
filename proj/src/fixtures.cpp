#include "guess/fixtures.hpp"

namespace guess::fixtures {

namespace {
const Alphabet binary{2};
}

ParitySet empty() { return empty_set(binary); }

ParitySet full() { return full_set(binary); }

ParitySet cyl1() { return compile_clopen(cylinder(binary, Word{1})); }

ParitySet one() {
  // 0: no 1 yet, 1: seen a 1
  return ParitySet(binary, 0, {0, 1, 1, 1}, {1, 2});
}

ParitySet no11() {
  // 0: no 1 yet, 1: last symbol 1, 2: seen 1 and last symbol 0, 3: seen 11
  return ParitySet(binary, 0, {0, 1, 2, 3, 2, 1, 3, 3}, {1, 2, 2, 1});
}

ParitySet inf1() {
  // state = last symbol read
  return ParitySet(binary, 0, {0, 1, 0, 1}, {1, 2});
}

OpenSet contains_1() { return OpenSet(binary, 0, {0, 1, 1, 1}, {false, true}); }

OpenSet contains_11() {
  // 0: last symbol 0 (or start), 1: last symbol 1, 2: seen 11
  return OpenSet(binary, 0, {0, 1, 0, 2, 2, 2}, {false, false, true});
}

std::vector<std::pair<std::string, ParitySet>> all() {
  return {{"F_EMPTY", empty()}, {"F_FULL", full()}, {"F_CYL1", cyl1()},
          {"F_ONE", one()},     {"F_NO11", no11()}, {"F_INF1", inf1()}};
}

}  // namespace guess::fixtures
