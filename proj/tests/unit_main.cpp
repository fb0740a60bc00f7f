#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>

#include "doctest.h"
#include "support.hpp"

// Runs the selected suites, then fails if any table recorded by
// record_hilbert disagreed with the Hilbert series.
int main(int argc, char** argv) {
  doctest::Context context(argc, argv);
  const int status = context.run();
  if (context.shouldExit()) return status;
  const auto& tally = syzygy::test::hilbert_tally();
  std::printf("hilbert checks: %zu, failed: %zu\n", tally.checked, tally.failed);
  return status != 0 ? status : (tally.failed == 0 ? 0 : 1);
}
