#pragma once

// Seeded identity suite behind `dyadkit check`. Every algebraic invariant of
// the library is exercised on random cases; results come back in a fixed
// order so identical seeds give identical reports.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dyadkit {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

std::vector<PropertyResult> run_check_suite(std::uint64_t seed);

} // namespace dyadkit
