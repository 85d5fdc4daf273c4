#ifndef LOTSIZER_TESTS_SUPPORT_TEST_SEED_HPP_
#define LOTSIZER_TESTS_SUPPORT_TEST_SEED_HPP_

#include <cstdint>
#include <cstdlib>
#include <string>

namespace lotsizer::testing {

// Seed for every randomized suite. Override with LOTSIZER_SEED to reproduce
// a failure; the default keeps runs deterministic.
inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("LOTSIZER_SEED")) {
    return std::stoull(std::string(env));
  }
  return 0x10757a3eULL;
}

}  // namespace lotsizer::testing

#endif  // LOTSIZER_TESTS_SUPPORT_TEST_SEED_HPP_
