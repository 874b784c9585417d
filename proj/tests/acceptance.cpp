#include <cstdio>
#include <cstdlib>

#include "grlie/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 12345;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto results = grlie::run_acceptance_suite(seed);
  int fails = 0;
  for (auto& r : results) {
    std::printf("criterion %2d [%s]: %s (%.1fs)\n", r.id, r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.seconds);
    if (!r.pass) {
      ++fails;
      std::printf("%s\n", r.detail.c_str());
    }
  }
  if (fails == 0)
    std::printf("OK: %d/%d criteria passed\n", (int)results.size(),
                (int)results.size());
  else
    std::printf("FAILED: %d of %d criteria\n", fails, (int)results.size());
  return fails ? 1 : 0;
}
