// Property-suite driver: one line per family, nonzero exit on any failure.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "property_suite.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260816;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failures = 0;
  try {
    for (const bd::PropertyResult& r : bd::run_property_suite(seed)) {
      std::printf("%s %s%s%s\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                  r.detail.empty() ? "" : ": ", r.detail.c_str());
      if (!r.pass) ++failures;
    }
  } catch (const std::exception& e) {
    std::printf("FAIL property suite aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
