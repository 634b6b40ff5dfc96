// Command-line front end; all logic lives in bd/config.hpp so the test
// suite can drive the same code in process.

#include <chrono>
#include <iostream>
#include <vector>

#include "bd/config.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto t0 = std::chrono::steady_clock::now();
  bd::RunResult r = bd::run_command(args);
  const auto t1 = std::chrono::steady_clock::now();
  if (!r.out.empty() && !r.wrote_file) std::cout << r.out;
  if (!r.err.empty()) std::cerr << r.err;
  const double ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0)
          .count();
  std::cerr << "wall time: " << ms << " ms\n";
  return r.code;
}
