#pragma once
// Error taxonomy used across the library and surfaced by the CLI:
//   ConfigError   — malformed or out-of-policy input (CLI exit code 2)
//   ComputeError  — a computation could not be carried out soundly, e.g.
//                   genericity trials disagreed or a truncation bound was
//                   exceeded mid-check (also exit code 2; never guessed away)
// Check FAILURES (a verified property that does not hold) are not exceptions;
// operations report them in their result structs and the CLI exits 1.

#include <stdexcept>
#include <string>

namespace bd {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ComputeError : std::runtime_error {
  explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bd
