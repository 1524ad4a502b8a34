#pragma once

#include <cstdint>

namespace demkit {

/// Guardrails for the exact solvers. Exceeding one raises CapExceeded.
struct SolverLimits {
  int max_n = 24;                         // vertices, hard ceiling 64
  std::int64_t max_enumerated = 100000;   // minimum sets listed by enumeration
  int comparison_max_n = 12;              // brute-force metric dimension solvers
};

/// Default limits, with max_n taken from DEMKIT_MAX_N when it is set to a
/// positive integer.
SolverLimits limits_from_environment();

}  // namespace demkit
