#include "demkit/limits.hpp"

#include <algorithm>
#include <cstdlib>

#include "demkit/hitting_set.hpp"

namespace demkit {

SolverLimits limits_from_environment() {
  SolverLimits limits;
  if (const char* env = std::getenv("DEMKIT_MAX_N")) {
    const int n = std::atoi(env);
    if (n > 0) limits.max_n = std::min(n, kMaxMaskVertices);
  }
  return limits;
}

}  // namespace demkit
