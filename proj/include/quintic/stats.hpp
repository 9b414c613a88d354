#ifndef QUINTIC_STATS_HPP
#define QUINTIC_STATS_HPP

#include <cstdint>

namespace quintic {

// Cost accounting for a factoring run. All counters are monotone
// accumulators; callers pass a RunStats* (or nullptr) into the engine.
//
// modmul_count covers every counted multiplication-then-reduction modulo N;
// polynomial products via Kronecker substitution account one unit per output
// coefficient reduction. gcd_count covers gcds taken against N.
struct RunStats {
  std::uint64_t babystep_count = 0;      // babystep modular multiplications
  std::uint64_t giantstep_count = 0;     // (sigma, sigma0) cells computed
  std::uint64_t modmul_count = 0;
  std::uint64_t gcd_count = 0;
  std::uint64_t lattice_reductions = 0;
  std::uint64_t wall_time_ms = 0;

  // Observability for tests and the CLI.
  std::uint64_t lambda = 0;              // search radius of the last search
  std::uint64_t m0_effective = 0;        // m0 used by the last search
  std::uint64_t sigma_count = 0;         // sigma values passing the gcd filter
  std::uint64_t sigma0_windows = 0;      // sigma0 iterations per sigma
  std::uint64_t exact_matches = 0;       // sort-and-match hits
  std::uint64_t collision_points = 0;    // geometric points scanned
};

}  // namespace quintic

#endif  // QUINTIC_STATS_HPP
