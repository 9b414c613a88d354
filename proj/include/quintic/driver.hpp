#ifndef QUINTIC_DRIVER_HPP
#define QUINTIC_DRIVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "quintic/arith.hpp"
#include "quintic/outcome.hpp"
#include "quintic/search.hpp"
#include "quintic/stats.hpp"

namespace quintic {

// Engine parameters for one prime-or-semiprime input:
//   B = floor(lg N / 30), m = primorial of primes <= B, phi_m = phi(m),
//   m0 = ceil(iroot(floor(N * lg(lg N)^2 / lg(N)^4), 5) / m) clamped to >= 1,
//   D = least D with D^5 >= N^2.
struct Params {
  Natural B;
  Natural m;
  Natural phi_m;
  Natural m0;
  Natural D;
};

// Complete prime factorisation, primes ascending.
struct Factorization {
  std::vector<std::pair<Natural, unsigned long>> factors;

  Natural product() const {
    Natural n(1), pk;
    for (const auto& [p, e] : factors) {
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
      n *= pk;
    }
    return n;
  }
};

struct FactorOptions {
  std::optional<Natural> m0_override;      // pin m0, skipping the formula
  std::optional<Natural> smooth_bound;     // pin B, and thereby m
  Natural fallback_threshold = Natural(1) << 60;  // small-N routing bound
  bool allow_fallback = true;  // factor sweep when the order guard fails
  SearchOptions search;
};

Params choose_params(const Modulus& N);
Params choose_params(const Modulus& N, const FactorOptions& opts);

// Smallest prime factor of N that is <= bound, or nullopt. Blocked sweep:
// with s = ceil(sqrt(bound)), f(x) = (x+1)...(x+s) is built by product tree
// and evaluated at 0, s, 2s, ... by remainder tree; a block whose value
// shares a factor with N is then scanned directly. Requires bound >= 2.
std::optional<Natural> pollard_strassen(const Modulus& N, const Natural& bound,
                                        RunStats* stats = nullptr);

// Factors a semiprime or proves a prime, per the engine pipeline: parameter
// selection, a gcd screen against m, an element of order > D, then the main
// search. Requires N odd, not a perfect power, with no prime factor <= lg N.
FactorOutcome factor_prime_or_semiprime(const Modulus& N,
                                        RunStats* stats = nullptr,
                                        const FactorOptions& opts = {});

// Complete verified prime factorisation of any N >= 2.
Factorization factor(const Natural& N, RunStats* stats = nullptr,
                     const FactorOptions& opts = {});

}  // namespace quintic

#endif  // QUINTIC_DRIVER_HPP
