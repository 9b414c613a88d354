#ifndef QUINTIC_PAIRGEN_HPP
#define QUINTIC_PAIRGEN_HPP

#include "quintic/arith.hpp"

namespace quintic {

// Inputs for the giantstep coefficient computation. Requires m0, sigma0,
// m >= 1, gcd(m, N) = 1, gcd(sigma, m) = 1 and 1 <= sigma <= m.
struct PairInputs {
  Modulus N;
  Natural m0;
  Natural sigma0;
  Natural m;
  Natural sigma;
};

struct Pair {
  SignedInt a;
  SignedInt b;
};

// Computes (a, b) != (0, 0) with b = gamma*a (mod m) for
// gamma = N * sigma^-2 mod m, and with c = N*a, d = -N*m0*a + m0*sigma0^2*b
// satisfying c^2, d^2 <= 4*N*m*m0*sigma0^2. For any semiprime N = pq with
// sigma0 <= p < (1 + 1/m0)*sigma0 and p = sigma (mod m), the combination
// aq + bp then lies within 4*sqrt(N*m/m0^3) of a*N/sigma0 + b*sigma0 and is
// congruent to a*N/sigma + b*sigma modulo m^2.
Pair compute_pair(const PairInputs& in);

}  // namespace quintic

#endif  // QUINTIC_PAIRGEN_HPP
