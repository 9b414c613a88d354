#ifndef QUINTIC_ORDERFIND_HPP
#define QUINTIC_ORDERFIND_HPP

#include <optional>
#include <variant>

#include "quintic/arith.hpp"
#include "quintic/outcome.hpp"
#include "quintic/stats.hpp"

namespace quintic {

// An element of Z_N^* whose multiplicative order exceeds the requested D.
struct LargeOrder {
  Residue beta;
};

using OrderOutcome = std::variant<LargeOrder, Factors, Prime>;

// ord_N(alpha) if it is <= D, otherwise nullopt. Baby-step giant-step with
// s = ceil(sqrt(D)): any match alpha^i = alpha^(-js) yields a multiple
// js + i of the order, which is then reduced exactly by stripping prime
// factors. Requires gcd(alpha, N) = 1 (throws NonInvertible) and D >= 1.
std::optional<Natural> bsgs_order(const Residue& alpha, const Modulus& N,
                                  const Natural& D, RunStats* stats = nullptr);

// Produces one of: beta in Z_N^* with ord_N(beta) > D, a nontrivial factor
// split of N, or a proof that N is prime. Requires N odd, not a perfect
// power, and iroot(N^2, 5) <= D <= N.
//
// Candidates alpha = 2, 3, ... are probed in order (budget 64). A failed
// order search certifies ord_N(alpha) > D. A found order k either splits N
// through gcd(alpha^(k/r) - 1, N), or proves k | p - 1 for every prime
// p | N; once the lcm K of such k exceeds sqrt(N), every prime factor would
// have to be 1 mod K and hence > sqrt(N), so N is prime. If the budget runs
// out, an unconditional factor sweep up to sqrt(N) settles the question.
OrderOutcome element_of_large_order(const Modulus& N, const Natural& D,
                                    RunStats* stats = nullptr);

}  // namespace quintic

#endif  // QUINTIC_ORDERFIND_HPP
