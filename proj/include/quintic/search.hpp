#ifndef QUINTIC_SEARCH_HPP
#define QUINTIC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quintic/arith.hpp"
#include "quintic/outcome.hpp"
#include "quintic/stats.hpp"

namespace quintic {

// Inputs of the main search. lambda is fixed by the other fields: the least
// l >= 1 with l^2 * (m*m0)^3 >= 16*N, i.e. ceil(4*sqrt(N)/(m*m0)^(3/2)).
// The caller guarantees ord_N(beta^(m^2)) >= 2*lambda + 1.
class SearchParams {
 public:
  SearchParams(Modulus N, Natural m, Natural m0, Residue beta);

  const Modulus& N() const noexcept { return N_; }
  const Natural& m() const noexcept { return m_; }
  const Natural& m0() const noexcept { return m0_; }
  const Residue& beta() const noexcept { return beta_; }
  const Natural& lambda() const noexcept { return lambda_; }

 private:
  Modulus N_;
  Natural m_;
  Natural m0_;
  Residue beta_;
  Natural lambda_;
};

// One giantstep cell: v = beta^(a*N + b - j) mod N.
struct GiantstepRecord {
  Natural v;
  SignedInt j;
  SignedInt a;
  SignedInt b;
  Natural sigma;
  Natural sigma0;
};

struct SearchOptions {
  // Babysteps are materialised and merge-matched when 2*lambda+1 is at most
  // this; above it they stream against the sorted giantstep table, which
  // keeps memory at O(#giantsteps). Outcomes are identical.
  std::uint64_t materialize_threshold = std::uint64_t{1} << 20;
  std::size_t block_len = 0;  // geometric evaluation block size, 0 = auto
};

// Tests whether u = aq + bp for the semiprime factorisation N = pq, and if
// so recovers (p, q): aq and bp are the roots of y^2 - u*y + a*b*N. Inputs
// larger than N^4 in magnitude are rejected.
std::optional<std::pair<Natural, Natural>> ccheck(const Modulus& N,
                                                  const SignedInt& a,
                                                  const SignedInt& b,
                                                  const SignedInt& u);

// Collision finding: if N = pq and some v_h matches alpha^i modulo p or q
// with i < kappa, returns the factors. Requires ord_N(alpha) >= kappa and
// that no v_h equals alpha^i in Z_N itself.
FactorOutcome find_collisions(const Modulus& N, const Natural& kappa,
                              const Residue& alpha,
                              const std::vector<Natural>& v,
                              RunStats* stats = nullptr,
                              std::size_t block_len = 0);

// The main search: factors semiprime N or proves N prime. Requires N odd,
// not a perfect square, gcd(N, m) = 1, and the order contract on beta.
FactorOutcome main_search(const SearchParams& params, RunStats* stats = nullptr,
                          const SearchOptions& opts = {});

}  // namespace quintic

#endif  // QUINTIC_SEARCH_HPP
