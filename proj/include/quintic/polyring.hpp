#ifndef QUINTIC_POLYRING_HPP
#define QUINTIC_POLYRING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "quintic/arith.hpp"
#include "quintic/stats.hpp"

namespace quintic {

// Dense polynomial over Z_N, coefficient of x^i at index i. All coefficients
// share the modulus and are kept canonical in [0, N). The zero polynomial is
// the single coefficient [0]; product-tree outputs are monic.
class Poly {
 public:
  Poly(std::vector<Natural> coeffs, Modulus N);

  std::size_t length() const noexcept { return coeffs_.size(); }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const Natural& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Natural>& coeffs() const noexcept { return coeffs_; }
  const Modulus& modulus() const noexcept { return mod_; }

  static Poly one(const Modulus& N) { return Poly({Natural(1)}, N); }

 private:
  std::vector<Natural> coeffs_;
  Modulus mod_;
};

// Exact product in Z_N[x]. Kronecker substitution onto integer
// multiplication above a small schoolbook threshold.
Poly poly_mul(const Poly& f, const Poly& g, RunStats* stats = nullptr);

// Monic polynomial (x - v_1)...(x - v_n); empty input gives the constant 1.
Poly product_tree(const std::vector<Natural>& v, const Modulus& N,
                  RunStats* stats = nullptr);

// f(alpha^0), f(alpha^1), ..., f(alpha^(kappa-1)) via the chirp decomposition
// i*j = C(i+j,2) - C(i,2) - C(j,2). Requires gcd(alpha, N) = 1 (throws
// NonInvertible otherwise) and kappa >= 1.
std::vector<Natural> geom_eval(const Poly& f, const Residue& alpha,
                               const Natural& kappa, const Modulus& N,
                               RunStats* stats = nullptr);

// Streaming variant of geom_eval: emits sink(i, f(alpha^i)) for i ascending,
// buffering block_len points at a time (0 picks a size from deg f). Stops
// early, returning false, when the sink returns false. geom_eval is exactly
// this with a collecting sink.
bool geom_eval_stream(const Poly& f, const Residue& alpha,
                      const Natural& kappa,
                      const std::function<bool(std::uint64_t, const Natural&)>& sink,
                      std::size_t block_len = 0, RunStats* stats = nullptr);

// f(points[i]) for every i, via subproduct tree and remainder tree.
std::vector<Natural> multieval_tree(const Poly& f,
                                    const std::vector<Natural>& points,
                                    RunStats* stats = nullptr);

}  // namespace quintic

#endif  // QUINTIC_POLYRING_HPP
