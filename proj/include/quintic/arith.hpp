#ifndef QUINTIC_ARITH_HPP
#define QUINTIC_ARITH_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace quintic {

// Arbitrary-precision integers, backed by GMP. `Natural` values are
// nonnegative by convention; functions taking a Natural reject negative
// arguments at run time. GMP stores sign + magnitude with no leading zero
// limbs, so both aliases are canonical by construction.
using Natural = mpz_class;
using SignedInt = mpz_class;

// Thrown when a modular inverse does not exist. Carries g = gcd(x, N).
// For 1 < g < N this is good news in context: g splits N.
class NonInvertible : public std::runtime_error {
 public:
  explicit NonInvertible(Natural g)
      : std::runtime_error("non-invertible element, gcd = " + g.get_str()),
        gcd_(std::move(g)) {}
  const Natural& gcd() const noexcept { return gcd_; }

 private:
  Natural gcd_;
};

// A modulus N >= 2.
class Modulus {
 public:
  explicit Modulus(Natural n) : n_(std::move(n)) {
    if (n_ < 2) throw std::domain_error("Modulus: n must be >= 2");
  }
  const Natural& n() const noexcept { return n_; }
  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.n_ == b.n_;
  }

 private:
  Natural n_;
};

// An element of Z_N, kept in canonical form 0 <= value < N.
class Residue {
 public:
  Residue(const SignedInt& value, Modulus m) : mod_(std::move(m)) {
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), mod_.n().get_mpz_t());
  }
  const Natural& value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return mod_; }

 private:
  Natural value_;
  Modulus mod_;
};

// All primes <= bound, strictly increasing.
struct PrimeTable {
  Natural bound;
  std::vector<Natural> primes;
};

// Bit length: lg(n) = floor(log2 n) + 1 for n >= 1.
unsigned long lg(const Natural& n);

// Floor k-th root: r with r^k <= n < (r+1)^k. Requires k >= 1, n >= 0.
Natural iroot(const Natural& n, unsigned long k);

// Ceiling k-th root: least r with r^k >= n.
Natural iroot_ceil(const Natural& n, unsigned long k);

struct XgcdResult {
  Natural g;
  SignedInt u;
  SignedInt v;
};

// g = gcd(|x|, |y|) with u*x + v*y = g. Rejects (0, 0).
XgcdResult xgcd(const SignedInt& x, const SignedInt& y);

// floor(x / y), rounding toward minus infinity. Rejects y = 0.
SignedInt floor_div(const SignedInt& x, const SignedInt& y);

// base^exp mod N. Negative exponents invert the base first; g = gcd(base, N)
// with 1 < g < N throws NonInvertible(g), g = N with exp < 0 is a domain
// error (zero base cannot be inverted).
Residue powmod(const Residue& base, const SignedInt& exp, const Modulus& N);

// Inverse of x in Z_N^*. Throws NonInvertible(g) when gcd(x, N) = g != 1;
// x = 0 yields a domain error.
Residue invmod(const Residue& x, const Modulus& N);

// Sieve of Eratosthenes. B < 2 gives an empty table.
PrimeTable primes_upto(const Natural& B);

// m = product of the listed primes (empty product = 1) and phi = prod (r-1),
// which is Euler's totient of m since m is squarefree.
std::pair<Natural, Natural> primorial_and_totient(const PrimeTable& t);

}  // namespace quintic

#endif  // QUINTIC_ARITH_HPP
