#include "quintic/arith.hpp"

#include <cassert>

namespace quintic {

unsigned long lg(const Natural& n) {
  if (n < 1) throw std::domain_error("lg: n must be >= 1");
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Natural iroot(const Natural& n, unsigned long k) {
  if (k == 0) throw std::domain_error("iroot: k must be >= 1");
  if (sgn(n) < 0) throw std::domain_error("iroot: n must be >= 0");
  Natural r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Natural iroot_ceil(const Natural& n, unsigned long k) {
  Natural r = iroot(n, k);
  Natural rk;
  mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
  if (rk < n) ++r;
  return r;
}

XgcdResult xgcd(const SignedInt& x, const SignedInt& y) {
  if (x == 0 && y == 0) throw std::domain_error("xgcd: both arguments zero");
  XgcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.v.get_mpz_t(), x.get_mpz_t(),
             y.get_mpz_t());
  return r;
}

SignedInt floor_div(const SignedInt& x, const SignedInt& y) {
  if (y == 0) throw std::domain_error("floor_div: division by zero");
  SignedInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

Residue invmod(const Residue& x, const Modulus& N) {
  if (x.value() == 0) throw std::domain_error("invmod: zero has no inverse");
  XgcdResult r = xgcd(x.value(), N.n());
  if (r.g != 1) throw NonInvertible(r.g);
  return Residue(r.u, N);
}

Residue powmod(const Residue& base, const SignedInt& exp, const Modulus& N) {
  if (!(base.modulus() == N))
    throw std::domain_error("powmod: base modulus mismatch");
  Natural b = base.value();
  Natural e;
  if (sgn(exp) < 0) {
    Natural g = gcd(b, N.n());
    if (g == N.n())
      throw std::domain_error("powmod: zero base with negative exponent");
    if (g != 1) throw NonInvertible(g);
    b = invmod(base, N).value();
    e = -exp;
  } else {
    e = exp;
  }
  Natural r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), N.n().get_mpz_t());
  return Residue(r, N);
}

PrimeTable primes_upto(const Natural& B) {
  PrimeTable t;
  t.bound = B < 0 ? Natural(0) : B;
  if (B < 2) return t;
  if (!B.fits_ulong_p() || B.get_ui() > (1ul << 32))
    throw std::domain_error("primes_upto: bound too large to sieve");
  unsigned long b = B.get_ui();
  std::vector<bool> composite(b + 1, false);
  for (unsigned long p = 2; p * p <= b; ++p) {
    if (composite[p]) continue;
    for (unsigned long q = p * p; q <= b; q += p) composite[q] = true;
  }
  for (unsigned long p = 2; p <= b; ++p)
    if (!composite[p]) t.primes.emplace_back(p);
  return t;
}

std::pair<Natural, Natural> primorial_and_totient(const PrimeTable& t) {
  Natural m = 1, phi = 1;
  for (const Natural& p : t.primes) {
    m *= p;
    phi *= p - 1;
  }
  return {m, phi};
}

}  // namespace quintic
