#include "quintic/pairgen.hpp"

#include "quintic/lattice.hpp"

namespace quintic {

Pair compute_pair(const PairInputs& in) {
  const Natural& N = in.N.n();
  if (in.m0 < 1 || in.sigma0 < 1 || in.m < 1)
    throw std::domain_error("compute_pair: m0, sigma0, m must be >= 1");
  if (in.sigma < 1 || in.sigma > in.m)
    throw std::domain_error("compute_pair: sigma out of [1, m]");
  if (gcd(in.m, N) != 1)
    throw std::domain_error("compute_pair: m not coprime to N");
  if (gcd(in.sigma, in.m) != 1)
    throw std::domain_error("compute_pair: sigma not coprime to m");

  // gamma = N * sigma^-2 mod m; the congruence is vacuous for m = 1.
  Natural gamma = 0;
  if (in.m > 1) {
    const Modulus M(in.m);
    const Natural si = invmod(Residue(in.sigma, M), M).value();
    gamma = Residue(Residue(N, M).value() * si * si, M).value();
  }

  // Admissible (a, b) form the lattice <(1, gamma), (0, m)>; the change of
  // variables c = N*a, d = -N*m0*a + m0*sigma0^2*b turns the target
  // parallelogram into a square, and maps the lattice to <u', v'> below.
  const Natural s2 = in.m0 * in.sigma0 * in.sigma0;
  Basis2 basis{{N, -N * in.m0 + s2 * gamma}, {SignedInt(0), s2 * in.m}};
  const Vec2 w = lagrange_gauss(basis);

  SignedInt a, ra, b, rb;
  mpz_tdiv_qr(a.get_mpz_t(), ra.get_mpz_t(), w.x1.get_mpz_t(), N.get_mpz_t());
  if (ra != 0) throw std::logic_error("compute_pair: c not divisible by N");
  const SignedInt dnum = w.x2 + N * in.m0 * a;
  mpz_tdiv_qr(b.get_mpz_t(), rb.get_mpz_t(), dnum.get_mpz_t(), s2.get_mpz_t());
  if (rb != 0)
    throw std::logic_error("compute_pair: d + N*m0*a not divisible by m0*sigma0^2");
  if (a == 0 && b == 0) throw std::logic_error("compute_pair: zero pair");
  return {a, b};
}

}  // namespace quintic
