#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "quintic/lattice.hpp"

using namespace quintic;

namespace {

// Exhaustive minimum of ||r*u + s*v||^2 over (r, s) in [-range, range]^2 \ 0.
Natural box_min_norm2(const Basis2& b, long range) {
  Natural best(-1);
  for (long r = -range; r <= range; ++r) {
    for (long s = -range; s <= range; ++s) {
      if (r == 0 && s == 0) continue;
      const Vec2 w{b.u.x1 * r + b.v.x1 * s, b.u.x2 * r + b.v.x2 * s};
      const Natural n2 = norm2(w);
      if (best < 0 || n2 < best) best = n2;
    }
  }
  return best;
}

// Cramer coefficients of w in basis b; checks exact divisibility.
void check_membership(const Basis2& b, const Vec2& w) {
  const SignedInt det = b.u.x1 * b.v.x2 - b.u.x2 * b.v.x1;
  REQUIRE(det != 0);
  const SignedInt rn = w.x1 * b.v.x2 - w.x2 * b.v.x1;
  const SignedInt sn = b.u.x1 * w.x2 - b.u.x2 * w.x1;
  SignedInt r, rr, s, sr;
  mpz_tdiv_qr(r.get_mpz_t(), rr.get_mpz_t(), rn.get_mpz_t(), det.get_mpz_t());
  mpz_tdiv_qr(s.get_mpz_t(), sr.get_mpz_t(), sn.get_mpz_t(), det.get_mpz_t());
  REQUIRE(rr == 0);
  REQUIRE(sr == 0);
  REQUIRE(w.x1 == r * b.u.x1 + s * b.v.x1);
  REQUIRE(w.x2 == r * b.u.x2 + s * b.v.x2);
}

}  // namespace

TEST_CASE("det2 on known values") {
  CHECK(det2({{SignedInt(1), SignedInt(0)}, {SignedInt(0), SignedInt(1)}}) == 1);
  CHECK(det2({{SignedInt(1), SignedInt(5)}, {SignedInt(0), SignedInt(7)}}) == 7);
  CHECK(det2({{SignedInt(3), SignedInt(4)}, {SignedInt(4), SignedInt(3)}}) == 7);
}

TEST_CASE("lagrange_gauss on known values") {
  const Basis2 id{{SignedInt(1), SignedInt(0)}, {SignedInt(0), SignedInt(1)}};
  CHECK(norm2(lagrange_gauss(id)) == 1);

  const Basis2 b{{SignedInt(3), SignedInt(4)}, {SignedInt(4), SignedInt(3)}};
  const Vec2 w = lagrange_gauss(b);
  CHECK(norm2(w) == 2);  // +-(1, -1)
  check_membership(b, w);

  CHECK_THROWS_AS(
      lagrange_gauss({{SignedInt(2), SignedInt(4)}, {SignedInt(1), SignedInt(2)}}),
      std::domain_error);
}

TEST_CASE("lagrange_gauss finds the short vector in a skew basis") {
  const Basis2 b{{SignedInt(1), SignedInt(1000000)},
                 {SignedInt(0), SignedInt(1000001)}};
  const Vec2 w = lagrange_gauss(b);
  CHECK(norm2(w) == box_min_norm2(b, 10));
  CHECK(norm2(w) == 2);
  check_membership(b, w);
}

TEST_CASE("nearly parallel long vectors reduce to a tiny vector") {
  const Basis2 b{{SignedInt(1000), SignedInt(999)},
                 {SignedInt(999), SignedInt(998)}};
  const Vec2 w = lagrange_gauss(b);
  CHECK(det2(b) == 1);
  CHECK(norm2(w) <= 4 * det2(b));
  check_membership(b, w);
}

TEST_CASE("500 random bases: box minimality, bound, membership") {
  oracles::Rng rng(31);
  int done = 0;
  while (done < 500) {
    auto entry = [&]() {
      SignedInt x = rng.below(Natural(1001));
      if (rng.u64() & 1) x = -x;
      return x;
    };
    const Basis2 b{{entry(), entry()}, {entry(), entry()}};
    const Natural det = det2(b);
    if (det == 0) continue;
    const Natural boxmin = box_min_norm2(b, 50);
    // If even the box minimum sits above the rank-2 Hermite bound, the true
    // shortest vector has coefficients outside the box; such draws cannot
    // serve as an oracle and are skipped. (norm^2 <= (2/sqrt(3)) det, so
    // 3 * norm^4 <= 4 det^2.)
    if (3 * boxmin * boxmin > 4 * det * det) continue;
    const Vec2 w = lagrange_gauss(b);
    REQUIRE(norm2(w) == boxmin);
    REQUIRE(norm2(w) <= 4 * det);
    check_membership(b, w);
    ++done;
  }
}
