#include "quintic/lattice.hpp"

#include <utility>

namespace quintic {

namespace {

// round(a / b) for b > 0, nearest integer with ties toward zero.
SignedInt round_div(const SignedInt& a, const SignedInt& b) {
  SignedInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const int c = cmp(2 * r, b);
  if (c > 0) return q + 1;
  if (c == 0 && sgn(q) < 0) return q + 1;
  return q;
}

SignedInt dot(const Vec2& a, const Vec2& b) {
  return a.x1 * b.x1 + a.x2 * b.x2;
}

}  // namespace

Natural det2(const Basis2& b) {
  return abs(b.u.x1 * b.v.x2 - b.u.x2 * b.v.x1);
}

Natural norm2(const Vec2& v) { return v.x1 * v.x1 + v.x2 * v.x2; }

Vec2 lagrange_gauss(const Basis2& b) {
  if (det2(b) == 0)
    throw std::domain_error("lagrange_gauss: degenerate basis");
  Vec2 u = b.u, v = b.v;
  Natural nu = norm2(u), nv = norm2(v);
  if (nu > nv) {
    std::swap(u, v);
    std::swap(nu, nv);
  }
  while (true) {
    const SignedInt mu = round_div(dot(u, v), nu);
    v.x1 -= mu * u.x1;
    v.x2 -= mu * u.x2;
    nv = norm2(v);
    if (nv >= nu) break;
    std::swap(u, v);
    std::swap(nu, nv);
  }
  return u;
}

}  // namespace quintic
