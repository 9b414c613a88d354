#include "quintic/orderfind.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "quintic/driver.hpp"

namespace quintic {

namespace {

constexpr int kCandidateBudget = 64;

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= k; d += (d == 2 ? 1 : 2)) {
    if (k % d == 0) {
      out.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  if (k > 1) out.push_back(k);
  return out;
}

// Reduce a known multiple k of ord_N(alpha) to the exact order.
std::uint64_t reduce_to_order(const Natural& alpha, const Natural& N,
                              std::uint64_t k) {
  Natural t;
  for (std::uint64_t r : distinct_prime_factors(k)) {
    while (k % r == 0) {
      const Natural e(static_cast<unsigned long>(k / r));
      mpz_powm(t.get_mpz_t(), alpha.get_mpz_t(), e.get_mpz_t(), N.get_mpz_t());
      if (t != 1) break;
      k /= r;
    }
  }
  return k;
}

}  // namespace

std::optional<Natural> bsgs_order(const Residue& alpha, const Modulus& N,
                                  const Natural& D, RunStats* stats) {
  if (D < 1) throw std::domain_error("bsgs_order: D must be >= 1");
  {
    Natural g = gcd(alpha.value(), N.n());
    if (stats) ++stats->gcd_count;
    if (g != 1) throw NonInvertible(g);
  }
  const Natural& a = alpha.value();
  const Natural& n = N.n();
  if (a == 1) return Natural(1);

  const Natural s_big = iroot_ceil(D, 2);
  if (!s_big.fits_ulong_p() || s_big.get_ui() > (1ul << 26))
    throw std::domain_error("bsgs_order: D beyond supported search size");
  const std::uint64_t s = s_big.get_ui();

  Natural prod;
  auto mulmod = [&](Natural& r, const Natural& x, const Natural& y) {
    mpz_mul(prod.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_tdiv_r(r.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
    if (stats) ++stats->modmul_count;
  };

  std::vector<std::pair<Natural, std::uint64_t>> baby;
  baby.reserve(s);
  Natural x(1);
  for (std::uint64_t i = 0; i < s; ++i) {
    if (i >= 1 && x == 1) {
      const std::uint64_t ord = reduce_to_order(a, n, i);
      return ord <= D ? std::optional<Natural>(Natural(ord)) : std::nullopt;
    }
    baby.emplace_back(x, i);
    mulmod(x, x, a);
  }
  std::sort(baby.begin(), baby.end());
  baby.erase(std::unique(baby.begin(), baby.end(),
                         [](const auto& p, const auto& q) {
                           return p.first == q.first;
                         }),
             baby.end());

  // x = alpha^s; giantsteps walk alpha^(-js).
  const Natural ginv = invmod(Residue(x, N), N).value();
  Natural y(1);
  for (std::uint64_t j = 1; j <= s; ++j) {
    mulmod(y, y, ginv);
    auto it = std::lower_bound(
        baby.begin(), baby.end(), y,
        [](const auto& p, const Natural& v) { return p.first < v; });
    if (it != baby.end() && it->first == y) {
      const std::uint64_t k = j * s + it->second;
      const std::uint64_t ord = reduce_to_order(a, n, k);
      return ord <= D ? std::optional<Natural>(Natural(ord)) : std::nullopt;
    }
  }
  return std::nullopt;
}

OrderOutcome element_of_large_order(const Modulus& N, const Natural& D,
                                    RunStats* stats) {
  const Natural& n = N.n();
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("element_of_large_order: N must be odd");
  if (D < iroot(n * n, 5) || D > n)
    throw std::domain_error("element_of_large_order: D out of [N^(2/5), N]");
  for (unsigned long k = 2; k <= lg(n); ++k) {
    const Natural r = iroot(n, k);
    Natural rk;
    mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
    if (rk == n)
      throw std::domain_error("element_of_large_order: N is a perfect power");
  }

  const Natural isq = iroot(n, 2);
  Natural K(1);
  for (int cand = 2; cand < 2 + kCandidateBudget; ++cand) {
    if (cand >= n) break;
    const Natural alpha(cand);
    Natural g = gcd(alpha, n);
    if (stats) ++stats->gcd_count;
    if (g != 1) return make_factors(g, n);

    std::optional<Natural> k;
    try {
      k = bsgs_order(Residue(alpha, N), N, D, stats);
    } catch (const NonInvertible& e) {
      if (e.gcd() != 1 && e.gcd() != n) return make_factors(e.gcd(), n);
      throw;
    }
    if (!k) return LargeOrder{Residue(alpha, N)};

    // Known order k = ord_N(alpha): try to split N directly.
    assert(k->fits_ulong_p());
    const std::uint64_t kv = k->get_ui();
    Natural t;
    for (std::uint64_t r : distinct_prime_factors(kv)) {
      const Natural e(static_cast<unsigned long>(kv / r));
      mpz_powm(t.get_mpz_t(), alpha.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
      g = gcd(t - 1, n);
      if (stats) ++stats->gcd_count;
      if (g != 1 && g != n) return make_factors(g, n);
    }

    // No split: ord_p(alpha) = k for every prime p | N, so k | p - 1.
    mpz_lcm(K.get_mpz_t(), K.get_mpz_t(), k->get_mpz_t());
    if (K > isq) {
      // Every prime factor is 1 mod K, hence exceeds sqrt(N).
      return Prime{};
    }
  }

  // Budget exhausted with K still small; settle unconditionally.
  std::optional<Natural> p =
      pollard_strassen(N, isq < 2 ? Natural(2) : isq, stats);
  if (p) return make_factors(*p, n);
  return Prime{};
}

}  // namespace quintic
