#include "quintic/driver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>

#include "quintic/orderfind.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

namespace {

bool is_perfect_power(const Natural& n, Natural* root, unsigned long* exp) {
  for (unsigned long k = 2; k <= lg(n); ++k) {
    const Natural r = iroot(n, k);
    Natural rk;
    mpz_pow_ui(rk.get_mpz_t(), r.get_mpz_t(), k);
    if (rk == n && r > 1) {
      if (root) *root = r;
      if (exp) *exp = k;
      return true;
    }
  }
  return false;
}

}  // namespace

Params choose_params(const Modulus& N) { return choose_params(N, {}); }

Params choose_params(const Modulus& N, const FactorOptions& opts) {
  const Natural& n = N.n();
  Params p;
  p.B = opts.smooth_bound ? *opts.smooth_bound : Natural(lg(n) / 30);
  const PrimeTable table = primes_upto(p.B);
  std::tie(p.m, p.phi_m) = primorial_and_totient(table);

  if (opts.m0_override) {
    if (*opts.m0_override < 1)
      throw std::domain_error("choose_params: m0 override must be >= 1");
    p.m0 = *opts.m0_override;
  } else {
    const Natural lgn(lg(n));
    const Natural lglgn(lg(lgn));
    Natural lgn4;
    mpz_pow_ui(lgn4.get_mpz_t(), lgn.get_mpz_t(), 4);
    const Natural t = (n * lglgn * lglgn) / lgn4;
    const Natural r = iroot(t, 5);
    Natural m0;
    mpz_cdiv_q(m0.get_mpz_t(), r.get_mpz_t(), p.m.get_mpz_t());
    p.m0 = m0 < 1 ? Natural(1) : m0;
  }
  p.D = iroot_ceil(n * n, 5);
  return p;
}

std::optional<Natural> pollard_strassen(const Modulus& N, const Natural& bound,
                                        RunStats* stats) {
  const Natural& n = N.n();
  if (bound < 2) throw std::domain_error("pollard_strassen: bound must be >= 2");
  const Natural s_big = iroot_ceil(bound, 2);
  if (!s_big.fits_ulong_p() || s_big.get_ui() > (1ul << 26))
    throw std::domain_error("pollard_strassen: bound beyond supported range");
  const unsigned long s = s_big.get_ui();

  std::vector<Natural> roots(s);
  for (unsigned long i = 0; i < s; ++i) {
    Natural r = -Natural(i + 1);
    mpz_fdiv_r(roots[i].get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  }
  const Poly f = product_tree(roots, N, stats);

  std::vector<Natural> points(s);
  for (unsigned long k = 0; k < s; ++k) {
    Natural ks = Natural(k) * s;
    mpz_fdiv_r(points[k].get_mpz_t(), ks.get_mpz_t(), n.get_mpz_t());
  }
  const std::vector<Natural> vals = multieval_tree(f, points, stats);

  for (unsigned long k = 0; k < s; ++k) {
    Natural g = gcd(n, vals[k]);
    if (stats) ++stats->gcd_count;
    if (g == 1) continue;
    // Some (k*s + i) with 1 <= i <= s shares a factor with N; the first
    // such integer overall is the smallest prime factor of N.
    for (unsigned long i = 1; i <= s; ++i) {
      const Natural d = Natural(k) * s + i;
      g = gcd(n, d);
      if (stats) ++stats->gcd_count;
      if (g > 1) {
        if (d > bound) return std::nullopt;
        return d;
      }
    }
  }
  return std::nullopt;
}

FactorOutcome factor_prime_or_semiprime(const Modulus& N, RunStats* stats,
                                        const FactorOptions& opts) {
  const Natural& n = N.n();
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("factor_prime_or_semiprime: N must be odd");
  if (is_perfect_power(n, nullptr, nullptr))
    throw std::domain_error("factor_prime_or_semiprime: N is a perfect power");

  Params params = choose_params(N, opts);

  Natural g = gcd(n, params.m);
  if (stats) ++stats->gcd_count;
  if (g == n) {
    // N divides the primorial: all its prime factors are <= B.
    for (const Natural& r : primes_upto(params.B).primes) {
      if (n == r) return Prime{};
      if (mpz_divisible_p(n.get_mpz_t(), r.get_mpz_t()))
        return make_factors(r, n);
    }
    throw std::logic_error("factor_prime_or_semiprime: primorial screen");
  }
  if (g != 1) return make_factors(g, n);

  OrderOutcome ord = element_of_large_order(N, params.D, stats);
  if (const Factors* f = std::get_if<Factors>(&ord)) return *f;
  if (std::holds_alternative<Prime>(ord)) return Prime{};
  const Residue beta = std::get<LargeOrder>(ord).beta;

  // Order guard: ord_N(beta) > D and D >= m^2 (2 lambda + 1) together give
  // ord_N(beta^(m^2)) >= 2 lambda + 1. Doubling m0 shrinks lambda; when even
  // lambda = 1 cannot satisfy the guard, the search contract is out of
  // reach and the unconditional sweep takes over.
  Natural m0 = params.m0;
  const Natural m2 = params.m * params.m;
  SearchParams sp(N, params.m, m0, beta);
  for (int rounds = 0; params.D < m2 * (2 * sp.lambda() + 1); ++rounds) {
    if (sp.lambda() == 1 || rounds > 64) {
      if (!opts.allow_fallback)
        throw std::domain_error(
            "factor_prime_or_semiprime: order guard unreachable and fallback "
            "disabled");
      std::optional<Natural> p =
          pollard_strassen(N, iroot(n, 2) + 1, stats);
      if (p) return make_factors(*p, n);
      return Prime{};
    }
    m0 <<= 1;
    sp = SearchParams(N, params.m, m0, beta);
  }
  return main_search(sp, stats, opts.search);
}

Factorization factor(const Natural& N, RunStats* stats, const FactorOptions& opts) {
  if (N < 2) throw std::domain_error("factor: N must be >= 2");
  const auto t0 = std::chrono::steady_clock::now();

  std::map<Natural, unsigned long> acc;
  std::vector<std::pair<Natural, unsigned long>> work{{N, 1}};
  while (!work.empty()) {
    auto [n, mult] = std::move(work.back());
    work.pop_back();
    if (n == 1) continue;

    if (n < opts.fallback_threshold) {
      // Small-N route: split off the least prime factor until done.
      Natural cur = std::move(n);
      while (cur > 1) {
        const Natural isq = iroot(cur, 2);
        if (isq < 2) {  // cur is 2 or 3
          acc[cur] += mult;
          break;
        }
        std::optional<Natural> p = pollard_strassen(Modulus(cur), isq, stats);
        if (!p) {  // no factor <= sqrt(cur): prime
          acc[cur] += mult;
          break;
        }
        acc[*p] += mult;
        cur /= *p;
      }
      continue;
    }

    if (mpz_even_p(n.get_mpz_t())) {
      const unsigned long twos = mpz_scan1(n.get_mpz_t(), 0);
      acc[Natural(2)] += twos * mult;
      Natural odd = n >> twos;
      if (odd > 1) work.emplace_back(std::move(odd), mult);
      continue;
    }

    Natural root;
    unsigned long exp = 0;
    if (is_perfect_power(n, &root, &exp)) {
      work.emplace_back(std::move(root), mult * exp);
      continue;
    }

    // Any third prime factor would be <= N^(1/3); sweep it out so that the
    // remaining cofactor is prime or semiprime.
    std::optional<Natural> small =
        pollard_strassen(Modulus(n), iroot(n, 3) + 1, stats);
    if (small) {
      work.emplace_back(*small, mult);
      work.emplace_back(n / *small, mult);
      continue;
    }

    FactorOutcome out = factor_prime_or_semiprime(Modulus(n), stats, opts);
    if (const Factors* f = get_factors(out)) {
      work.emplace_back(f->p, mult);
      work.emplace_back(f->q, mult);
    } else {
      acc[n] += mult;
    }
  }

  Factorization result;
  result.factors.assign(acc.begin(), acc.end());
  if (stats) {
    stats->wall_time_ms += static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
  }
  return result;
}

}  // namespace quintic
