// Acceptance suite. Usage: acceptance <1..9|all>. One pass/fail line per
// criterion; exit code is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "quintic/driver.hpp"
#include "quintic/lattice.hpp"
#include "quintic/orderfind.hpp"
#include "quintic/pairgen.hpp"
#include "quintic/polyring.hpp"
#include "quintic/search.hpp"

using namespace quintic;
using oracles::Int;

namespace {

struct Report {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

// ---- criterion 1: exhaustive agreement with trial division on [2, 1e5] ----
Report criterion1() {
  Report rep;
  const unsigned long limit = 100000;
  // smallest-prime-factor sieve as the independent oracle
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (unsigned long p = 2; p <= limit; ++p) {
    if (spf[p]) continue;
    for (unsigned long q = p; q <= limit; q += p)
      if (!spf[q]) spf[q] = static_cast<std::uint32_t>(p);
  }

  const auto t0 = std::chrono::steady_clock::now();
  unsigned long mismatches = 0;
  for (unsigned long n = 2; n <= limit; ++n) {
    const Factorization got = factor(Natural(n));
    unsigned long m = n;
    bool ok = true;
    std::size_t idx = 0;
    while (m > 1) {
      const unsigned long p = spf[m];
      unsigned long e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (idx >= got.factors.size() || got.factors[idx].first != p ||
          got.factors[idx].second != e) {
        ok = false;
        break;
      }
      ++idx;
    }
    if (ok && idx != got.factors.size()) ok = false;
    if (!ok && ++mismatches < 4)
      rep.fail("mismatch at N = " + std::to_string(n));
  }
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (mismatches) rep.fail(std::to_string(mismatches) + " mismatches");
  if (secs >= 600) rep.fail("took " + std::to_string(secs) + "s (>= 600)");
  rep.detail += (rep.detail.empty() ? "" : "; ") + std::to_string(limit - 1) +
                " inputs in " + std::to_string(secs) + "s";
  return rep;
}

// ---- criterion 2: semiprime suite through factor_prime_or_semiprime ----
Report criterion2() {
  Report rep;
  FactorOptions opts;
  opts.allow_fallback = false;

  oracles::Rng rng(1002);
  unsigned done = 0, ok = 0;
  while (done < 200) {
    const Int p = oracles::next_prime_at_least(
        rng.range(Int(1000), Int(1000000)));
    const Int q = oracles::next_prime_at_least(
        rng.range(Int(1000), Int(1000000)));
    if (p == q || p > 1000000 || q > 1000000) continue;
    ++done;
    const FactorOutcome out =
        factor_prime_or_semiprime(Modulus(p * q), nullptr, opts);
    const Factors* f = get_factors(out);
    if (f && f->p == std::min(p, q) && f->q == std::max(p, q)) ++ok;
  }
  if (ok != 200)
    rep.fail("small semiprimes: " + std::to_string(ok) + "/200 recovered");

  unsigned big_ok = 0;
  for (unsigned k = 0; k < 50; ++k) {
    const unsigned pb = 30 + (k % 11);
    const unsigned qb = 30 + ((7 * k + 3) % 11);
    const Int p =
        oracles::next_prime_at_least((Int(1) << (pb - 1)) + 101 * k + 3);
    Int q = oracles::next_prime_at_least((Int(1) << (qb - 1)) + 997 * k + 11);
    if (q == p) q = oracles::next_prime_at_least(q + 1);
    const FactorOutcome out =
        factor_prime_or_semiprime(Modulus(p * q), nullptr, opts);
    const Factors* f = get_factors(out);
    if (f && f->p == std::min(p, q) && f->q == std::max(p, q)) ++big_ok;
  }
  if (big_ok != 50)
    rep.fail("30-40 bit factors: " + std::to_string(big_ok) + "/50 recovered");
  rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("250/250 exact");
  return rep;
}

// ---- criterion 3: pair computation postconditions, integer-evaluated ----
Report criterion3() {
  Report rep;
  oracles::Rng rng(1003);
  const std::vector<unsigned long> ms{1, 2, 3, 5, 6, 30, 210, 2310};
  unsigned done = 0;
  while (done < 200) {
    const Int p =
        oracles::next_prime_at_least(rng.range(Int(1000), Int(100000)));
    const Int q =
        oracles::next_prime_at_least(rng.range(Int(1000), Int(100000)));
    if (p == q || p > 100000 || q > 100000) continue;
    const Int N = p * q;
    const Natural m(ms[rng.u64() % ms.size()]);
    if (gcd(Natural(N), m) != 1) continue;
    const Natural m0 = rng.range(Int(1), Int(50));
    Natural sigma = p % m;
    if (sigma == 0) sigma = m;
    Natural room;
    mpz_cdiv_q(room.get_mpz_t(), p.get_mpz_t(), Natural(m0 + 1).get_mpz_t());
    const Natural sigma0 = p - rng.below(room);
    if (!(sigma0 <= p && m0 * p < (m0 + 1) * sigma0)) continue;
    ++done;

    const Pair ab = compute_pair({Modulus(N), m0, sigma0, m, sigma});
    if (ab.a == 0 && ab.b == 0) {
      rep.fail("zero pair");
      continue;
    }
    // (3.7): b = gamma a (mod m)
    if (m > 1) {
      const Modulus M{m};
      const Natural si = invmod(Residue(sigma, M), M).value();
      const Natural gamma =
          Residue(Residue(Natural(N), M).value() * si * si, M).value();
      if ((ab.b - gamma * ab.a) % m != 0) rep.fail("congruence (3.7)");
    }
    // (3.8): c^2, d^2 <= 4 N m m0 sigma0^2
    const SignedInt c = N * ab.a;
    const SignedInt d = -N * m0 * ab.a + m0 * sigma0 * sigma0 * ab.b;
    const Natural bound = 4 * Natural(N) * m * m0 * sigma0 * sigma0;
    if (!(c * c <= bound && d * d <= bound)) rep.fail("bound (3.8)");
    // (3.3): |sigma0 (aq+bp) - (aN + b sigma0^2)|^2 m0^3 <= 16 N m sigma0^2
    const SignedInt aqbp = ab.a * q + ab.b * p;
    const SignedInt dev = sigma0 * aqbp - (ab.a * N + ab.b * sigma0 * sigma0);
    if (!(dev * dev * m0 * m0 * m0 <= 16 * Natural(N) * m * sigma0 * sigma0))
      rep.fail("proximity (3.3)");
    // (3.4): sigma (aq+bp) = aN + b sigma^2 (mod m^2)
    const SignedInt cong = sigma * aqbp - (ab.a * N + ab.b * sigma * sigma);
    if (cong % (m * m) != 0) rep.fail("congruence (3.4)");
  }
  if (rep.pass) rep.detail = "200/200 instances exact";
  return rep;
}

// ---- criterion 4: lattice reduction vs brute-force box minimum ----
Report criterion4() {
  Report rep;
  oracles::Rng rng(1004);
  unsigned done = 0, skipped = 0;
  while (done < 500) {
    auto entry = [&]() {
      SignedInt x = rng.below(Int(1001));
      if (rng.u64() & 1) x = -x;
      return x;
    };
    const Basis2 b{{entry(), entry()}, {entry(), entry()}};
    const Natural det = det2(b);
    if (det == 0) continue;

    Natural boxmin(-1);
    for (long r = -50; r <= 50; ++r) {
      for (long s = -50; s <= 50; ++s) {
        if (r == 0 && s == 0) continue;
        const Vec2 w{b.u.x1 * r + b.v.x1 * s, b.u.x2 * r + b.v.x2 * s};
        const Natural n2 = norm2(w);
        if (boxmin < 0 || n2 < boxmin) boxmin = n2;
      }
    }
    // Hermite: a shortest vector has norm^2 <= (2/sqrt(3)) det. If even the
    // box minimum violates that, the optimum lies outside the box and the
    // draw cannot serve as an oracle.
    if (3 * boxmin * boxmin > 4 * det * det) {
      ++skipped;
      continue;
    }
    ++done;
    const Vec2 w = lagrange_gauss(b);
    if (norm2(w) != boxmin) rep.fail("norm != box minimum");
    if (norm2(w) > 4 * det) rep.fail("norm^2 > 4 det");
  }
  if (rep.pass)
    rep.detail = "500/500 minimal (" + std::to_string(skipped) +
                 " draws outside the oracle box skipped)";
  return rep;
}

// ---- criterion 5: evaluation oracles vs Horner ----
Report criterion5() {
  Report rep;
  oracles::Rng rng(1005);
  unsigned bad_geom = 0, bad_multi = 0;
  for (int t = 0; t < 100; ++t) {
    const Int n = rng.range(Int(2), Int("18446744073709551616"));
    const Modulus N{Natural(n)};
    std::vector<Natural> c(1 + rng.u64() % 60);
    for (auto& x : c) x = rng.below(n);
    const Poly f(c, N);

    Natural alpha = rng.range(Int(1), n - 1);
    while (gcd(alpha, Natural(n)) != 1) alpha = rng.range(Int(1), n - 1);
    const unsigned long kappa = 1 + rng.u64() % 80;
    const auto vals = geom_eval(f, Residue(alpha, N), Natural(kappa), N);
    Natural x(1);
    for (unsigned long i = 0; i < kappa; ++i) {
      if (vals[i] != oracles::horner(f.coeffs(), x, n)) ++bad_geom;
      x = (x * alpha) % n;
    }

    std::vector<Natural> pts(1 + rng.u64() % 50);
    for (auto& p : pts) p = rng.below(n);
    const auto mv = multieval_tree(f, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mv[i] != oracles::horner(f.coeffs(), pts[i], n)) ++bad_multi;
  }
  if (bad_geom) rep.fail(std::to_string(bad_geom) + " geometric mismatches");
  if (bad_multi) rep.fail(std::to_string(bad_multi) + " multipoint mismatches");
  if (rep.pass) rep.detail = "100+100 instances exact, composite moduli included";
  return rep;
}

// ---- criterion 6: collision finder vs brute-force double loop ----
Report criterion6() {
  Report rep;
  oracles::Rng rng(1006);
  unsigned done = 0;
  while (done < 100) {
    Natural n;
    if (rng.u64() & 1) {
      n = oracles::next_prime_at_least(rng.range(Int(20), Int(9000)));
    } else {
      const Int p = oracles::next_prime_at_least(rng.range(Int(3), Int(97)));
      const Int q = oracles::next_prime_at_least(rng.range(Int(3), Int(97)));
      if (p == q) continue;
      n = p * q;
    }
    if (n > 10000) continue;
    const Natural alpha = rng.range(Int(2), Int(n - 1));
    if (gcd(alpha, n) != 1) continue;
    const std::uint64_t ord = oracles::brute_order(alpha, n);
    if (ord < 2) continue;
    const std::uint64_t kappa = 1 + rng.u64() % std::min<std::uint64_t>(ord, 64);

    std::vector<Natural> powers;
    Natural x(1);
    for (std::uint64_t i = 0; i < kappa; ++i) {
      powers.push_back(x);
      x = (x * alpha) % n;
    }
    std::vector<Natural> v;
    const std::size_t nv = 1 + rng.u64() % 24;
    while (v.size() < nv) {
      const Natural cand = rng.below(n);
      bool hit = false;
      for (const Natural& pw : powers)
        if (pw == cand) hit = true;
      if (!hit) v.push_back(cand);
    }
    ++done;

    const FactorOutcome got = find_collisions(
        Modulus(n), Natural(kappa), Residue(alpha, Modulus(n)), v);

    // brute force over all h, i, both gcd directions
    FactorOutcome want = NoFactorsFound{};
    Natural ai(1);
    bool found = false;
    for (std::uint64_t i = 0; i < kappa && !found; ++i) {
      for (const Natural& vh : v) {
        const Natural g = gcd(Natural(abs(vh - ai)), n);
        if (g != 1 && g != n) {
          want = make_factors(g, n);
          found = true;
          break;
        }
      }
      ai = (ai * alpha) % n;
    }

    const Factors* fg = get_factors(got);
    const Factors* fw = get_factors(want);
    const bool same = (fg == nullptr) == (fw == nullptr) &&
                      (!fg || (fg->p == fw->p && fg->q == fw->q));
    if (!same) rep.fail("disagreement at instance " + std::to_string(done));
  }
  if (rep.pass) rep.detail = "100/100 instances agree, including no-factor cases";
  return rep;
}

// ---- criterion 7: cost accounting on instrumented runs ----
Report criterion7() {
  Report rep;
  FactorOptions opts;
  opts.allow_fallback = false;
  oracles::Rng rng(1007);
  unsigned runs = 0;
  while (runs < 20) {
    const Int p =
        oracles::next_prime_at_least(rng.range(Int(10000), Int(2000000)));
    const Int q =
        oracles::next_prime_at_least(rng.range(Int(10000), Int(2000000)));
    if (p == q) continue;
    RunStats st;
    const FactorOutcome out =
        factor_prime_or_semiprime(Modulus(p * q), &st, opts);
    // Runs that split N in the babystep gcd screen (or before the search)
    // stop short of the full 2*lambda+1 products by design; the exact count
    // is a property of completed babystep stages, which are the runs where
    // the giantstep stage was reached.
    if (st.giantstep_count == 0) continue;
    ++runs;
    if (get_factors(out) == nullptr) rep.fail("semiprime not factored");
    if (st.babystep_count != 2 * st.lambda + 1)
      rep.fail("babystep muls " + std::to_string(st.babystep_count) +
               " != 2*lambda+1 = " + std::to_string(2 * st.lambda + 1));
    if (st.giantstep_count != st.sigma_count * st.sigma0_windows)
      rep.fail("giantstep count != phi(m) * windows");
    const std::uint64_t wbound =
        lg(Natural(p * q)) * st.m0_effective + 1;
    if (st.sigma0_windows > wbound)
      rep.fail("window count " + std::to_string(st.sigma0_windows) +
               " > lg(N)*m0+1 = " + std::to_string(wbound));
  }
  if (rep.pass) rep.detail = "20/20 runs: babysteps exact, windows within bound";
  return rep;
}

// ---- criterion 8: parameter balance and the primorial window ----
Report criterion8() {
  Report rep;
  for (int bits : {64, 80, 96}) {
    const Natural n = Natural(1) << bits;
    const Params p = choose_params(Modulus(n));
    const Natural lgn(lg(n));
    const Natural lglgn(lg(lgn));
    Natural lgn4;
    mpz_pow_ui(lgn4.get_mpz_t(), lgn.get_mpz_t(), 4);
    const Natural r = iroot((n * lglgn * lglgn) / lgn4, 5);
    const Natural mm0 = p.m * p.m0;
    if (!(mm0 <= 4 * r && 4 * mm0 >= r))
      rep.fail("m*m0 off balance at 2^" + std::to_string(bits));
  }
  if (rep.pass) rep.detail = "m*m0 within factor 4 at 2^64, 2^80, 2^96";

  // Primorial window N^(1/21) < m < N^(1/20) at the stated threshold
  // lg N = 1860 (B = 62). Checked exactly on B and m.
  {
    const Natural n = Natural(1) << 1859;  // lg = 1860, B = 62
    const unsigned long B = lg(n) / 30;
    const auto [m, phi] = primorial_and_totient(primes_upto(Natural(B)));
    Natural m21, m20;
    mpz_pow_ui(m21.get_mpz_t(), m.get_mpz_t(), 21);
    mpz_pow_ui(m20.get_mpz_t(), m.get_mpz_t(), 20);
    const bool lower = m21 > n;  // N^(1/21) < m
    const bool upper = m20 < n;  // m < N^(1/20)
    if (!lower || !upper) {
      std::string msg = "window fails at lg N = 1860 (B = " +
                        std::to_string(B) + "): ";
      if (!lower)
        msg += "m ~ 2^" + std::to_string(lg(m) - 1) + " < N^(1/21) ~ 2^" +
               std::to_string(1860 / 21);
      if (!upper) msg += " and m >= N^(1/20)";
      // locate the first smoothness bound where the window truly opens
      unsigned long first_ok = 0;
      {
        const PrimeTable all = primes_upto(Natural(7000));
        Natural mm(1);
        std::size_t idx = 0;
        for (unsigned long b = 2; b <= 7000 && !first_ok; ++b) {
          while (idx < all.primes.size() && all.primes[idx] <= b)
            mm *= all.primes[idx++];
          Natural lo, hi;
          mpz_pow_ui(lo.get_mpz_t(), mm.get_mpz_t(), 21);
          mpz_pow_ui(hi.get_mpz_t(), mm.get_mpz_t(), 20);
          // window must hold for every N with floor(lg N / 30) = b
          const Natural nmax = (Natural(1) << (30 * b + 29)) - 1;
          const Natural nmin = Natural(1) << (30 * b - 1);
          if (lo > nmax && hi < nmin) first_ok = b;
        }
      }
      msg += "; window first holds for every input at B = " +
             std::to_string(first_ok) + " (lg N ~ " +
             std::to_string(first_ok * 30) + ")";
      rep.fail(msg);
    }
  }
  return rep;
}

// ---- criterion 9: primality by-product on 40..64-bit primes ----
Report criterion9() {
  Report rep;
  unsigned ok = 0;
  for (unsigned k = 0; k < 50; ++k) {
    const unsigned bits = 40 + (k % 25);
    const Int p =
        oracles::next_prime_at_least((Int(1) << (bits - 1)) + 12345 * k + 7);
    if (!oracles::mr_is_prime(p)) {
      rep.fail("oracle disagrees on generated prime");
      continue;
    }
    const Factorization f = factor(Natural(p));
    if (f.factors.size() == 1 && f.factors[0].first == p &&
        f.factors[0].second == 1)
      ++ok;
    else
      rep.fail("prime " + p.get_str() + " not reported prime");
  }
  if (ok != 50) rep.fail(std::to_string(ok) + "/50 verdicts");
  if (rep.pass) rep.detail = "50/50 Prime verdicts, zero false results";
  return rep;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Report()> run;
};

const Criterion kCriteria[] = {
    {1, "exhaustive correctness on [2, 1e5]", criterion1},
    {2, "semiprime suite, fallback disabled", criterion2},
    {3, "pair computation property suite", criterion3},
    {4, "lattice oracle", criterion4},
    {5, "evaluation oracles", criterion5},
    {6, "collision oracle", criterion6},
    {7, "cost accounting", criterion7},
    {8, "parameter balance", criterion8},
    {9, "primality by-product", criterion9},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <1..9|all>\n");
    return 64;
  }
  const bool all = std::strcmp(argv[1], "all") == 0;
  const int want = all ? 0 : std::atoi(argv[1]);
  if (!all && (want < 1 || want > 9)) {
    std::fprintf(stderr, "usage: acceptance <1..9|all>\n");
    return 64;
  }

  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!all && c.id != want) continue;
    const Report rep = c.run();
    std::printf("[%s] criterion %d: %s%s%s\n", rep.pass ? "PASS" : "FAIL",
                c.id, c.name, rep.detail.empty() ? "" : " -- ",
                rep.detail.c_str());
    std::fflush(stdout);
    if (!rep.pass) ++failures;
  }
  return failures;
}
