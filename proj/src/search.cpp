#include "quintic/search.hpp"

#include <algorithm>
#include <cassert>

#include "quintic/pairgen.hpp"
#include "quintic/polyring.hpp"

namespace quintic {

namespace {

// Least l >= 1 with l^2 * (m*m0)^3 >= 16*N, by integer binary search.
Natural compute_lambda(const Natural& N, const Natural& m, const Natural& m0) {
  Natural cube;
  {
    Natural mm = m * m0;
    mpz_pow_ui(cube.get_mpz_t(), mm.get_mpz_t(), 3);
  }
  const Natural target = 16 * N;
  Natural lo(1), hi(1);
  while (hi * hi * cube < target) hi <<= 1;
  while (lo < hi) {
    Natural mid = (lo + hi) >> 1;
    if (mid * mid * cube >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

struct ModOps {
  const Natural& N;
  RunStats* stats;
  Natural prod;

  void mul(Natural& r, const Natural& a, const Natural& b) {
    mpz_mul(prod.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_tdiv_r(r.get_mpz_t(), prod.get_mpz_t(), N.get_mpz_t());
    if (stats) ++stats->modmul_count;
  }

  // base^e mod N by left-to-right binary exponentiation so every modular
  // multiplication is counted; negative e inverts the base first.
  Natural pow_signed(const Natural& base, const SignedInt& e) {
    Natural b = base;
    const Natural mag = abs(e);
    if (sgn(e) < 0) b = invmod(Residue(base, Modulus(N)), Modulus(N)).value();
    if (mag == 0) return Natural(1);
    Natural acc = b;
    const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    for (std::size_t t = bits - 1; t-- > 0;) {
      mul(acc, acc, acc);
      if (mpz_tstbit(mag.get_mpz_t(), t)) mul(acc, acc, b);
    }
    return acc;
  }

  Natural gcd_with(const Natural& x) {
    Natural g = gcd(x, N);
    if (stats) ++stats->gcd_count;
    return g;
  }

  // Allocation-free variants for the tight loops: both scratches are
  // reused, and the returned reference lives until the next call.
  Natural gscratch, dscratch;
  const Natural& gcd_scratch(const Natural& x) {
    mpz_gcd(gscratch.get_mpz_t(), x.get_mpz_t(), N.get_mpz_t());
    if (stats) ++stats->gcd_count;
    return gscratch;
  }
  const Natural& gcd_of_diff(const Natural& a, const Natural& b) {
    mpz_sub(dscratch.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return gcd_scratch(dscratch);
  }
};

}  // namespace

SearchParams::SearchParams(Modulus N, Natural m, Natural m0, Residue beta)
    : N_(std::move(N)),
      m_(std::move(m)),
      m0_(std::move(m0)),
      beta_(std::move(beta)) {
  if (m_ < 1 || m0_ < 1)
    throw std::domain_error("SearchParams: m and m0 must be >= 1");
  if (gcd(m_, N_.n()) != 1)
    throw std::domain_error("SearchParams: gcd(m, N) != 1");
  if (!(beta_.modulus() == N_))
    throw std::domain_error("SearchParams: beta modulus mismatch");
  lambda_ = compute_lambda(N_.n(), m_, m0_);
}

std::optional<std::pair<Natural, Natural>> ccheck(const Modulus& N,
                                                  const SignedInt& a,
                                                  const SignedInt& b,
                                                  const SignedInt& u) {
  Natural n4;
  mpz_pow_ui(n4.get_mpz_t(), N.n().get_mpz_t(), 4);
  if (abs(a) > n4 || abs(b) > n4 || abs(u) > n4)
    throw std::domain_error("ccheck: inputs beyond N^4");

  const SignedInt disc = u * u - 4 * a * b * N.n();
  if (disc < 0) return std::nullopt;
  if (!mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  Natural s;
  mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
  if (mpz_odd_p(SignedInt(u + s).get_mpz_t())) return std::nullopt;

  const SignedInt roots[2] = {SignedInt(u + s), SignedInt(u - s)};
  for (const SignedInt& twice : roots) {
    const SignedInt y = twice / 2;
    if (y == 0) continue;
    const Natural g = gcd(abs(y), N.n());
    if (g != 1 && g != N.n()) {
      const Factors f = make_factors(g, N.n());
      return std::make_pair(f.p, f.q);
    }
  }
  return std::nullopt;
}

FactorOutcome find_collisions(const Modulus& N, const Natural& kappa,
                              const Residue& alpha,
                              const std::vector<Natural>& v, RunStats* stats,
                              std::size_t block_len) {
  const Natural& n = N.n();
  const Poly f = product_tree(v, N, stats);
  ModOps ops{n, stats, Natural()};

  std::optional<Factors> found;
  geom_eval_stream(
      f, alpha, kappa,
      [&](std::uint64_t i, const Natural& fi) {
        if (stats) ++stats->collision_points;
        const Natural& g = ops.gcd_scratch(fi);
        if (g != 1 && g != n) {
          found = make_factors(g, n);
          return false;
        }
        if (g == n) {
          // f(alpha^i) = 0 mod N: locate the offending v_h by direct scan.
          const Natural ai = ops.pow_signed(
              alpha.value(), Natural(static_cast<unsigned long>(i)));
          for (const Natural& vh : v) {
            const Natural& g2 = ops.gcd_of_diff(vh, ai);
            if (g2 != 1 && g2 != n) {
              found = make_factors(g2, n);
              return false;
            }
          }
        }
        return true;
      },
      block_len, stats);

  if (found) return *found;
  return NoFactorsFound{};
}

FactorOutcome main_search(const SearchParams& params, RunStats* stats,
                          const SearchOptions& opts) {
  const Natural& n = params.N().n();
  if (mpz_even_p(n.get_mpz_t()))
    throw std::domain_error("main_search: N must be odd");
  {
    const Natural r = iroot(n, 2);
    if (r * r == n)
      throw std::domain_error("main_search: N must not be a perfect square");
  }
  const Natural& m = params.m();
  if (!m.fits_ulong_p() || m.get_ui() > (1ul << 26))
    throw std::domain_error("main_search: m beyond desk-scale sigma loop");
  if (!params.lambda().fits_ulong_p() ||
      params.lambda().get_ui() > (std::uint64_t{1} << 62))
    throw std::domain_error("main_search: lambda beyond supported range");
  const std::uint64_t lambda = params.lambda().get_ui();
  const std::uint64_t kappa = 2 * lambda + 1;
  if (stats) {
    stats->lambda = lambda;
    stats->m0_effective =
        params.m0().fits_ulong_p() ? params.m0().get_ui() : 0;
  }

  ModOps ops{n, stats, Natural()};

  try {
    const Natural kOne(1);
    const Natural m2 = m * m;
    const Natural alpha = ops.pow_signed(params.beta().value(), m2);
    const bool materialize = kappa <= opts.materialize_threshold;

    // Babysteps beta^(m^2 i), screened through gcd(N, beta^(m^2 i) - 1). In
    // the materialised strategy they are collected up front, as in the
    // two-list merge; otherwise they stream against the giantstep table
    // later and this stage is fused into the matching pass.
    std::vector<std::pair<Natural, std::uint64_t>> baby;
    if (materialize) {
      baby.reserve(kappa);
      Natural x(1);
      for (std::uint64_t i = 0; i < kappa; ++i) {
        if (i > 0) {
          const Natural& g = ops.gcd_of_diff(x, kOne);
          if (g != 1 && g != n) return make_factors(g, n);
        }
        baby.emplace_back(x, i);
        ops.mul(x, x, alpha);
        if (stats) ++stats->babystep_count;
      }
    }

    // Giantsteps. The sigma0 windows [sigma0, ceil((1+1/m0)*sigma0)) tile
    // [1, sqrt(N)) without overlap, so at most one cell can host the factor.
    std::vector<GiantstepRecord> recs;
    Natural nsinv;  // N * sigma^-1 mod m^2
    std::uint64_t sigma_count = 0, windows_per_sigma = 0;
    for (Natural sigma(1); sigma <= m; ++sigma) {
      if (gcd(sigma, m) != 1) continue;
      ++sigma_count;
      if (m == 1) {
        nsinv = 0;
      } else {
        const Modulus M2(m2);
        nsinv = Residue(Residue(n, M2).value() *
                            invmod(Residue(sigma, M2), M2).value(),
                        M2).value();
      }
      std::uint64_t windows = 0;
      Natural sigma0(1);
      while (sigma0 * sigma0 < n) {
        const Pair ab =
            compute_pair({params.N(), params.m0(), sigma0, m, sigma});
        if (stats) ++stats->lattice_reductions;
        Natural tau(0);
        if (m != 1)
          mpz_fdiv_r(tau.get_mpz_t(),
                     SignedInt(ab.a * nsinv + ab.b * sigma).get_mpz_t(),
                     m2.get_mpz_t());
        const SignedInt tau0 =
            floor_div(ab.a * n + ab.b * sigma0 * sigma0, sigma0 * m2);
        const SignedInt j = m2 * (tau0 - params.lambda()) + tau;
        const SignedInt e = ab.a * n + ab.b - j;
        Natural v = ops.pow_signed(params.beta().value(), e);
        recs.push_back({std::move(v), j, ab.a, ab.b, sigma, sigma0});
        if (stats) ++stats->giantstep_count;
        ++windows;
        Natural step;
        mpz_cdiv_q(step.get_mpz_t(), sigma0.get_mpz_t(),
                   params.m0().get_mpz_t());
        assert(step >= 1);
        sigma0 += step;
      }
      if (windows_per_sigma == 0) windows_per_sigma = windows;
      assert(windows == windows_per_sigma);
    }
    if (stats) {
      stats->sigma_count = sigma_count;
      stats->sigma0_windows = windows_per_sigma;
    }

    // Sort the giantstep table by residue value (ties by creation order).
    std::vector<std::uint32_t> order(recs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) {
                const int c = cmp(recs[x].v, recs[y].v);
                if (c != 0) return c < 0;
                return x < y;
              });

    std::vector<bool> matched(recs.size(), false);
    std::optional<Factors> early;

    // Exact-match screening: every babystep equal to a giantstep in Z_N
    // feeds ccheck with u = m^2 i + j. All ties are reported.
    auto match_baby = [&](std::uint64_t i, const Natural& x) -> bool {
      auto it = std::lower_bound(
          order.begin(), order.end(), x,
          [&](std::uint32_t r, const Natural& v) { return recs[r].v < v; });
      for (; it != order.end() && recs[*it].v == x; ++it) {
        matched[*it] = true;
        if (stats) ++stats->exact_matches;
        const GiantstepRecord& rec = recs[*it];
        const SignedInt u =
            m2 * Natural(static_cast<unsigned long>(i)) + rec.j;
        auto pq = ccheck(params.N(), rec.a, rec.b, u);
        if (pq) {
          early = Factors{pq->first, pq->second};
          return false;
        }
      }
      return true;
    };

    if (materialize) {
      std::sort(baby.begin(), baby.end());
      for (std::size_t t = 0; t + 1 < baby.size(); ++t) {
        if (baby[t].first == baby[t + 1].first)
          throw std::logic_error(
              "main_search: babysteps not distinct; order contract violated");
      }
      for (const auto& [val, i] : baby) {
        if (!match_baby(i, val)) break;
      }
    } else {
      Natural x(1);
      for (std::uint64_t i = 0; i < kappa && !early; ++i) {
        if (i > 0) {
          const Natural& g = ops.gcd_of_diff(x, kOne);
          if (g != 1 && g != n) return make_factors(g, n);
        }
        if (!match_baby(i, x)) break;
        ops.mul(x, x, alpha);
        if (stats) ++stats->babystep_count;
      }
    }
    if (early) return *early;

    // Collision stage on the giantsteps that matched no babystep.
    std::vector<Natural> remaining;
    remaining.reserve(recs.size());
    for (std::size_t r = 0; r < recs.size(); ++r)
      if (!matched[r]) remaining.push_back(recs[r].v);
    if (!remaining.empty()) {
      FactorOutcome fc = find_collisions(
          params.N(), Natural(static_cast<unsigned long>(kappa)),
          Residue(alpha, params.N()), remaining, stats, opts.block_len);
      if (const Factors* f = get_factors(fc)) return *f;
    }
    return Prime{};
  } catch (const NonInvertible& e) {
    if (e.gcd() != 1 && e.gcd() != n) return make_factors(e.gcd(), n);
    throw;
  }
}

}  // namespace quintic
