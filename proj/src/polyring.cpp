#include "quintic/polyring.hpp"

#include <gmp.h>

#include <algorithm>
#include <cassert>
#include <cstring>

namespace quintic {

namespace {

void add_modmul(RunStats* stats, std::uint64_t n) {
  if (stats) stats->modmul_count += n;
}

// r <- a*b mod N, with a scratch product to avoid reallocation churn.
struct MulMod {
  const Natural& N;
  RunStats* stats;
  Natural t;

  void operator()(Natural& r, const Natural& a, const Natural& b) {
    mpz_mul(t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_tdiv_r(r.get_mpz_t(), t.get_mpz_t(), N.get_mpz_t());
    add_modmul(stats, 1);
  }
};

std::size_t kron_stride_limbs(const Natural& N, std::size_t minlen) {
  std::size_t nbits = mpz_sizeinbase(N.get_mpz_t(), 2);
  std::size_t carry = 1;
  while ((std::size_t{1} << carry) <= minlen) ++carry;
  return (2 * nbits + carry + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
}

void kron_pack(const std::vector<Natural>& a, std::size_t stride,
               std::vector<mp_limb_t>& buf) {
  buf.assign(stride * a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t sz = mpz_size(a[i].get_mpz_t());
    assert(sz <= stride);
    std::memcpy(buf.data() + i * stride, mpz_limbs_read(a[i].get_mpz_t()),
                sz * sizeof(mp_limb_t));
  }
}

// Coefficients [lo, hi) of a*b over Z_N, via one integer product. All input
// coefficients must be canonical residues so the packed slots cannot
// overflow the stride.
void kron_mul_range(const std::vector<Natural>& a, const std::vector<Natural>& b,
                    const Natural& N, std::size_t lo, std::size_t hi,
                    std::vector<Natural>& out, RunStats* stats) {
  const std::size_t stride = kron_stride_limbs(N, std::min(a.size(), b.size()));
  std::vector<mp_limb_t> pa, pb;
  kron_pack(a, stride, pa);
  kron_pack(b, stride, pb);
  Natural A, B, C;
  mpz_import(A.get_mpz_t(), pa.size(), -1, sizeof(mp_limb_t), 0, 0, pa.data());
  mpz_import(B.get_mpz_t(), pb.size(), -1, sizeof(mp_limb_t), 0, 0, pb.data());
  mpz_mul(C.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());

  const mp_limb_t* cl = mpz_limbs_read(C.get_mpz_t());
  const std::size_t csz = mpz_size(C.get_mpz_t());
  Natural slot;
  out.resize(hi - lo);
  for (std::size_t k = lo; k < hi; ++k) {
    const std::size_t off = k * stride;
    const std::size_t take = off >= csz ? 0 : std::min(stride, csz - off);
    if (take == 0) {
      out[k - lo] = 0;
      continue;
    }
    mpz_import(slot.get_mpz_t(), take, -1, sizeof(mp_limb_t), 0, 0, cl + off);
    mpz_tdiv_r(out[k - lo].get_mpz_t(), slot.get_mpz_t(), N.get_mpz_t());
  }
  add_modmul(stats, hi - lo);
}

bool is_zero_poly(const std::vector<Natural>& a) {
  return std::all_of(a.begin(), a.end(),
                     [](const Natural& c) { return c == 0; });
}

// Full product of coefficient vectors; schoolbook below a small threshold.
std::vector<Natural> vec_mul(const std::vector<Natural>& a,
                             const std::vector<Natural>& b, const Natural& N,
                             RunStats* stats) {
  if (is_zero_poly(a) || is_zero_poly(b)) return {Natural(0)};
  const std::size_t out_len = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= 16) {
    std::vector<Natural> acc(out_len, Natural(0));
    Natural t;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
    for (Natural& c : acc) mpz_tdiv_r(c.get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
    add_modmul(stats, out_len);
    return acc;
  }
  std::vector<Natural> out;
  kron_mul_range(a, b, N, 0, out_len, out, stats);
  return out;
}

std::vector<Natural> vec_mul_trunc(const std::vector<Natural>& a,
                                   const std::vector<Natural>& b,
                                   const Natural& N, std::size_t prec,
                                   RunStats* stats) {
  std::vector<Natural> r = vec_mul(a, b, N, stats);
  if (r.size() > prec) r.resize(prec);
  return r;
}

// Inverse of a power series with constant term 1, modulo x^prec.
std::vector<Natural> series_inverse(const std::vector<Natural>& a,
                                    const Natural& N, std::size_t prec,
                                    RunStats* stats) {
  assert(!a.empty() && a[0] == 1);
  std::vector<Natural> v{Natural(1)};
  std::size_t t = 1;
  while (t < prec) {
    const std::size_t t2 = std::min(2 * t, prec);
    std::vector<Natural> at(a.begin(), a.begin() + std::min(a.size(), t2));
    std::vector<Natural> av = vec_mul_trunc(at, v, N, t2, stats);
    av.resize(t2, Natural(0));
    // w = 2 - a*v
    std::vector<Natural> w(t2);
    for (std::size_t i = 0; i < t2; ++i) {
      Natural c = (i == 0 ? Natural(2) : Natural(0)) - av[i];
      mpz_fdiv_r(w[i].get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
    }
    v = vec_mul_trunc(v, w, N, t2, stats);
    v.resize(t2, Natural(0));
    t = t2;
  }
  return v;
}

// f = q*g + r with deg r < deg g, for monic g. Reversal + Newton inversion,
// so no coefficient of g needs to be invertible apart from the leading 1.
void divrem_monic(const std::vector<Natural>& f, const std::vector<Natural>& g,
                  const Natural& N, std::vector<Natural>& r, RunStats* stats) {
  assert(!g.empty() && g.back() == 1);
  if (g.size() == 1) {  // g = 1
    r = {Natural(0)};
    return;
  }
  if (f.size() < g.size()) {
    r = f;
    return;
  }
  const std::size_t k = f.size() - g.size() + 1;
  std::vector<Natural> rf(f.rbegin(), f.rend());
  std::vector<Natural> rg(g.rbegin(), g.rend());
  if (rg.size() > k) rg.resize(k);
  std::vector<Natural> inv = series_inverse(rg, N, k, stats);
  std::vector<Natural> qrev = vec_mul_trunc(rf, inv, N, k, stats);
  qrev.resize(k, Natural(0));
  std::vector<Natural> q(qrev.rbegin(), qrev.rend());
  std::vector<Natural> qg = vec_mul(q, g, N, stats);
  const std::size_t rlen = g.size() - 1;
  r.resize(rlen);
  Natural c;
  for (std::size_t i = 0; i < rlen; ++i) {
    c = f[i] - (i < qg.size() ? qg[i] : Natural(0));
    mpz_fdiv_r(r[i].get_mpz_t(), c.get_mpz_t(), N.get_mpz_t());
  }
}

std::vector<Natural> linear_root_poly(const Natural& v, const Natural& N) {
  Natural c0;
  Natural nv = -v;
  mpz_fdiv_r(c0.get_mpz_t(), nv.get_mpz_t(), N.get_mpz_t());
  return {c0, Natural(1)};
}

}  // namespace

Poly::Poly(std::vector<Natural> coeffs, Modulus N)
    : coeffs_(std::move(coeffs)), mod_(std::move(N)) {
  if (coeffs_.empty()) coeffs_.push_back(Natural(0));
  for (Natural& c : coeffs_)
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod_.n().get_mpz_t());
}

Poly poly_mul(const Poly& f, const Poly& g, RunStats* stats) {
  if (!(f.modulus() == g.modulus()))
    throw std::domain_error("poly_mul: modulus mismatch");
  return Poly(vec_mul(f.coeffs(), g.coeffs(), f.modulus().n(), stats),
              f.modulus());
}

Poly product_tree(const std::vector<Natural>& v, const Modulus& N,
                  RunStats* stats) {
  if (v.empty()) return Poly::one(N);
  std::vector<std::vector<Natural>> level;
  level.reserve(v.size());
  for (const Natural& x : v) {
    if (x < 0 || x >= N.n()) {
      Natural red;
      mpz_fdiv_r(red.get_mpz_t(), x.get_mpz_t(), N.n().get_mpz_t());
      level.push_back(linear_root_poly(red, N.n()));
    } else {
      level.push_back(linear_root_poly(x, N.n()));
    }
  }
  while (level.size() > 1) {
    std::vector<std::vector<Natural>> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(vec_mul(level[i], level[i + 1], N.n(), stats));
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return Poly(std::move(level.front()), N);
}

bool geom_eval_stream(const Poly& f, const Residue& alpha,
                      const Natural& kappa,
                      const std::function<bool(std::uint64_t, const Natural&)>& sink,
                      std::size_t block_len, RunStats* stats) {
  const Modulus& N = f.modulus();
  if (!(alpha.modulus() == N))
    throw std::domain_error("geom_eval: alpha modulus mismatch");
  if (kappa < 1) throw std::domain_error("geom_eval: kappa must be >= 1");
  if (!kappa.fits_ulong_p())
    throw std::domain_error("geom_eval: kappa beyond supported range");
  const std::uint64_t kap = kappa.get_ui();
  const Natural& n_ = N.n();
  const Natural ainv = invmod(alpha, N).value();  // throws NonInvertible
  const Natural& a = alpha.value();

  MulMod mul{n_, stats, Natural()};
  const std::size_t n = f.degree();

  // g_j = c_j * ainv^C(j,2), stored reversed so the product against the
  // chirp sequence is a plain convolution.
  std::vector<Natural> grev(n + 1);
  {
    Natural jpow(1), jchirp(1);
    for (std::size_t j = 0; j <= n; ++j) {
      mul(grev[n - j], f[j], jchirp);
      mul(jchirp, jchirp, jpow);
      mul(jpow, jpow, ainv);
    }
  }

  std::size_t L = block_len;
  if (L == 0) {
    std::size_t target = std::max<std::size_t>(
        2 * (n + 1), static_cast<std::size_t>(std::min<std::uint64_t>(
                         kap, std::uint64_t{1} << 26) /
                     256));
    L = std::clamp<std::size_t>(target, 512, std::size_t{1} << 20);
  }

  // h_k = a^C(k,2) for a sliding window of indices; the tail of each block
  // overlaps the head of the next by n entries.
  std::vector<Natural> h;
  Natural hpow(1), hchirp(1);
  std::uint64_t hnext = 0;  // next k to generate
  Natural ichirp(1), ipow(1), out;
  std::vector<Natural> conv;

  std::uint64_t i0 = 0;
  while (i0 < kap) {
    const std::size_t blk =
        static_cast<std::size_t>(std::min<std::uint64_t>(L, kap - i0));
    const std::size_t need = blk + n;  // h indices [i0, i0+need)
    if (i0 == 0) {
      h.resize(need);
    } else {
      // keep last n entries, which are h[i0 .. i0+n)
      for (std::size_t t = 0; t < n; ++t) h[t] = h[h.size() - n + t];
      h.resize(need);
    }
    std::size_t fill_from = i0 == 0 ? 0 : n;
    for (std::size_t t = fill_from; t < need; ++t) {
      assert(hnext == i0 + t);
      h[t] = hchirp;
      mul(hchirp, hchirp, hpow);
      mul(hpow, hpow, a);
      ++hnext;
    }
    kron_mul_range(grev, h, n_, n, n + blk, conv, stats);
    for (std::size_t t = 0; t < blk; ++t) {
      mul(out, conv[t], ichirp);
      if (!sink(i0 + t, out)) return false;
      mul(ichirp, ichirp, ipow);
      mul(ipow, ipow, ainv);
    }
    i0 += blk;
  }
  return true;
}

std::vector<Natural> geom_eval(const Poly& f, const Residue& alpha,
                               const Natural& kappa, const Modulus& N,
                               RunStats* stats) {
  if (!(f.modulus() == N))
    throw std::domain_error("geom_eval: polynomial modulus mismatch");
  std::vector<Natural> out;
  out.reserve(kappa.fits_ulong_p() ? kappa.get_ui() : 0);
  geom_eval_stream(
      f, alpha, kappa,
      [&](std::uint64_t, const Natural& v) {
        out.push_back(v);
        return true;
      },
      0, stats);
  return out;
}

std::vector<Natural> multieval_tree(const Poly& f,
                                    const std::vector<Natural>& points,
                                    RunStats* stats) {
  const Natural& N = f.modulus().n();
  if (points.empty()) return {};

  // Subproduct tree, leaves first.
  std::vector<std::vector<std::vector<Natural>>> levels;
  levels.emplace_back();
  levels.back().reserve(points.size());
  for (const Natural& p : points) {
    Natural red;
    mpz_fdiv_r(red.get_mpz_t(), p.get_mpz_t(), N.get_mpz_t());
    levels.back().push_back(linear_root_poly(red, N));
  }
  while (levels.back().size() > 1) {
    const auto& cur = levels.back();
    std::vector<std::vector<Natural>> next;
    next.reserve((cur.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < cur.size(); i += 2)
      next.push_back(vec_mul(cur[i], cur[i + 1], N, stats));
    if (cur.size() % 2 == 1) next.push_back(cur.back());
    levels.push_back(std::move(next));
  }

  // Remainder tree, root down. rem[l][i] = f mod levels[l][i].
  std::vector<std::vector<Natural>> cur_rem(1);
  divrem_monic(f.coeffs(), levels.back()[0], N, cur_rem[0], stats);
  for (std::size_t l = levels.size() - 1; l-- > 0;) {
    const auto& nodes = levels[l];
    std::vector<std::vector<Natural>> next_rem(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::vector<Natural>& parent = cur_rem[i / 2];
      if (i == nodes.size() - 1 && nodes.size() % 2 == 1) {
        next_rem[i] = parent;  // odd node carried up unchanged
      } else {
        divrem_monic(parent, nodes[i], N, next_rem[i], stats);
      }
    }
    cur_rem = std::move(next_rem);
  }

  std::vector<Natural> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    // leaf remainder is a constant: f mod (x - p) = f(p)
    out[i] = cur_rem[i].empty() ? Natural(0) : cur_rem[i][0];
  }
  return out;
}

}  // namespace quintic
