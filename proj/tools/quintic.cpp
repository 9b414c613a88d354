// quintic: deterministic integer factorisation from the command line.
//
//   quintic factor <N> [--json] [--stats] [--m0 K] [--smooth-bound B]
//                      [--fallback-threshold T] [--no-fallback] [--verify]
//                      [--threads K]
//   quintic bench --bits A..B --engines quintic,pollard-strassen,trial
//                 [--seed S]
//
// Exit codes: 0 success, 2 malformed input, 3 internal failure.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quintic/driver.hpp"
#include "quintic/orderfind.hpp"

namespace {

using quintic::Factorization;
using quintic::FactorOptions;
using quintic::Modulus;
using quintic::Natural;
using quintic::RunStats;

bool parse_natural(const std::string& text, Natural& out) {
  if (text.empty()) return false;
  std::string body = text;
  int base = 10;
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
    body = body.substr(2);
    base = 16;
  }
  if (body.empty()) return false;
  if (mpz_set_str(out.get_mpz_t(), body.c_str(), base) != 0) return false;
  return out >= 0;
}

// Deterministic Miller-Rabin with the 12-prime base set, a correct primality
// test for n < 3.3e24. Used only for --verify; the engine itself never
// relies on it.
bool mr_probable_prime(const Natural& n) {
  static const int bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (int b : bases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  Natural d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  Natural x;
  for (int b : bases) {
    Natural base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool verified_prime(const Natural& p, const FactorOptions& opts) {
  Natural limit;
  mpz_set_str(limit.get_mpz_t(), "3317044064679887385961980", 10);
  if (p < limit) return mr_probable_prime(p);
  Factorization f = quintic::factor(p, nullptr, opts);
  return f.factors.size() == 1 && f.factors[0].first == p &&
         f.factors[0].second == 1;
}

std::string format_factors(const Factorization& f) {
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) out += " * ";
    out += f.factors[i].first.get_str();
    if (f.factors[i].second > 1)
      out += "^" + std::to_string(f.factors[i].second);
  }
  return out;
}

nlohmann::json stats_json(const RunStats& st) {
  return {{"babystep_count", st.babystep_count},
          {"giantstep_count", st.giantstep_count},
          {"modmul_count", st.modmul_count},
          {"gcd_count", st.gcd_count},
          {"lattice_reductions", st.lattice_reductions},
          {"wall_time_ms", st.wall_time_ms},
          {"lambda", st.lambda},
          {"sigma_count", st.sigma_count},
          {"sigma0_windows", st.sigma0_windows},
          {"exact_matches", st.exact_matches},
          {"collision_points", st.collision_points}};
}

int cmd_factor(const std::string& arg, bool json_out, bool show_stats,
               bool verify, const FactorOptions& opts) {
  Natural n;
  if (!parse_natural(arg, n) || n < 2) {
    std::cerr << "error: expected an integer >= 2, got '" << arg << "'\n";
    return 2;
  }

  RunStats st;
  Factorization f = quintic::factor(n, &st, opts);

  if (verify) {
    if (f.product() != n) {
      std::cerr << "verify: product of factors does not match input\n";
      return 3;
    }
    for (const auto& [p, e] : f.factors) {
      if (!verified_prime(p, opts)) {
        std::cerr << "verify: reported factor " << p.get_str()
                  << " failed the primality check\n";
        return 3;
      }
    }
  }

  const quintic::Params params = quintic::choose_params(Modulus(n), opts);
  if (json_out) {
    nlohmann::json j;
    j["n"] = n.get_str();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, e] : f.factors)
      arr.push_back({p.get_str(), e});
    j["factors"] = arr;
    j["stats"] = stats_json(st);
    j["params"] = {{"B", params.B.get_str()},
                   {"m", params.m.get_str()},
                   {"phi_m", params.phi_m.get_str()},
                   {"m0", params.m0.get_str()},
                   {"D", params.D.get_str()},
                   {"fallback_threshold", opts.fallback_threshold.get_str()}};
    if (verify) j["verified"] = true;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << n.get_str() << " = " << format_factors(f) << "\n";
    if (show_stats) {
      std::cout << "# babysteps " << st.babystep_count << ", giantsteps "
                << st.giantstep_count << ", modmul " << st.modmul_count
                << ", gcd " << st.gcd_count << ", lattice "
                << st.lattice_reductions << ", lambda " << st.lambda
                << ", wall_ms " << st.wall_time_ms << "\n";
    }
  }
  return 0;
}

// Smallest prime >= n, by trial division. Bench input generation only.
Natural next_prime_at_least(Natural n) {
  if (n <= 2) return Natural(2);
  if (mpz_even_p(n.get_mpz_t())) ++n;
  while (true) {
    bool comp = false;
    for (Natural d(3); d * d <= n; d += 2) {
      if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        comp = true;
        break;
      }
    }
    if (!comp) return n;
    n += 2;
  }
}

// The bench semiprime for a given size: p is the least prime above
// 2^(floor(bits/2)-1) + seed, q the least prime making p*q land on exactly
// `bits` bits. Reproducible bit for bit.
Natural bench_semiprime(unsigned bits, unsigned long seed) {
  const unsigned pb = bits / 2;
  Natural p = next_prime_at_least((Natural(1) << (pb - 1)) + seed);
  Natural lo = (Natural(1) << (bits - 1)) + 1;
  Natural q0;
  mpz_cdiv_q(q0.get_mpz_t(), lo.get_mpz_t(), p.get_mpz_t());
  Natural q = next_prime_at_least(q0);
  if (q == p) q = next_prime_at_least(q + 1);
  return p * q;
}

void trial_division_factor(const Natural& n0, RunStats* st) {
  Natural n = n0;
  while (mpz_even_p(n.get_mpz_t())) {
    n >>= 1;
    if (st) ++st->modmul_count;
  }
  for (Natural d(3); d * d <= n; d += 2) {
    if (st) ++st->modmul_count;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      if (st) ++st->modmul_count;
    }
  }
}

int cmd_bench(const std::string& bits_range, const std::string& engines_arg,
              unsigned long seed) {
  unsigned lo = 0, hi = 0;
  const auto dots = bits_range.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoul(bits_range);
    } else {
      lo = std::stoul(bits_range.substr(0, dots));
      hi = std::stoul(bits_range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    std::cerr << "error: bad --bits range '" << bits_range << "'\n";
    return 2;
  }
  if (lo < 8) {
    std::cerr << "error: bench sizes start at 8 bits\n";
    return 2;
  }

  std::vector<std::string> engines;
  for (std::size_t pos = 0; pos <= engines_arg.size();) {
    auto comma = engines_arg.find(',', pos);
    if (comma == std::string::npos) comma = engines_arg.size();
    if (comma > pos) engines.push_back(engines_arg.substr(pos, comma - pos));
    pos = comma + 1;
  }
  for (const std::string& e : engines) {
    if (e != "quintic" && e != "pollard-strassen" && e != "trial") {
      std::cerr << "error: unknown engine '" << e << "'\n";
      return 2;
    }
  }

  std::cout << "bits,engine,modmul_count,wall_time_ms\n";
  for (unsigned bits = lo; bits <= hi; ++bits) {
    const Natural n = bench_semiprime(bits, seed);
    for (const std::string& e : engines) {
      RunStats st;
      const auto t0 = std::chrono::steady_clock::now();
      if (e == "quintic") {
        FactorOptions opts;
        opts.allow_fallback = false;
        quintic::factor_prime_or_semiprime(Modulus(n), &st, opts);
      } else if (e == "pollard-strassen") {
        Natural cur = n;
        while (cur > 1) {
          const Natural isq = quintic::iroot(cur, 2);
          if (isq < 2) break;
          auto p = quintic::pollard_strassen(Modulus(cur), isq, &st);
          if (!p) break;
          cur /= *p;
        }
      } else {
        trial_division_factor(n, &st);
      }
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
      std::cout << bits << "," << e << "," << st.modmul_count << "," << ms
                << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quintic: deterministic integer factorisation engine"};
  app.require_subcommand(1);

  std::string number;
  bool json_out = false, show_stats = false, verify = false, no_fallback = false;
  std::string m0_arg, smooth_arg, thresh_arg;
  unsigned threads = 1;
  auto* fac = app.add_subcommand("factor", "factor an integer");
  fac->add_option("N", number, "integer >= 2 (decimal or 0x hex)")->required();
  fac->add_flag("--json", json_out, "emit a JSON report");
  fac->add_flag("--stats", show_stats, "print cost counters");
  fac->add_flag("--verify", verify,
                "re-multiply and primality-check every reported prime");
  fac->add_option("--m0", m0_arg, "pin the window parameter m0");
  fac->add_option("--smooth-bound", smooth_arg,
                  "pin the smoothness bound B (and thereby m)");
  fac->add_option("--fallback-threshold", thresh_arg,
                  "route N below this through the factor sweep (default 2^60)");
  fac->add_flag("--no-fallback", no_fallback,
                "disable the unconditional sweep fallback");
  fac->add_option("--threads", threads,
                  "worker hint; stages currently run sequentially");

  std::string bits_range, engines = "quintic";
  unsigned long seed = 1;
  auto* bench = app.add_subcommand("bench", "factor seeded semiprimes, CSV out");
  bench->add_option("--bits", bits_range, "size range, e.g. 40..56")->required();
  bench->add_option("--engines", engines,
                    "comma list: quintic,pollard-strassen,trial");
  bench->add_option("--seed", seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (fac->parsed()) {
      FactorOptions opts;
      opts.allow_fallback = !no_fallback;
      Natural tmp;
      if (!m0_arg.empty()) {
        if (!parse_natural(m0_arg, tmp) || tmp < 1) {
          std::cerr << "error: bad --m0\n";
          return 2;
        }
        opts.m0_override = tmp;
      }
      if (!smooth_arg.empty()) {
        if (!parse_natural(smooth_arg, tmp) || tmp > 100000000) {
          std::cerr << "error: bad --smooth-bound (expected 0..1e8)\n";
          return 2;
        }
        opts.smooth_bound = tmp;
      }
      if (!thresh_arg.empty()) {
        if (!parse_natural(thresh_arg, tmp)) {
          std::cerr << "error: bad --fallback-threshold\n";
          return 2;
        }
        opts.fallback_threshold = tmp;
      }
      (void)threads;
      return cmd_factor(number, json_out, show_stats, verify, opts);
    }
    return cmd_bench(bits_range, engines, seed);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
