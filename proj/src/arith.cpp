#include "lacuna/arith.hpp"

#include <algorithm>

namespace lacuna {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Pollard rho (Brent's variant).  Only reached for composites with no
// factor below the trial bound, which this project's workloads never hit
// with anything large; still implemented properly.
Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedUL);
  while (true) {
    Int y = rng.get_z_range(n - 3) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1;
    const unsigned long m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs_int(x - y) % n;
        }
        d = gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      do {
        ys = (ys * ys + c) % n;
        d = gcd(abs_int(x - ys), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int FactoredInteger::value() const {
  Int v = sign;
  for (const auto& [p, e] : factors) v *= pow_int(p, e);
  return v;
}

unsigned FactoredInteger::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Int FactoredInteger::greatest_prime() const {
  return factors.empty() ? Int(1) : factors.back().first;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

FactoredInteger factor(const Int& n) {
  if (n == 0) throw ArithError("factor: n = 0");
  FactoredInteger f;
  f.sign = n < 0 ? -1 : 1;
  Int m = abs_int(n);
  std::map<Int, unsigned> acc;
  for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      acc[Int(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) factor_into(m, acc);
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw ArithError("valuation: n = 0");
  if (!is_prime(p)) throw ArithError("valuation: p not prime");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::pair<Int, Int> ell_free_part(const Int& m, unsigned ell,
                                  bool sign_on_root) {
  if (m == 0) throw ArithError("ell_free_part: m = 0");
  FactoredInteger f = factor(m);
  Int a = f.sign, x = 1;
  for (const auto& [p, e] : f.factors) {
    a *= pow_int(p, e % ell);
    x *= pow_int(p, e / ell);
  }
  if (sign_on_root && a < 0) {
    if (ell % 2 == 0) throw ArithError("ell_free_part: even ell cannot carry sign on root");
    a = -a;
    x = -x;
  }
  return {a, x};
}

std::optional<Int> perfect_power_root(const Int& m, unsigned ell) {
  if (ell == 0) throw ArithError("perfect_power_root: ell = 0");
  if (m == 0) return Int(0);
  if (m < 0 && ell % 2 == 0) return std::nullopt;
  Int am = abs_int(m), root, rem;
  mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), am.get_mpz_t(), ell);
  if (rem != 0) return std::nullopt;
  return m < 0 ? Int(-root) : root;
}

Int mod_pow(const Int& a, const Int& e, const Int& q) {
  if (q <= 0) throw ArithError("mod_pow: modulus <= 0");
  if (e < 0) return mod_pow(mod_inverse(a, q), -e, q);
  Int r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& q) {
  if (q <= 0) throw ArithError("mod_inverse: modulus <= 0");
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()))
    throw ArithError("mod_inverse: not a unit mod " + q.get_str());
  return r;
}

Int greatest_prime_factor(const Int& n) {
  if (n == 0) throw ArithError("greatest_prime_factor: n = 0");
  return factor(n).greatest_prime();
}

}  // namespace lacuna
