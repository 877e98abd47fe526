#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lacuna {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation's preconditions are violated (zero valuation
// argument, inverse of a non-unit, ...).
class ArithError : public std::invalid_argument {
 public:
  explicit ArithError(const std::string& what) : std::invalid_argument(what) {}
};

// n = sign * prod p^e with all p prime and all e >= 1.
struct FactoredInteger {
  int sign = 1;  // +1 or -1
  std::vector<std::pair<Int, unsigned>> factors;  // sorted by prime

  Int value() const;
  unsigned exponent_of(const Int& p) const;
  // Greatest prime factor; P(1) = 1.
  Int greatest_prime() const;
  bool operator==(const FactoredInteger&) const = default;
};

bool is_prime(const Int& n);

// Complete factorization of |n|, n != 0.  Trial division by primes below
// 10^6, then Miller-Rabin + Pollard rho for what remains.
FactoredInteger factor(const Int& n);

// Largest e with p^e | n.  Requires n != 0 and p prime.
unsigned long valuation(const Int& n, const Int& p);

// m = a * x^ell with 0 <= nu_p(a) < ell for every prime p and x > 0.
// The sign of m stays on a; with sign_on_root (odd ell only) it moves to x.
std::pair<Int, Int> ell_free_part(const Int& m, unsigned ell,
                                  bool sign_on_root = false);

// r with r^ell = m, if any.  For even ell and m < 0 there is none.
std::optional<Int> perfect_power_root(const Int& m, unsigned ell);

Int mod_pow(const Int& a, const Int& e, const Int& q);

// Inverse of a mod q; rejects non-units.
Int mod_inverse(const Int& a, const Int& q);

// Greatest prime factor of |n|; P(1) = 1.  Requires n != 0.
Int greatest_prime_factor(const Int& n);

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int abs_int(const Int& a) { return a >= 0 ? a : Int(-a); }

}  // namespace lacuna
