#pragma once

#include <array>
#include <string>
#include <vector>

#include "lacuna/arith.hpp"

namespace lacuna {

enum class Signature { LLL, LL2 };

// One unknown slot of a ternary equation.  `absorbed` tracks the multiplier
// picked up when reduce() strips powers out of the coefficient (or flips a
// sign), so witnesses of the unreduced equation can be carried along.
struct Slot {
  std::string label;
  Int absorbed = 1;
};

struct SideCondition {
  Int divisor;
  int slot;  // index into slots
  bool operator==(const SideCondition&) const = default;
};

// LLL:  c0 U0^ell + c1 U1^ell + c2 U2^ell = 0
// LL2:  c0 U0^ell + c1 U1^ell = c2 U2^2
struct TernaryEquation {
  unsigned ell = 3;
  Signature sig = Signature::LLL;
  std::array<Int, 3> coeff{};
  std::array<Slot, 3> slots{};
  std::vector<SideCondition> side_conditions;
  std::string provenance;

  // Product of the non-leading coefficients once the smallest is 1; the
  // "ab" column of the case tables.
  Int ab() const;
  bool has_condition(const Int& divisor, int slot) const;
  std::string str() const;
};

// a_q x_q^ell - a_p x_p^ell = (q-p) d^ell.  Only meaningful when the
// denominator shape is d^ell (ell0 = ell).
TernaryEquation form_two_term(const Int& a_p, const Int& a_q, int p, int q,
                              unsigned ell, unsigned ell0);

// (r-q) a_p x_p^ell + (p-r) a_q x_q^ell + (q-p) a_r x_r^ell = 0.
TernaryEquation form_three_term(const Int& a_p, const Int& a_q, const Int& a_r,
                                int p, int q, int r, unsigned ell);

// a_p a_q (x_p x_q)^ell - a_r a_t (x_r x_t)^ell = (pq - rt) d^{2 ell0},
// read with d^{ell0} squared (LL2) or, when ell0 = ell, with d^2 raised to
// the ell (LLL).  Requires p + q = r + t.
TernaryEquation form_four_term(const Int& a_p, const Int& a_q, const Int& a_r,
                               const Int& a_t, int p, int q, int r, int t,
                               unsigned ell, unsigned ell0, Signature sig);

// Canonical form: divide out gcd, absorb stripped prime powers into the
// unknowns (recording side conditions), normalize signs and sort.
// Idempotent; preserves the rational solution set.
TernaryEquation reduce(TernaryEquation eq);

// The scaling-equivalence class of a reduced equation: multiplying through
// by a prime and absorbing complete powers into the unknowns preserves the
// solution set, so matching considers every such form.  Includes eq itself.
std::vector<TernaryEquation> scaling_variants(const TernaryEquation& eq);

}  // namespace lacuna
