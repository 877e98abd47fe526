#pragma once

#include <vector>

#include "lacuna/arith.hpp"

namespace lacuna {

// Filters can be inapplicable (non-unit inputs, denominator not invertible)
// as opposed to violated; the boolean surface turns NotApplicable into an
// error so callers cannot mistake one for the other.
enum class Verdict { Pass, Fail, NotApplicable };

// Solution set of x^{phi(q)/ell} = 1 (mod q): the subgroup of index ell of
// (Z/q)^*.  q must be prime or a power of ell, with ell | phi(q).
struct LambdaSet {
  unsigned ell;
  Int q;
  std::vector<Int> residues;  // sorted

  bool contains(const Int& x) const;
};

// Memoized; safe for concurrent reads once built.
const LambdaSet& lambda_set(unsigned ell, const Int& q);

// phi(q) for the moduli lambda_set accepts (prime, or a power of ell).
Int phi_of_modulus(unsigned ell, const Int& q);

// { x : x^{phi(q)/ell} == (num/den)^{phi(q)/ell} (mod q) }, i.e. the coset
// (num/den) * Lambda_q.
std::vector<Int> lambda_coset(unsigned ell, const Int& q, const Int& num,
                              const Int& den);

// q | d branch: a solution forces a1 = lambda * a2 (mod q) for some lambda
// in Lambda_q.  false excludes the candidate pair.
Verdict passes_qd_v(const Int& a1, const Int& a2, unsigned ell, const Int& q);
bool passes_qd(const Int& a1, const Int& a2, unsigned ell, const Int& q);

// q | (n + j_q d) branch: a1/(j1-j_q) = lambda * a2/(j2-j_q) (mod q) for
// some lambda in Lambda_q.
Verdict passes_chi_v(const Int& a1, int j1, const Int& a2, int j2, long jq,
                     unsigned ell, const Int& q);
bool passes_chi(const Int& a1, int j1, const Int& a2, int j2, long jq,
                unsigned ell, const Int& q);

// ell^3 | (n + j_ell d) refinement, ell in {5, 7}: with the neighbour term
// a_{j_ell +- ell} = ell * eps, every other term satisfies
// (a_j/(j - j_ell))^{ell-1} = eps^{ell-1} (mod ell^2).
Verdict passes_l21_v(const Int& a_j, int j, int j_ell, const Int& eps,
                     unsigned ell);
bool passes_l21(const Int& a_j, int j, int j_ell, const Int& eps,
                unsigned ell);

// Mod-49 condition on the exponents of a_3..a_6 in the k=8, ell=7, i=2
// configuration: 2^{3+a4+a5-a3-a6} 3^{b4+b5} must land in the coset
// -Lambda_49 * 5^gamma, gamma = nu_5(a3 a6) - 1 in {0, 5}.
bool residue_condition_9_1(int alpha3, int alpha4, int alpha5, int alpha6,
                           int beta4, int beta5, int gamma);

// Companion condition for the k=8, ell=7, i=4 configuration:
// 2^{a6-a2+a3-a5} 3^{-b8} 5^{gamma} must lie in (10/4)*Lambda_49 when the
// 49-divisible term is n+d, or (10/18)*Lambda_49 when it is n+8d.
bool residue_condition_9_4(int alpha2, int alpha3, int alpha5, int alpha6,
                           int beta8, int gamma, int jq);

}  // namespace lacuna
