#include "lacuna/sieve.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace lacuna {

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<unsigned, Int>, LambdaSet> g_cache;

Verdict ratio_in_lambda(const Int& u1, const Int& u2, const LambdaSet& ls) {
  Int lam = u1 * mod_inverse(u2, ls.q) % ls.q;
  return ls.contains(lam) ? Verdict::Pass : Verdict::Fail;
}

bool require(Verdict v) {
  if (v == Verdict::NotApplicable)
    throw ArithError("congruence filter not applicable to these inputs");
  return v == Verdict::Pass;
}

}  // namespace

bool LambdaSet::contains(const Int& x) const {
  Int r = x % q;
  if (r < 0) r += q;
  return std::binary_search(residues.begin(), residues.end(), r);
}

Int phi_of_modulus(unsigned ell, const Int& q) {
  if (q <= 1) throw ArithError("lambda_set: modulus <= 1");
  if (is_prime(q)) return q - 1;
  // Otherwise q must be a power of ell.
  Int m = q;
  while (m % ell == 0) m /= ell;
  if (m != 1)
    throw ArithError("lambda_set: q must be prime or a power of ell");
  return q / ell * (ell - 1);
}

const LambdaSet& lambda_set(unsigned ell, const Int& q) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto key = std::make_pair(ell, q);
  auto it = g_cache.find(key);
  if (it != g_cache.end()) return it->second;

  Int phi = phi_of_modulus(ell, q);
  if (phi % ell != 0) throw ArithError("lambda_set: ell does not divide phi(q)");
  LambdaSet ls;
  ls.ell = ell;
  ls.q = q;
  Int e = phi / ell;
  for (Int x = 1; x < q; ++x) {
    if (gcd(x, q) != 1) continue;
    if (mod_pow(x, e, q) == 1) ls.residues.push_back(x);
  }
  return g_cache.emplace(key, std::move(ls)).first->second;
}

std::vector<Int> lambda_coset(unsigned ell, const Int& q, const Int& num,
                              const Int& den) {
  const LambdaSet& ls = lambda_set(ell, q);
  Int scale = num * mod_inverse(den, q) % q;
  std::vector<Int> out;
  for (const Int& l : ls.residues) out.push_back(l * scale % q);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict passes_qd_v(const Int& a1, const Int& a2, unsigned ell, const Int& q) {
  const LambdaSet& ls = lambda_set(ell, q);
  if (gcd(a1 * a2, q) != 1) return Verdict::NotApplicable;
  return ratio_in_lambda(a1, a2, ls);
}

bool passes_qd(const Int& a1, const Int& a2, unsigned ell, const Int& q) {
  return require(passes_qd_v(a1, a2, ell, q));
}

Verdict passes_chi_v(const Int& a1, int j1, const Int& a2, int j2, long jq,
                     unsigned ell, const Int& q) {
  const LambdaSet& ls = lambda_set(ell, q);
  if (gcd(a1 * a2, q) != 1) return Verdict::NotApplicable;
  Int d1 = Int(j1) - jq, d2 = Int(j2) - jq;
  if (d1 == 0 || d2 == 0 || gcd(d1, q) != 1 || gcd(d2, q) != 1)
    return Verdict::NotApplicable;
  Int u1 = a1 * mod_inverse(d1, q) % q;
  Int u2 = a2 * mod_inverse(d2, q) % q;
  return ratio_in_lambda(u1, u2, ls);
}

bool passes_chi(const Int& a1, int j1, const Int& a2, int j2, long jq,
                unsigned ell, const Int& q) {
  return require(passes_chi_v(a1, j1, a2, j2, jq, ell, q));
}

Verdict passes_l21_v(const Int& a_j, int j, int j_ell, const Int& eps,
                     unsigned ell) {
  if (ell != 5 && ell != 7) return Verdict::NotApplicable;
  Int q = Int(ell) * ell;
  if (eps % ell == 0) return Verdict::NotApplicable;
  Int diff = j - j_ell;
  if (diff == 0 || diff % ell == 0) return Verdict::NotApplicable;
  if (gcd(a_j, q) != 1) return Verdict::NotApplicable;
  Int u = a_j * mod_inverse(diff, q) % q;
  Int lhs = mod_pow(u, ell - 1, q);
  Int rhs = mod_pow(eps, ell - 1, q);
  return lhs == rhs ? Verdict::Pass : Verdict::Fail;
}

bool passes_l21(const Int& a_j, int j, int j_ell, const Int& eps,
                unsigned ell) {
  return require(passes_l21_v(a_j, j, j_ell, eps, ell));
}

bool residue_condition_9_1(int alpha3, int alpha4, int alpha5, int alpha6,
                           int beta4, int beta5, int gamma) {
  if (gamma != 0 && gamma != 5)
    throw ArithError("residue_condition_9_1: gamma must be 0 or 5");
  const Int q = 49;
  long e2 = 3 + alpha4 + alpha5 - alpha3 - alpha6;
  Int value = mod_pow(2, e2, q) * mod_pow(3, beta4 + beta5, q) % q;
  // chi runs over -lambda * 5^gamma, lambda in Lambda_49.
  Int scale = (q - mod_pow(5, gamma, q)) % q;
  for (const Int& l : lambda_set(7, q).residues)
    if (l * scale % q == value) return true;
  return false;
}

bool residue_condition_9_4(int alpha2, int alpha3, int alpha5, int alpha6,
                           int beta8, int gamma, int jq) {
  if (jq != 1 && jq != 8) throw ArithError("residue_condition_9_4: jq in {1,8}");
  const Int q = 49;
  // nu_3(a2 a5) is pinned by the beta family: 7 - beta8 when 3 | a2 a5 a8,
  // zero otherwise.
  long nu3 = beta8 > 0 ? 7 - beta8 : 0;
  long e2 = alpha6 - alpha2 + alpha3 - alpha5;
  Int value = mod_pow(2, e2, q) * mod_inverse(mod_pow(3, nu3, q), q) % q;
  value = value * mod_pow(5, gamma, q) % q;
  auto coset = lambda_coset(7, q, 10, jq == 1 ? 4 : 18);
  return std::binary_search(coset.begin(), coset.end(), value);
}

}  // namespace lacuna
