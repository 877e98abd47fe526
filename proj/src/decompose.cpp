#include "lacuna/decompose.hpp"

namespace lacuna {

void ProblemSpec::validate() const {
  if (k < 3 || k > 10) throw ArithError("spec: k out of range");
  if (i < 1 || i > k) throw ArithError("spec: i out of range");
  if (!is_prime(Int(ell))) throw ArithError("spec: ell not prime");
}

void ProblemSpec::validate_search_scope() const {
  validate();
  if (k < 4 || k > 8) throw ArithError("spec: k must be in [4,8] here");
}

unsigned ell0_for(const ProblemSpec& spec) {
  return (spec.k - 1) % spec.ell == 0 ? 1 : spec.ell;
}

const Term* TermDecomposition::term(int j) const {
  for (const auto& t : terms)
    if (t.j == j) return &t;
  return nullptr;
}

NormalizedSolution normalize_solution(const Rat& x, const Rat& y,
                                      const ProblemSpec& spec) {
  spec.validate();
  if (y == 0) throw ArithError("normalize_solution: y = 0 (trivial solution)");
  Rat xc = x, yc = y;
  xc.canonicalize();
  yc.canonicalize();

  NormalizedSolution sol;
  sol.ell0 = ell0_for(spec);
  sol.n = xc.get_num();
  Int s = xc.get_den();
  if (sol.ell0 == 1) {
    sol.d = s;
  } else {
    auto root = perfect_power_root(s, spec.ell);
    if (!root)
      throw DenominatorMismatch("denominator of x is not an ell-th power");
    sol.d = *root;
  }
  unsigned long texp =
      static_cast<unsigned long>(spec.k - 1) * sol.ell0 / spec.ell;
  sol.t = pow_int(sol.d, texp);
  if (yc.get_den() != sol.t)
    throw DenominatorMismatch("denominator of y does not match d^{(k-1)ell0/ell}");
  sol.m = yc.get_num();
  return sol;
}

TermDecomposition decompose_terms(const NormalizedSolution& sol,
                                  const ProblemSpec& spec) {
  if (sol.m == 0) throw ArithError("decompose_terms: m = 0");
  TermDecomposition dec;
  dec.spec = spec;
  dec.solution = sol;
  const Int de = pow_int(sol.d, sol.ell0);
  const bool odd = spec.ell % 2 == 1;
  Int product = 1;
  for (int j = 1; j <= spec.k; ++j) {
    if (j == spec.i) continue;
    Int term = sol.n + j * de;
    if (term == 0) throw NotASolution("term vanishes: not in the m != 0 regime");
    product *= term;
    auto [a, xj] = ell_free_part(term, spec.ell, /*sign_on_root=*/odd);
    FactoredInteger fa = factor(a);
    // A prime >= k divides at most one term, so it must sit in x_j^ell.
    if (fa.greatest_prime() >= spec.k)
      throw NotASolution("prime >= k left in the ell-free part of a term");
    if (gcd(a, sol.d) != 1) throw NotASolution("gcd(a_j, d) != 1");
    dec.terms.push_back({j, fa, xj});
  }
  if (product != pow_int(sol.m, spec.ell))
    throw NotASolution("product of terms is not m^ell");
  return dec;
}

std::tuple<ProblemSpec, Rat, Rat> reflect(const ProblemSpec& spec,
                                          const Rat& x, const Rat& y) {
  ProblemSpec out = spec;
  out.i = spec.k + 1 - spec.i;
  Rat xr = -x - (spec.k + 1);
  xr.canonicalize();
  Rat yr = (spec.k - 1) % 2 == 0 ? y : Rat(-y);
  yr.canonicalize();
  return {out, xr, yr};
}

}  // namespace lacuna
