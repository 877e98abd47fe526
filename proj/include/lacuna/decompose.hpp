#pragma once

#include <tuple>
#include <vector>

#include "lacuna/arith.hpp"

namespace lacuna {

// The equation under study: prod_{j != i, 1<=j<=k} (x + j) = y^ell.
struct ProblemSpec {
  int k = 5;
  unsigned ell = 2;
  int i = 2;

  void validate() const;
  // Search and the case engine only cover the 4..8 range.
  void validate_search_scope() const;
  bool operator==(const ProblemSpec&) const = default;
};

// ell0 in {1, ell} with ell/ell0 = gcd(ell, k-1): the shape x = n/d^{ell0}
// forced on the denominator of a solution.
unsigned ell0_for(const ProblemSpec& spec);

class DenominatorMismatch : public std::runtime_error {
 public:
  explicit DenominatorMismatch(const std::string& w) : std::runtime_error(w) {}
};

class NotASolution : public std::runtime_error {
 public:
  explicit NotASolution(const std::string& w) : std::runtime_error(w) {}
};

// x = n/d^{ell0}, y = m/t with t = d^{(k-1) ell0 / ell}.
struct NormalizedSolution {
  Int n;
  Int d;
  unsigned ell0 = 1;
  Int m;
  Int t;
};

struct Term {
  int j;
  FactoredInteger a;  // ell-free part; signed for ell = 2, positive otherwise
  Int x;              // n + j d^{ell0} = a * x^ell
};

struct TermDecomposition {
  ProblemSpec spec;
  NormalizedSolution solution;
  std::vector<Term> terms;

  const Term* term(int j) const;
};

// Split x, y into the integral shape; rejects denominators that cannot
// satisfy s^{k-1} = t^ell.  Whether (x, y) actually solves the equation is
// checked by decompose_terms, not here.
NormalizedSolution normalize_solution(const Rat& x, const Rat& y,
                                      const ProblemSpec& spec);

// Split every term n + j d^{ell0} = a_j x_j^ell and check the product is
// exactly m^ell.  A prime >= k surviving in some a_j, or a product mismatch,
// means the input was not a solution.
TermDecomposition decompose_terms(const NormalizedSolution& sol,
                                  const ProblemSpec& spec);

// (k, i) -> (k, k+1-i) via x -> -x-(k+1); y picks up the sign (-1)^{k-1},
// which is absorbable into y exactly when k or ell is odd.  Involution.
std::tuple<ProblemSpec, Rat, Rat> reflect(const ProblemSpec& spec,
                                          const Rat& x, const Rat& y);

}  // namespace lacuna
