#pragma once

#include <optional>
#include <vector>

#include "lacuna/decompose.hpp"

namespace lacuna {

struct SearchBounds {
  Int nmax = 100;
  Int dmax = 10;
  bool include_trivial = false;
  int jobs = 1;  // <= 0 means hardware concurrency
};

enum class SolutionClass { Trivial, Listed, New };

struct SolutionRecord {
  ProblemSpec spec;
  Int n, d, m, t;
  Rat x, y;  // y >= 0 for ell = 2 (both signs solve), exact sign otherwise
  SolutionClass classification = SolutionClass::New;
};

// Exact check of prod_{j != i} (x + j) = y^ell.
bool verify(const Rat& x, const Rat& y, const ProblemSpec& spec);

// Exhaustive over the box |n| <= nmax, 1 <= d <= dmax, gcd(n, d) = 1 with
// x = n/d^{ell0}.  Complete on the box; deterministic output order (d, then
// n) regardless of worker count.
std::vector<SolutionRecord> search(const ProblemSpec& spec,
                                   const SearchBounds& bounds);

}  // namespace lacuna
