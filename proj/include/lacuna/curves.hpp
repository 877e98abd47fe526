#pragma once

#include <optional>
#include <vector>

#include "lacuna/arith.hpp"
#include "lacuna/decompose.hpp"

namespace lacuna {

// y^2 = x^3 + a2 x^2 + a4 x + a6 with integer coefficients.
struct WeierstrassCurve {
  Int a2, a4, a6;

  Int cubic_disc() const;  // discriminant of the right-hand cubic
  bool operator==(const WeierstrassCurve&) const = default;
};

struct CurvePoint {
  bool infinity = true;
  Rat x, y;

  static CurvePoint make(const Rat& x, const Rat& y);
  static CurvePoint inf() { return {}; }
  bool operator==(const CurvePoint&) const;
  bool operator<(const CurvePoint&) const;  // for deterministic sets
};

// b y^2 = (x + p1)(x + p2)(x + p3) turned integral via X = b x, Y = b^2 y:
// Y^2 = (X + b p1)(X + b p2)(X + b p3).
struct TripleModel {
  int p1, p2, p3;
  Int b;

  WeierstrassCurve curve() const;
  CurvePoint to_curve(const Rat& x, const Rat& y) const;
  std::pair<Rat, Rat> from_curve(const CurvePoint& P) const;
};

WeierstrassCurve ec_from_triple(int p1, int p2, int p3, const Int& b);

// N (N + p d)(N + q d)(N + r d) = c y^2 with 0 < p < q < r, c squarefree.
struct QuarticModel {
  int p, q, r;
  Int c;

  void validate() const;
};

// E(c): Y^2 = X^3 + (pr+qr-2pq) c X^2 + (p q r^2 + p^2 q^2 - p^2 q r - p q^2 r) c^2 X.
WeierstrassCurve quartic_to_cubic(const QuarticModel& model);

// X = pqc (rd + N)/N, Y = pqr y c^2 / N^2; requires N != 0 and the quartic
// relation to hold.
CurvePoint map_quartic_point(const QuarticModel& model, const Rat& N,
                             const Rat& d, const Rat& y);

// Inverse: N/d = pqcr/(X - pqc); the pole X = pqc is the N -> infinity
// direction and has no finite preimage.
std::optional<std::pair<Rat, Rat>> unmap_quartic_point(
    const QuarticModel& model, const CurvePoint& P);

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P);

CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add_points(const WeierstrassCurve& E, const CurvePoint& P,
                      const CurvePoint& Q);
CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, long n);

// Nagell-Lutz candidate scan (y = 0 or y^2 | 16 disc) filtered by the Mazur
// bound; the result is a finite subgroup.
std::vector<CurvePoint> torsion_points(const WeierstrassCurve& E);

// One record of the shipped rank-0 curve tables.
struct CurveRecord {
  bool quartic = false;
  int p1 = 0, p2 = 0, p3 = 0;
  Int coeff;  // b for triple models, c for quartic models
  bool unverified = false;
  std::string cite;
  int lineno = 0;
};

// `curve p1=.. p2=.. p3=.. b=..` / `quartic p1=.. p2=.. p3=.. c=..` records,
// '#' comments, optional flags=unverified cite="...".
std::vector<CurveRecord> load_curve_records(const std::string& path);

// The rank-0 closure check: every torsion point of the record's curve is
// two-torsion (pulls back to y = 0) or sits over the pole.
bool torsion_pullback_trivial(const CurveRecord& rec);

// Rational solutions (x, y) of the omitted-term product equation obtained
// from multiples of `seed` (plus torsion translates) pulled back through the
// quartic model.  Only defined for k = 5 specs, where the four remaining
// terms form the quartic.  Every output is verified exactly.
std::vector<std::pair<Rat, Rat>> generate_family(const QuarticModel& model,
                                                 const ProblemSpec& spec,
                                                 const CurvePoint& seed,
                                                 int count);

}  // namespace lacuna
