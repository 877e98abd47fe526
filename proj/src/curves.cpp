#include "lacuna/curves.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "lacuna/search.hpp"

namespace lacuna {

namespace {

Rat rat_pow2(const Rat& a) { return a * a; }

bool is_integer(const Rat& a) { return a.get_den() == 1; }

}  // namespace

Int WeierstrassCurve::cubic_disc() const {
  return 18 * a2 * a4 * a6 - 4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 -
         4 * a4 * a4 * a4 - 27 * a6 * a6;
}

CurvePoint CurvePoint::make(const Rat& x, const Rat& y) {
  CurvePoint p;
  p.infinity = false;
  p.x = x;
  p.y = y;
  p.x.canonicalize();
  p.y.canonicalize();
  return p;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
  if (infinity || o.infinity) return infinity == o.infinity;
  return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
  if (infinity != o.infinity) return infinity;  // infinity sorts first
  if (x != o.x) return x < o.x;
  return y < o.y;
}

WeierstrassCurve TripleModel::curve() const {
  Int s1 = b * (p1 + p2 + p3);
  Int s2 = b * b * (Int(p1) * p2 + Int(p1) * p3 + Int(p2) * p3);
  Int s3 = b * b * b * (Int(p1) * p2 * p3);
  return {s1, s2, s3};
}

CurvePoint TripleModel::to_curve(const Rat& x, const Rat& y) const {
  return CurvePoint::make(Rat(b) * x, Rat(b * b) * y);
}

std::pair<Rat, Rat> TripleModel::from_curve(const CurvePoint& P) const {
  Rat x = P.x / b, y = P.y / (b * b);
  x.canonicalize();
  y.canonicalize();
  return {x, y};
}

WeierstrassCurve ec_from_triple(int p1, int p2, int p3, const Int& b) {
  if (b == 0) throw ArithError("ec_from_triple: b = 0");
  if (p1 == p2 || p2 == p3 || p1 == p3)
    throw ArithError("ec_from_triple: repeated root");
  TripleModel m{p1, p2, p3, b};
  return m.curve();
}

void QuarticModel::validate() const {
  if (!(0 < p && p < q && q < r)) throw ArithError("quartic: need 0 < p < q < r");
  if (c == 0) throw ArithError("quartic: c = 0");
  FactoredInteger f = factor(c);
  for (const auto& [pr, e] : f.factors)
    if (e > 1) throw ArithError("quartic: c must be squarefree");
}

WeierstrassCurve quartic_to_cubic(const QuarticModel& model) {
  model.validate();
  Int p = model.p, q = model.q, r = model.r, c = model.c;
  Int A = (p * r + q * r - 2 * p * q) * c;
  Int B = (p * q * r * r + p * p * q * q - p * p * q * r - p * q * q * r) * c * c;
  return {A, B, 0};
}

CurvePoint map_quartic_point(const QuarticModel& model, const Rat& N,
                             const Rat& d, const Rat& y) {
  model.validate();
  if (N == 0) throw ArithError("map_quartic_point: N = 0");
  Rat lhs = N * (N + model.p * d) * (N + model.q * d) * (N + model.r * d);
  if (lhs != Rat(model.c) * y * y)
    throw ArithError("map_quartic_point: (N, d, y) is not on the quartic");
  Rat pqc = Rat(Int(model.p) * model.q * model.c);
  Rat X = pqc * (Rat(model.r) * d + N) / N;
  Rat Y = Rat(Int(model.p) * model.q * model.r * model.c * model.c) * y / (N * N);
  X.canonicalize();
  Y.canonicalize();
  return CurvePoint::make(X, Y);
}

std::optional<std::pair<Rat, Rat>> unmap_quartic_point(
    const QuarticModel& model, const CurvePoint& P) {
  model.validate();
  if (P.infinity) return std::nullopt;
  Rat pqc = Rat(Int(model.p) * model.q * model.c);
  if (P.x == pqc) return std::nullopt;  // N -> infinity direction
  Rat ratio = Rat(pqc * model.r) / (P.x - pqc);  // N/d
  ratio.canonicalize();
  if (ratio == 0) return std::nullopt;
  // y for the scale-normalized quartic (d = 1, N = ratio).
  Rat y = P.y * ratio * ratio / Rat(Int(model.p) * model.q * model.r * model.c * model.c);
  y.canonicalize();
  return std::make_pair(ratio, y);
}

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
  if (P.infinity) return true;
  Rat rhs = P.x * P.x * P.x + Rat(E.a2) * P.x * P.x + Rat(E.a4) * P.x + E.a6;
  return rat_pow2(P.y) == rhs;
}

CurvePoint negate(const WeierstrassCurve&, const CurvePoint& P) {
  if (P.infinity) return P;
  return CurvePoint::make(P.x, -P.y);
}

CurvePoint add_points(const WeierstrassCurve& E, const CurvePoint& P,
                      const CurvePoint& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.x == Q.x) {
    if (P.y != Q.y || P.y == 0) return CurvePoint::inf();
    // tangent
    Rat num = 3 * P.x * P.x + Rat(2 * E.a2) * P.x + E.a4;
    Rat lambda = num / (2 * P.y);
    Rat x3 = lambda * lambda - E.a2 - 2 * P.x;
    Rat y3 = lambda * (P.x - x3) - P.y;
    return CurvePoint::make(x3, y3);
  }
  Rat lambda = (Q.y - P.y) / (Q.x - P.x);
  Rat x3 = lambda * lambda - E.a2 - P.x - Q.x;
  Rat y3 = lambda * (P.x - x3) - P.y;
  return CurvePoint::make(x3, y3);
}

CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, long n) {
  if (n < 0) return multiply(E, negate(E, P), -n);
  CurvePoint acc = CurvePoint::inf(), base = P;
  while (n > 0) {
    if (n & 1) acc = add_points(E, acc, base);
    base = add_points(E, base, base);
    n >>= 1;
  }
  return acc;
}

std::vector<CurvePoint> torsion_points(const WeierstrassCurve& E) {
  Int disc = E.cubic_disc();
  if (disc == 0) throw ArithError("torsion_points: singular curve");

  auto integer_roots_of = [&](const Int& a6_shifted) {
    // Integer roots of x^3 + a2 x^2 + a4 x + a6_shifted.
    std::vector<Int> roots;
    auto eval = [&](const Int& x) -> Int {
      return x * x * x + E.a2 * x * x + E.a4 * x + a6_shifted;
    };
    if (a6_shifted == 0) {
      roots.push_back(0);
      // remaining quadratic x^2 + a2 x + a4
      Int D = E.a2 * E.a2 - 4 * E.a4;
      if (D >= 0) {
        if (auto s = perfect_power_root(D, 2)) {
          if ((-E.a2 + *s) % 2 == 0) roots.push_back((-E.a2 + *s) / 2);
          if (*s != 0 && (-E.a2 - *s) % 2 == 0) roots.push_back((-E.a2 - *s) / 2);
        }
      }
      return roots;
    }
    FactoredInteger f = factor(a6_shifted);
    // all divisors of |a6_shifted|, both signs
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.factors) {
      size_t sz = divs.size();
      Int pe = 1;
      for (unsigned t = 1; t <= e; ++t) {
        pe *= p;
        for (size_t s = 0; s < sz; ++s) divs.push_back(divs[s] * pe);
      }
    }
    for (const Int& d : divs) {
      if (eval(d) == 0) roots.push_back(d);
      if (eval(-d) == 0) roots.push_back(-d);
    }
    return roots;
  };

  std::vector<CurvePoint> candidates;
  candidates.push_back(CurvePoint::inf());
  for (const Int& x : integer_roots_of(E.a6))
    candidates.push_back(CurvePoint::make(Rat(x), Rat(0)));

  // y != 0 candidates: y^2 | 16 disc.
  Int bound = 16 * abs_int(disc);
  FactoredInteger fb = factor(bound);
  std::vector<Int> ys{1};
  for (const auto& [p, e] : fb.factors) {
    size_t sz = ys.size();
    Int pe = 1;
    for (unsigned t = 1; t <= e / 2; ++t) {
      pe *= p;
      for (size_t s = 0; s < sz; ++s) ys.push_back(ys[s] * pe);
    }
  }
  for (const Int& y : ys)
    for (const Int& x : integer_roots_of(E.a6 - y * y)) {
      candidates.push_back(CurvePoint::make(Rat(x), Rat(y)));
      candidates.push_back(CurvePoint::make(Rat(x), Rat(-y)));
    }

  std::vector<CurvePoint> torsion;
  for (const auto& P : candidates) {
    // Mazur: rational torsion has order at most 12.
    CurvePoint Q = P;
    bool is_torsion = false;
    for (int n = 1; n <= 12; ++n) {
      if (Q.infinity) {
        is_torsion = true;
        break;
      }
      // Nagell-Lutz again: non-integral multiples cannot be torsion.
      if (!is_integer(Q.x) || !is_integer(Q.y)) break;
      Q = add_points(E, Q, P);
    }
    if (is_torsion) torsion.push_back(P);
  }
  std::sort(torsion.begin(), torsion.end());
  torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());
  return torsion;
}

namespace {

std::string take_kv(std::string& line, const std::string& key, int lineno,
                    bool required) {
  auto pos = line.find(" " + key + "=");
  if (pos == std::string::npos) {
    if (required)
      throw ArithError("line " + std::to_string(lineno) + ": missing field " +
                       key);
    return "";
  }
  auto start = pos + key.size() + 2;
  std::string val;
  if (start < line.size() && line[start] == '"') {
    auto end = line.find('"', start + 1);
    val = line.substr(start + 1, end - start - 1);
    line.erase(pos, end - pos + 1);
  } else {
    auto end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    val = line.substr(start, end - start);
    line.erase(pos, end - pos);
  }
  return val;
}

}  // namespace

std::vector<CurveRecord> load_curve_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArithError("cannot open curve file " + path);
  std::vector<CurveRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool quoted = false;
    for (size_t s = 0; s < line.size(); ++s) {
      if (line[s] == '"') quoted = !quoted;
      if (line[s] == '#' && !quoted) {
        line.erase(s);
        break;
      }
    }
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line = line.substr(start);

    CurveRecord rec;
    rec.lineno = lineno;
    if (line.rfind("curve ", 0) == 0) {
      rec.quartic = false;
      line.erase(0, 5);
    } else if (line.rfind("quartic ", 0) == 0) {
      rec.quartic = true;
      line.erase(0, 7);
    } else {
      throw ArithError("line " + std::to_string(lineno) +
                       ": record must start with 'curve' or 'quartic'");
    }
    line = " " + line;
    rec.cite = take_kv(line, "cite", lineno, false);
    std::string flags = take_kv(line, "flags", lineno, false);
    if (!flags.empty()) {
      if (flags != "unverified")
        throw ArithError("line " + std::to_string(lineno) + ": unknown flag " +
                         flags);
      rec.unverified = true;
    }
    rec.p1 = std::stoi(take_kv(line, "p1", lineno, true));
    rec.p2 = std::stoi(take_kv(line, "p2", lineno, true));
    rec.p3 = std::stoi(take_kv(line, "p3", lineno, true));
    rec.coeff = Int(take_kv(line, rec.quartic ? "c" : "b", lineno, true));
    out.push_back(std::move(rec));
  }
  return out;
}

bool torsion_pullback_trivial(const CurveRecord& rec) {
  if (!rec.quartic) {
    WeierstrassCurve E = ec_from_triple(rec.p1, rec.p2, rec.p3, rec.coeff);
    for (const auto& P : torsion_points(E))
      if (!P.infinity && P.y != 0) return false;
    return true;
  }
  QuarticModel model{rec.p1 - 1, rec.p2 - 1, rec.p3 - 1, rec.coeff};
  WeierstrassCurve E = quartic_to_cubic(model);
  for (const auto& P : torsion_points(E)) {
    if (P.infinity || P.y == 0) continue;
    if (unmap_quartic_point(model, P)) return false;  // lands off the pole
  }
  return true;
}

std::vector<std::pair<Rat, Rat>> generate_family(const QuarticModel& model,
                                                 const ProblemSpec& spec,
                                                 const CurvePoint& seed,
                                                 int count) {
  spec.validate();
  if (spec.k != 5 || spec.ell != 2)
    throw ArithError("generate_family: only the k = 5, ell = 2 quartic case");
  WeierstrassCurve E = quartic_to_cubic(model);
  if (!on_curve(E, seed)) throw ArithError("generate_family: seed not on curve");
  for (int n = 1; n <= 12; ++n)
    if (multiply(E, seed, n).infinity)
      throw ArithError("generate_family: seed is torsion");

  // offsets of the four remaining terms; the model is anchored at the first
  int first = spec.i == 1 ? 2 : 1;

  std::vector<CurvePoint> torsion = torsion_points(E);
  std::vector<std::pair<Rat, Rat>> out;
  CurvePoint Q = CurvePoint::inf();
  for (int m = 1; m <= count; ++m) {
    Q = add_points(E, Q, seed);
    for (const auto& T : torsion) {
      CurvePoint R = add_points(E, Q, T);
      auto nd = unmap_quartic_point(model, R);
      if (!nd) continue;
      auto [ratio, yq] = *nd;  // N/d and the quartic y at d = 1
      Rat x = ratio - first;
      x.canonicalize();
      Rat y = abs(yq);
      if (y == 0) continue;
      if (!verify(x, y, spec)) throw ArithError("generate_family: bad pullback");
      out.emplace_back(x, y);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lacuna
