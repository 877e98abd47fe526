#include "lacuna/ternary.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lacuna {

namespace {

void flip_slot(TernaryEquation& eq, int idx) {
  eq.coeff[idx] = -eq.coeff[idx];
  eq.slots[idx].absorbed = -eq.slots[idx].absorbed;
}

void strip_powers(TernaryEquation& eq, int idx, unsigned power) {
  Int& c = eq.coeff[idx];
  if (c == 0) throw ArithError("ternary: zero coefficient");
  FactoredInteger f = factor(c);
  for (const auto& [p, e] : f.factors) {
    if (e < power) continue;
    unsigned long times = e / power;
    c /= pow_int(p, times * power);
    eq.slots[idx].absorbed *= pow_int(p, times);
    eq.side_conditions.push_back({p, idx});
  }
}

void permute(TernaryEquation& eq, const std::array<int, 3>& order) {
  TernaryEquation tmp = eq;
  std::array<int, 3> where{};
  for (int i = 0; i < 3; ++i) {
    eq.coeff[i] = tmp.coeff[order[i]];
    eq.slots[i] = tmp.slots[order[i]];
    where[order[i]] = i;
  }
  for (auto& sc : eq.side_conditions) sc.slot = where[sc.slot];
}

}  // namespace

Int TernaryEquation::ab() const {
  if (sig == Signature::LLL && coeff[0] == 1) return coeff[1] * coeff[2];
  return coeff[0] * coeff[1] * coeff[2];
}

bool TernaryEquation::has_condition(const Int& divisor, int slot) const {
  for (const auto& sc : side_conditions)
    if (sc.slot == slot && sc.divisor % divisor == 0) return true;
  return false;
}

std::string TernaryEquation::str() const {
  static const char* names[3] = {"x", "y", "z"};
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    if (sig == Signature::LL2 && i == 2) break;
    if (i > 0) os << (coeff[i] < 0 ? " - " : " + ");
    Int c = i > 0 ? abs_int(coeff[i]) : coeff[i];
    if (c != 1) os << c.get_str() << " ";
    os << names[i] << "^" << ell;
  }
  if (sig == Signature::LLL) {
    os << " = 0";
  } else {
    os << " = ";
    if (coeff[2] != 1) os << coeff[2].get_str() << " ";
    os << "z^2";
  }
  return os.str();
}

TernaryEquation form_two_term(const Int& a_p, const Int& a_q, int p, int q,
                              unsigned ell, unsigned ell0) {
  if (ell0 != ell)
    throw ArithError("[p,q] needs the d^ell denominator shape (ell0 = ell)");
  if (p == q) throw ArithError("[p,q]: indices must differ");
  TernaryEquation eq;
  eq.ell = ell;
  eq.sig = Signature::LLL;
  eq.coeff = {a_q, -a_p, Int(-(q - p))};
  eq.slots = {Slot{"x" + std::to_string(q)}, Slot{"x" + std::to_string(p)},
              Slot{"d"}};
  eq.provenance = "[" + std::to_string(p) + "," + std::to_string(q) + "]";
  return reduce(std::move(eq));
}

TernaryEquation form_three_term(const Int& a_p, const Int& a_q, const Int& a_r,
                                int p, int q, int r, unsigned ell) {
  if (p == q || q == r || p == r)
    throw ArithError("[p,q,r]: indices must be distinct");
  TernaryEquation eq;
  eq.ell = ell;
  eq.sig = Signature::LLL;
  eq.coeff = {Int(r - q) * a_p, Int(p - r) * a_q, Int(q - p) * a_r};
  eq.slots = {Slot{"x" + std::to_string(p)}, Slot{"x" + std::to_string(q)},
              Slot{"x" + std::to_string(r)}};
  eq.provenance = "[" + std::to_string(p) + "," + std::to_string(q) + "," +
                  std::to_string(r) + "]";
  return reduce(std::move(eq));
}

TernaryEquation form_four_term(const Int& a_p, const Int& a_q, const Int& a_r,
                               const Int& a_t, int p, int q, int r, int t,
                               unsigned ell, unsigned ell0, Signature sig) {
  if (p + q != r + t) throw ArithError("[p,q,r,t]: requires p + q = r + t");
  if (p == q || p == r || p == t || q == r || q == t || r == t)
    throw ArithError("[p,q,r,t]: indices must be distinct");
  if (sig == Signature::LLL && ell0 != ell)
    throw ArithError("[p,q,r,t] with signature (l,l,l) needs ell0 = ell");
  TernaryEquation eq;
  eq.ell = ell;
  eq.sig = sig;
  Int c = Int(p) * q - Int(r) * t;
  std::string xy = "x" + std::to_string(p) + "x" + std::to_string(q);
  std::string rt = "x" + std::to_string(r) + "x" + std::to_string(t);
  if (sig == Signature::LL2) {
    eq.coeff = {a_p * a_q, -(a_r * a_t), c};
    eq.slots = {Slot{xy}, Slot{rt}, Slot{"d"}};
  } else {
    eq.coeff = {a_p * a_q, -(a_r * a_t), -c};
    eq.slots = {Slot{xy}, Slot{rt}, Slot{"d^2"}};
  }
  eq.provenance = "[" + std::to_string(p) + "," + std::to_string(q) + "," +
                  std::to_string(r) + "," + std::to_string(t) + "]";
  return reduce(std::move(eq));
}

TernaryEquation reduce(TernaryEquation eq) {
  for (const Int& c : eq.coeff)
    if (c == 0) throw ArithError("ternary: zero coefficient");

  // Absorb complete powers before cancelling the gcd, so that scaled
  // multiples of an equation reduce to genuinely new forms.
  strip_powers(eq, 0, eq.ell);
  strip_powers(eq, 1, eq.ell);
  strip_powers(eq, 2, eq.sig == Signature::LL2 ? 2 : eq.ell);

  Int g = gcd(gcd(abs_int(eq.coeff[0]), abs_int(eq.coeff[1])),
              abs_int(eq.coeff[2]));
  for (auto& c : eq.coeff) c /= g;

  const bool odd = eq.ell % 2 == 1;
  if (odd) {
    if (eq.sig == Signature::LLL) {
      for (int i = 0; i < 3; ++i)
        if (eq.coeff[i] < 0) flip_slot(eq, i);
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return eq.coeff[a] < eq.coeff[b]; });
      permute(eq, order);
    } else {
      for (int i = 0; i < 2; ++i)
        if (eq.coeff[i] < 0) flip_slot(eq, i);
      if (eq.coeff[2] < 0) {
        // a x^l + b y^l = -c z^2 is equivalent to a(-x)^l + b(-y)^l = c z^2.
        eq.coeff[2] = -eq.coeff[2];
        flip_slot(eq, 0);
        eq.coeff[0] = -eq.coeff[0];
        flip_slot(eq, 1);
        eq.coeff[1] = -eq.coeff[1];
      }
      if (eq.coeff[1] < eq.coeff[0]) {
        permute(eq, {1, 0, 2});
      }
    }
  }

  std::sort(eq.side_conditions.begin(), eq.side_conditions.end(),
            [](const SideCondition& a, const SideCondition& b) {
              return a.slot != b.slot ? a.slot < b.slot : a.divisor < b.divisor;
            });
  eq.side_conditions.erase(
      std::unique(eq.side_conditions.begin(), eq.side_conditions.end()),
      eq.side_conditions.end());
  return eq;
}

std::vector<TernaryEquation> scaling_variants(const TernaryEquation& eq) {
  std::vector<Int> primes;
  for (const Int& c : eq.coeff)
    for (const auto& [p, e] : factor(c).factors)
      if (std::find(primes.begin(), primes.end(), p) == primes.end())
        primes.push_back(p);
  // c z^2 slots shift exponent parity, so the period doubles there
  const unsigned period =
      eq.sig == Signature::LL2 ? 2 * eq.ell : eq.ell;

  std::vector<TernaryEquation> out;
  std::vector<std::array<Int, 3>> seen;
  std::vector<unsigned> t(primes.size(), 0);
  while (true) {
    TernaryEquation v = eq;
    for (size_t s = 0; s < primes.size(); ++s)
      if (t[s] > 0) {
        Int scale = pow_int(primes[s], t[s]);
        for (auto& c : v.coeff) c *= scale;
      }
    v = reduce(std::move(v));
    if (std::find(seen.begin(), seen.end(), v.coeff) == seen.end()) {
      seen.push_back(v.coeff);
      out.push_back(std::move(v));
    }
    // odometer over the shift vector
    size_t s = 0;
    while (s < primes.size() && ++t[s] == period) t[s++] = 0;
    if (s == primes.size()) break;
    if (out.size() > 4096) break;  // defensive cap; never hit in practice
  }
  return out;
}

}  // namespace lacuna
