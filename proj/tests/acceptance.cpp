// Acceptance suite: one line per criterion, exact arithmetic throughout.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "lacuna/cases.hpp"
#include "lacuna/curves.hpp"
#include "lacuna/decompose.hpp"
#include "lacuna/kb.hpp"
#include "lacuna/search.hpp"
#include "lacuna/sieve.hpp"
#include "lacuna/ternary.hpp"

using namespace lacuna;

namespace {

int g_failures = 0;

void report(int id, const std::string& what, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::set<std::pair<std::string, std::string>> nontrivial_set(
    const std::vector<SolutionRecord>& rs) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : rs)
    if (r.classification != SolutionClass::Trivial)
      out.insert({r.x.get_str(), r.y.get_str()});
  return out;
}

// ---------------------------------------------------------------- 1, 2, 3
void solution_reproduction() {
  auto t0 = std::chrono::steady_clock::now();
  auto s1 = nontrivial_set(search({7, 2, 2}, {2000, 20, false, 0}));
  auto s2 = nontrivial_set(search({7, 2, 6}, {2000, 20, false, 0}));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok1 = s1 == std::set<std::pair<std::string, std::string>>{{"-37/7", "720/343"}} &&
             s2 == std::set<std::pair<std::string, std::string>>{{"-19/7", "720/343"}} &&
             secs < 60.0;
  report(1, "k=7 record solutions, |n|<=2000, d<=20, under 60s", ok1,
         "took " + std::to_string(secs) + "s");

  auto s3 = nontrivial_set(search({5, 2, 2}, {200, 25, false, 0}));
  std::vector<std::pair<std::string, std::string>> five = {
      {"-7", "12"}, {"-11/3", "8/9"}, {"-17/5", "24/25"},
      {"-3/7", "240/49"}, {"-119/23", "720/529"}};
  bool ok2 = true;
  for (const auto& s : five) ok2 = ok2 && s3.count(s) > 0;
  report(2, "k=5 family: all five listed solutions in the box", ok2);

  bool ok3 = true;
  {
    auto rs = search({6, 2, 5}, {5, 2, false, 1});
    bool f1 = false;
    for (const auto& r : rs) f1 = f1 || (r.x == 0 && r.y == 12);
    auto rs2 = search({4, 3, 3}, {5, 2, false, 1});
    bool f2 = false;
    for (const auto& r : rs2) f2 = f2 || (r.x == 0 && r.y == 2);
    bool f3 = verify(Rat(0), Rat(720), {10, 2, 7});
    ok3 = f1 && f2 && f3;
  }
  report(3, "d=1 classics: 6!/5 = 12^2, 4!/3 = 2^3, 10!/7 = 720^2", ok3);
}

// ------------------------------------------------------------------- 4
void lambda_sets_exact() {
  auto as_set = [](const std::vector<Int>& v) {
    std::set<long> s;
    for (const Int& x : v) s.insert(x.get_si());
    return s;
  };
  bool ok = as_set(lambda_set(5, 25).residues) == std::set<long>{1, 7, 18, 24};
  ok = ok && as_set(lambda_set(7, 49).residues) ==
                 std::set<long>{1, 18, 19, 30, 31, 48};
  ok = ok && as_set(lambda_set(7, 29).residues) == std::set<long>{1, 12, 17, 28};
  ok = ok && as_set(lambda_coset(7, 49, 10, 4)) ==
                 std::set<long>{4, 22, 23, 26, 27, 45};
  ok = ok && as_set(lambda_coset(7, 49, 10, 18)) ==
                 std::set<long>{6, 10, 16, 33, 39, 43};
  ok = ok && mod_inverse(2, 49) == 25 && mod_inverse(6, 49) == 41;
  report(4, "lambda sets, sixth-power cosets, inverses mod 49", ok);
}

// ------------------------------------------------------------------- 5, 6
void curve_pipeline() {
  QuarticModel model{2, 3, 4, 1};
  WeierstrassCurve F = quartic_to_cubic(model);
  bool ok = F == WeierstrassCurve{8, 12, 0};

  auto tor = torsion_points(F);
  std::set<std::pair<std::string, std::string>> tset;
  for (const auto& P : tor)
    tset.insert(P.infinity ? std::make_pair(std::string("inf"), std::string())
                           : std::make_pair(P.x.get_str(), P.y.get_str()));
  ok = ok && tset == std::set<std::pair<std::string, std::string>>{
                         {"inf", ""}, {"0", "0"}, {"-2", "0"}, {"-6", "0"}};

  CurvePoint P = map_quartic_point(model, Rat(-6), Rat(1), Rat(12));
  ok = ok && P == CurvePoint::make(Rat(2), Rat(8));

  CurvePoint twoP = add_points(F, P, P);
  auto nd = unmap_quartic_point(model, twoP);
  ok = ok && nd && nd->first == Rat(-96, 23);
  if (ok) {
    Rat x = nd->first - 1;
    x.canonicalize();
    Rat y = abs(nd->second);
    ok = x == Rat(-119, 23) && y == Rat(720, 529) && verify(x, y, {5, 2, 2});
  }
  report(5, "quartic <-> cubic pipeline on F: y^2 = x^3 + 8x^2 + 12x", ok);

  auto kl = torsion_points(ec_from_triple(1, 3, 4, 1));
  std::set<std::pair<std::string, std::string>> kset;
  for (const auto& Q : kl)
    kset.insert(Q.infinity ? std::make_pair(std::string("inf"), std::string())
                           : std::make_pair(Q.x.get_str(), Q.y.get_str()));
  bool ok6 = kset == std::set<std::pair<std::string, std::string>>{
                         {"inf", ""}, {"-1", "0"}, {"-3", "0"}, {"-4", "0"}};
  for (const auto& Q : kl)
    if (!Q.infinity) ok6 = ok6 && Q.y == 0;  // pullback gives only y = 0
  ok6 = ok6 && nontrivial_set(search({4, 2, 2}, {500, 20, false, 0})).empty();
  report(6, "Klein-four closure of the k=4 case: no nontrivial solutions", ok6);
}

// ------------------------------------------------------------------- 7
void table_replay() {
  KB kb = load_kb(std::nullopt);
  bool ok = true;
  std::string detail;
  int rows = 0, lines = 0, unverified = 0;
  for (int t = 1; t <= 14; ++t) {
    auto report_t = replay_table(std::to_string(t),
                                 load_case_rows(table_file(t)), kb);
    rows += report_t.rows_total;
    lines += static_cast<int>(report_t.lines.size());
    unverified += report_t.rows_unverified;
    if (!report_t.all_passed()) {
      ok = false;
      detail += " table " + std::to_string(t);
    }
  }
  report(7, "tables 1-14 replay: " + std::to_string(rows) + " rows (" +
             std::to_string(lines) + " lines) pass, " +
             std::to_string(unverified) + " unverified rows skipped",
         ok, detail);
}

// ------------------------------------------------------------------- 8
using Pattern = std::map<int, unsigned>;

Pattern full_pattern(int k, int i, std::map<int, unsigned> nz) {
  Pattern p;
  for (int j = 1; j <= k; ++j)
    if (j != i) p[j] = 0;
  for (auto [j, e] : nz) p.at(j) = e;
  return p;
}

// Plain-integer oracle: walk an honest box of (n, d) and collect the
// valuation residue vectors whose sum vanishes mod ell.
std::set<Pattern> brute_box(int k, unsigned ell, int i, long p, unsigned ell0,
                            int64_t nbound) {
  std::set<Pattern> out;
  for (long d : {1L, 2L, 3L}) {
    int64_t D = 1;
    for (unsigned e = 0; e < ell0; ++e) D *= d;
    for (int64_t n = -nbound; n <= nbound; ++n) {
      if (std::gcd(n, static_cast<int64_t>(d)) != 1) continue;
      Pattern pat;
      unsigned long sum = 0;
      bool zero = false;
      for (int j = 1; j <= k && !zero; ++j) {
        if (j == i) continue;
        int64_t term = n + j * D;
        if (term == 0) {
          zero = true;
          break;
        }
        if (term < 0) term = -term;
        unsigned e = 0;
        while (term % p == 0) {
          term /= p;
          ++e;
        }
        pat[j] = e % ell;
        sum += e;
      }
      if (!zero && sum % ell == 0) out.insert(pat);
    }
  }
  return out;
}

void pattern_enumeration() {
  // the two printed matrices
  auto pset = [](const std::vector<ValuationPattern>& ps) {
    std::set<Pattern> out;
    for (const auto& p : ps) out.insert(p.exps);
    return out;
  };
  bool ok = pset(enumerate_patterns(6, 5, 2, 2, 1)) ==
            std::set<Pattern>{full_pattern(6, 2, {}),
                              full_pattern(6, 2, {{1, 1}, {3, 3}, {5, 1}}),
                              full_pattern(6, 2, {{1, 2}, {3, 1}, {5, 2}}),
                              full_pattern(6, 2, {{4, 4}, {6, 1}}),
                              full_pattern(6, 2, {{4, 1}, {6, 4}})};
  ok = ok && pset(enumerate_patterns(8, 7, 2, 3, 1)) ==
                 std::set<Pattern>{full_pattern(8, 2, {}),
                                   full_pattern(8, 2, {{1, 5}, {4, 1}, {7, 1}}),
                                   full_pattern(8, 2, {{1, 1}, {4, 5}, {7, 1}}),
                                   full_pattern(8, 2, {{1, 1}, {4, 1}, {7, 5}}),
                                   full_pattern(8, 2, {{3, 6}, {6, 1}}),
                                   full_pattern(8, 2, {{3, 1}, {6, 6}}),
                                   full_pattern(8, 2, {{5, 6}, {8, 1}}),
                                   full_pattern(8, 2, {{5, 1}, {8, 6}})};
  for (unsigned ell : {5u, 7u}) {
    ok = ok && pset(enumerate_patterns(4, ell, 2, 3, ell)) ==
                   std::set<Pattern>{
                       full_pattern(4, 2, {}),
                       full_pattern(4, 2, {{1, ell - 1}, {4, 1}}),
                       full_pattern(4, 2, {{1, 1}, {4, ell - 1}})};
  }
  report(8, "printed valuation-pattern matrices reproduced exactly", ok);

  // full oracle sweep over the paper scope
  bool ok2 = true;
  std::string detail;
  for (int k = 4; k <= 8; ++k)
    for (unsigned ell : {3u, 5u, 7u})
      for (int i = 2; 2 * i <= k + 1; ++i)
        for (long p : {2L, 3L, 5L, 7L}) {
          if (p >= k) continue;
          unsigned ell0 = ell0_for({k, ell, i});
          if (ell0 != 1 && p == 2 && ell == 7 && k >= 7) {
            // d^7 strata overflow the int64 oracle box; covered by the
            // mpz-based unit oracle instead
          }
          auto pats = enumerate_patterns(k, ell, i, p, ell0);
          auto got = pset(pats);
          // a box that contains every enumerated witness sees every pattern
          int64_t nbound = 100;
          for (const auto& pat : pats) {
            Int w = abs_int(pat.witness_n) + 30;
            if (w.fits_slong_p() && w.get_si() > nbound) nbound = w.get_si();
          }
          auto oracle = brute_box(k, ell, i, p, ell0, nbound);
          if (got != oracle) {
            ok2 = false;
            detail = "pattern mismatch at k=" + std::to_string(k) + " ell=" +
                     std::to_string(ell) + " i=" + std::to_string(i) + " p=" +
                     std::to_string(p);
          }
        }
  report(8, "enumerate_patterns agrees with the integer-box oracle "
            "across the whole scope", ok2, detail);
}

// ------------------------------------------------------------------- 9
void property_suites() {
  // former identities, 1000 exact fuzz cases
  bool ok = true;
  uint64_t state = 0x9e3779b97f4a7c15ULL;
  auto rnd = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  int done = 0;
  while (done < 1000) {
    unsigned ell = std::vector<unsigned>{3, 5, 7}[rnd() % 3];
    unsigned ell0 = rnd() % 2 ? ell : 1;
    Int n = static_cast<long>(rnd() % 2000) - 1000;
    Int d = static_cast<long>(rnd() % 20) + 1;
    if (gcd(n, d) != 1) continue;
    Int D = pow_int(d, ell0);
    auto term = [&](int j) { return Int(n + j * D); };
    if (term(1) * term(2) * term(3) * term(4) == 0) continue;
    auto eq = form_three_term(term(1), term(2), term(4), 1, 2, 4, ell);
    // substitute x_j = 1 through the absorbed multipliers
    Int sum = 0;
    for (int s = 0; s < 3; ++s)
      sum += eq.coeff[s] * pow_int(eq.slots[s].absorbed, ell);
    ok = ok && sum == 0;
    auto eq2 = form_four_term(term(1), term(4), term(2), term(3), 1, 4, 2, 3,
                              ell, ell0, Signature::LL2);
    Int lhs = 0;
    std::array<Int, 3> vals{1, 1, D};
    for (int s = 0; s < 2; ++s) {
      Int v = eq2.slots[s].absorbed *
              (eq2.slots[s].label == "d" ? vals[2] : 1);
      lhs += eq2.coeff[s] * pow_int(v, ell);
    }
    Int zv = 0;
    for (int s = 0; s < 3; ++s)
      if (eq2.slots[s].label == "d") zv = eq2.slots[s].absorbed * D;
    ok = ok && lhs == eq2.coeff[2] * zv * zv;
    ++done;
  }
  report(9, "former identities: 1000 exact substitution checks", ok);

  // KB matcher soundness, 10000 random equations
  KB kb = default_kb();
  bool ok2 = true;
  for (int t = 0; t < 10000; ++t) {
    unsigned ell = std::vector<unsigned>{3, 5, 7}[rnd() % 3];
    TernaryEquation eq;
    eq.ell = ell;
    eq.sig = rnd() % 2 ? Signature::LL2 : Signature::LLL;
    auto coeff = [&]() -> long {
      switch (rnd() % 4) {
        case 0: return 1;
        case 1: return 1L << (rnd() % 7);
        case 2: { long v = 1; for (unsigned u = 0; u < rnd() % 5; ++u) v *= 3; return v; }
        default: return static_cast<long>(rnd() % 60) + 1;
      }
    };
    eq.coeff = {coeff(), coeff(), coeff()};
    if (eq.sig == Signature::LLL && rnd() % 2) eq.coeff[2] = -eq.coeff[2];
    eq.slots = {Slot{"x"}, Slot{"y"}, Slot{"z"}};
    eq = reduce(std::move(eq));
    if (rnd() % 4 == 0) eq.side_conditions.push_back({5, static_cast<int>(rnd() % 2)});
    auto variants = scaling_variants(eq);
    for (const auto& m : kb.match(eq, ell)) {
      bool witnessed = false;
      for (const auto& v : variants) {
        if (m.entry->sig != v.sig || !m.entry->coeff_pred(v)) continue;
        bool sat = true;
        for (const auto& g : m.entry->conds) {
          bool any = false;
          for (const Int& dv : g.divisors)
            for (int s = 0; s < 3; ++s) {
              if (g.power_vars_only && v.sig == Signature::LL2 && s == 2)
                continue;
              if (v.has_condition(dv, s)) any = true;
            }
          sat = sat && any;
        }
        witnessed = witnessed || sat;
      }
      ok2 = ok2 && witnessed && m.entry->ell.admits(ell);
    }
  }
  report(9, "KB matcher soundness: 10000 random reduced equations", ok2);

  // group law axioms and map/unmap round trips
  bool ok3 = true;
  {
    QuarticModel model{2, 3, 4, 1};
    WeierstrassCurve F = quartic_to_cubic(model);
    CurvePoint P = CurvePoint::make(Rat(2), Rat(8));
    std::vector<CurvePoint> pool;
    for (long m = -3; m <= 3; ++m) pool.push_back(multiply(F, P, m));
    for (const auto& T : torsion_points(F)) pool.push_back(add_points(F, P, T));
    for (const auto& A : pool) ok3 = ok3 && on_curve(F, A);
    for (int t = 0; t < 100; ++t) {
      const auto& A = pool[rnd() % pool.size()];
      const auto& B = pool[rnd() % pool.size()];
      const auto& C = pool[rnd() % pool.size()];
      ok3 = ok3 && add_points(F, A, B) == add_points(F, B, A);
      ok3 = ok3 && add_points(F, add_points(F, A, B), C) ==
                       add_points(F, A, add_points(F, B, C));
    }
    int found = 0;
    for (long d = 1; d <= 15; ++d)
      for (long N = -50; N <= 50; ++N) {
        if (N == 0) continue;
        Int prod = Int(N) * (N + 2 * d) * (N + 3 * d) * (N + 4 * d);
        if (prod <= 0) continue;
        auto root = perfect_power_root(prod, 2);
        if (!root) continue;
        CurvePoint Q = map_quartic_point(model, Rat(N), Rat(d), Rat(*root));
        ok3 = ok3 && on_curve(F, Q);
        auto nd = unmap_quartic_point(model, Q);
        if (!nd) continue;
        Rat expect(N, d);
        expect.canonicalize();
        ok3 = ok3 && nd->first == expect;
        ++found;
      }
    ok3 = ok3 && found > 10;
  }
  report(9, "group-law axioms and map/unmap inverses", ok3);
}

}  // namespace

int main() {
  solution_reproduction();
  lambda_sets_exact();
  curve_pipeline();
  table_replay();
  pattern_enumeration();
  property_suites();
  if (g_failures) {
    std::cout << g_failures << " criterion check(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria pass\n";
  return 0;
}
