#include "lacuna/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lacuna {

namespace {

struct ListedSolution {
  int k;
  unsigned ell;
  int i;
  Rat x, y;
};

// Solutions listed explicitly for this equation family, plus their mirror
// images; used only to classify output records.
const std::vector<ListedSolution>& listed_solutions() {
  static const std::vector<ListedSolution> table = [] {
    std::vector<ListedSolution> t = {
        {7, 2, 2, Rat(-37, 7), Rat(720, 343)},
        {7, 2, 6, Rat(-19, 7), Rat(720, 343)},
        {5, 2, 2, Rat(-7), Rat(12)},
        {5, 2, 2, Rat(-11, 3), Rat(8, 9)},
        {5, 2, 2, Rat(-17, 5), Rat(24, 25)},
        {5, 2, 2, Rat(-3, 7), Rat(240, 49)},
        {5, 2, 2, Rat(-119, 23), Rat(720, 529)},
        {6, 2, 5, Rat(0), Rat(12)},   // 6!/5 = 12^2
        {10, 2, 7, Rat(0), Rat(720)}, // 10!/7 = 720^2
        {4, 3, 3, Rat(0), Rat(2)},    // 4!/3 = 2^3
    };
    // mirrors x -> -x-(k+1)
    size_t base = t.size();
    for (size_t s = 0; s < base; ++s) {
      ListedSolution m = t[s];
      m.i = m.k + 1 - m.i;
      m.x = -m.x - (m.k + 1);
      m.x.canonicalize();
      t.push_back(m);
    }
    return t;
  }();
  return table;
}

SolutionClass classify(const ProblemSpec& spec, const Rat& x, const Rat& y) {
  for (const auto& s : listed_solutions()) {
    if (s.k != spec.k || s.i != spec.i || s.ell != spec.ell) continue;
    if (s.x != x) continue;
    if (spec.ell % 2 == 0 ? abs(s.y) == abs(y) : s.y == y)
      return SolutionClass::Listed;
  }
  return SolutionClass::New;
}

std::vector<SolutionRecord> search_stratum(const ProblemSpec& spec,
                                           const SearchBounds& bounds,
                                           const Int& d) {
  const unsigned ell0 = ell0_for(spec);
  const Int de = pow_int(d, ell0);
  const unsigned long texp =
      static_cast<unsigned long>(spec.k - 1) * ell0 / spec.ell;
  const Int t = pow_int(d, texp);
  const bool even_ell = spec.ell % 2 == 0;

  std::vector<SolutionRecord> out;
  for (Int n = -bounds.nmax; n <= bounds.nmax; ++n) {
    if (gcd(n, d) != 1) continue;
    Int product = 1;
    bool zero_term = false;
    for (int j = 1; j <= spec.k && !zero_term; ++j) {
      if (j == spec.i) continue;
      Int term = n + j * de;
      if (term == 0)
        zero_term = true;
      else
        product *= term;
    }

    SolutionRecord rec;
    rec.spec = spec;
    rec.n = n;
    rec.d = d;
    rec.t = t;
    rec.x = Rat(n) / Rat(de);
    rec.x.canonicalize();

    if (zero_term) {
      if (!bounds.include_trivial) continue;
      rec.m = 0;
      rec.y = 0;
      rec.classification = SolutionClass::Trivial;
      out.push_back(std::move(rec));
      continue;
    }
    if (even_ell && product < 0) continue;
    auto root = perfect_power_root(product, spec.ell);
    if (!root) continue;
    rec.m = even_ell ? abs_int(*root) : *root;
    rec.y = Rat(rec.m) / Rat(t);
    rec.y.canonicalize();
    rec.classification = classify(spec, rec.x, rec.y);
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

bool verify(const Rat& x, const Rat& y, const ProblemSpec& spec) {
  spec.validate();
  Rat prod = 1;
  for (int j = 1; j <= spec.k; ++j) {
    if (j == spec.i) continue;
    prod *= x + j;
  }
  Rat yp = 1;
  for (unsigned e = 0; e < spec.ell; ++e) yp *= y;
  return prod == yp;
}

std::vector<SolutionRecord> search(const ProblemSpec& spec,
                                   const SearchBounds& bounds) {
  spec.validate_search_scope();
  if (bounds.nmax < 1 || bounds.dmax < 1)
    throw ArithError("search: bounds must be >= 1");

  std::vector<Int> ds;
  for (Int d = 1; d <= bounds.dmax; ++d) ds.push_back(d);

  unsigned jobs = bounds.jobs > 0 ? bounds.jobs
                                  : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, ds.size());

  std::vector<std::vector<SolutionRecord>> per_d(ds.size());
  if (jobs <= 1) {
    for (size_t s = 0; s < ds.size(); ++s)
      per_d[s] = search_stratum(spec, bounds, ds[s]);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t s = next.fetch_add(1); s < ds.size(); s = next.fetch_add(1))
          per_d[s] = search_stratum(spec, bounds, ds[s]);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<SolutionRecord> out;
  for (auto& v : per_d)
    out.insert(out.end(), std::make_move_iterator(v.begin()),
               std::make_move_iterator(v.end()));
  return out;
}

}  // namespace lacuna
