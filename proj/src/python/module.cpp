// Python bindings for the main operations.  Big integers and rationals
// cross the boundary as strings to keep exactness without pulling gmpy in.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lacuna/cases.hpp"
#include "lacuna/curves.hpp"
#include "lacuna/decompose.hpp"
#include "lacuna/kb.hpp"
#include "lacuna/search.hpp"
#include "lacuna/sieve.hpp"

namespace py = pybind11;
using namespace lacuna;

namespace {

Rat rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

ProblemSpec spec_of(int k, unsigned ell, int i) { return {k, ell, i}; }

py::dict record_dict(const SolutionRecord& r) {
  py::dict d;
  d["x"] = r.x.get_str();
  d["y"] = r.y.get_str();
  d["n"] = r.n.get_str();
  d["d"] = r.d.get_str();
  d["m"] = r.m.get_str();
  d["t"] = r.t.get_str();
  d["classification"] = r.classification == SolutionClass::Trivial ? "trivial"
                        : r.classification == SolutionClass::Listed ? "listed"
                                                                    : "new";
  return d;
}

}  // namespace

PYBIND11_MODULE(_lacuna, m) {
  m.doc() = "perfect powers in omitted-term products: search and checks";

  m.def(
      "verify",
      [](const std::string& x, const std::string& y, int k, unsigned ell,
         int i) { return verify(rat(x), rat(y), spec_of(k, ell, i)); },
      py::arg("x"), py::arg("y"), py::arg("k"), py::arg("ell"), py::arg("i"),
      "Exact check of the omitted-term product against y^ell.");

  m.def(
      "search",
      [](int k, unsigned ell, int i, long nmax, long dmax, bool trivial,
         int jobs) {
        SearchBounds bounds{Int(nmax), Int(dmax), trivial, jobs};
        py::list out;
        for (const auto& r : search(spec_of(k, ell, i), bounds))
          out.append(record_dict(r));
        return out;
      },
      py::arg("k"), py::arg("ell"), py::arg("i"), py::arg("nmax"),
      py::arg("dmax"), py::arg("include_trivial") = false, py::arg("jobs") = 1,
      "Exhaustive box search over x = n/d^ell0.");

  m.def(
      "decompose",
      [](const std::string& x, const std::string& y, int k, unsigned ell,
         int i) {
        auto spec = spec_of(k, ell, i);
        auto sol = normalize_solution(rat(x), rat(y), spec);
        auto dec = decompose_terms(sol, spec);
        py::dict d;
        d["n"] = sol.n.get_str();
        d["d"] = sol.d.get_str();
        d["ell0"] = sol.ell0;
        d["m"] = sol.m.get_str();
        d["t"] = sol.t.get_str();
        py::list terms;
        for (const auto& t : dec.terms) {
          py::dict td;
          td["j"] = t.j;
          td["a"] = t.a.value().get_str();
          td["x"] = t.x.get_str();
          terms.append(td);
        }
        d["terms"] = terms;
        return d;
      },
      py::arg("x"), py::arg("y"), py::arg("k"), py::arg("ell"), py::arg("i"));

  m.def(
      "reflect",
      [](int k, unsigned ell, int i, const std::string& x,
         const std::string& y) {
        auto [spec2, x2, y2] = reflect(spec_of(k, ell, i), rat(x), rat(y));
        return py::make_tuple(spec2.k, spec2.ell, spec2.i, x2.get_str(),
                              y2.get_str());
      },
      py::arg("k"), py::arg("ell"), py::arg("i"), py::arg("x"),
      py::arg("y") = "0");

  m.def(
      "lambda_set",
      [](unsigned ell, long q) {
        std::vector<std::string> out;
        for (const Int& r : lambda_set(ell, q).residues)
          out.push_back(r.get_str());
        return out;
      },
      py::arg("ell"), py::arg("q"));

  m.def(
      "kb_match",
      [](unsigned ell, const std::string& sig, const std::string& a,
         const std::string& b, const std::string& c) {
        TernaryEquation eq;
        eq.ell = ell;
        eq.sig = sig == "ll2" ? Signature::LL2 : Signature::LLL;
        eq.coeff = {Int(a), Int(b), Int(c)};
        eq.slots = {Slot{"x"}, Slot{"y"}, Slot{"z"}};
        eq = reduce(std::move(eq));
        KB kb = load_kb(std::nullopt);
        py::list out;
        for (const auto& m2 : kb.match(eq, ell)) {
          py::dict d;
          d["entry"] = m2.entry->id;
          d["conclusion"] = m2.conclusion == Conclusion::NoNontrivial
                                ? "no-nontrivial"
                                : "exceptional";
          out.append(d);
        }
        return out;
      },
      py::arg("ell"), py::arg("sig"), py::arg("a"), py::arg("b"),
      py::arg("c"));

  m.def(
      "replay_table",
      [](int table, const std::string& data) {
        if (!data.empty()) setenv("LACUNA_DATA", data.c_str(), 1);
        KB kb = load_kb(std::nullopt);
        auto rows = load_case_rows(table_file(table));
        auto report = replay_table(std::to_string(table), rows, kb);
        py::dict d;
        d["table"] = report.table_id;
        d["rows"] = report.rows_total;
        d["passed"] = report.rows_passed;
        d["unverified"] = report.rows_unverified;
        d["all_passed"] = report.all_passed();
        return d;
      },
      py::arg("table"), py::arg("data") = "");

  m.def(
      "torsion",
      [](int p1, int p2, int p3, long b) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& P : torsion_points(ec_from_triple(p1, p2, p3, b))) {
          if (P.infinity)
            out.emplace_back("inf", "");
          else
            out.emplace_back(P.x.get_str(), P.y.get_str());
        }
        return out;
      },
      py::arg("p1"), py::arg("p2"), py::arg("p3"), py::arg("b"),
      "Torsion points of b y^2 = (x+p1)(x+p2)(x+p3) in the integral model.");

  m.def(
      "curve_family",
      [](int p, int q, int r, long c, int k, unsigned ell, int i,
         const std::string& seed_x, const std::string& seed_y, int count) {
        QuarticModel model{p, q, r, Int(c)};
        CurvePoint seed = CurvePoint::make(rat(seed_x), rat(seed_y));
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [x, y] :
             generate_family(model, spec_of(k, ell, i), seed, count))
          out.emplace_back(x.get_str(), y.get_str());
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("c"), py::arg("k"),
      py::arg("ell"), py::arg("i"), py::arg("seed_x"), py::arg("seed_y"),
      py::arg("count") = 2);

  m.attr("__version__") = "0.1.0";
}
