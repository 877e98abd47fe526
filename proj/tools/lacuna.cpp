// lacuna: search and verification tool for perfect powers in products of
// consecutive terms with one term omitted.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>

#include "lacuna/cases.hpp"
#include "lacuna/curves.hpp"
#include "lacuna/decompose.hpp"
#include "lacuna/kb.hpp"
#include "lacuna/report.hpp"
#include "lacuna/search.hpp"
#include "lacuna/sieve.hpp"

using namespace lacuna;
using nlohmann::json;

namespace {

Rat parse_rational(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  throw CLI::ValidationError("--format must be text or json");
}

struct SpecFlags {
  int k = 5, i = 2;
  unsigned ell = 2;
  void attach(CLI::App* app) {
    app->add_option("--k", k, "number of factors before omission")->required();
    app->add_option("--i", i, "omitted index")->required();
    app->add_option("--ell", ell, "prime exponent")->required();
  }
  ProblemSpec spec() const { return {k, ell, i}; }
};

int cmd_search(const SpecFlags& sf, long nmax, long dmax, bool trivial,
               int jobs, const std::string& format) {
  SearchBounds bounds{Int(nmax), Int(dmax), trivial, jobs};
  auto records = search(sf.spec(), bounds);
  std::cout << render_solutions(records, parse_format(format));
  return 0;
}

int cmd_verify(const SpecFlags& sf, const std::string& xs,
               const std::string& ys, const std::string& format) {
  Rat x = parse_rational(xs), y = parse_rational(ys);
  bool ok = verify(x, y, sf.spec());
  if (parse_format(format) == OutputFormat::Json) {
    std::cout << json{{"x", x.get_str()},
                      {"y", y.get_str()},
                      {"verified", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << (ok ? "solution" : "not a solution") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const SpecFlags& sf, const std::string& xs,
                  const std::string& ys, const std::string& format) {
  Rat x = parse_rational(xs), y = parse_rational(ys);
  auto spec = sf.spec();
  auto sol = normalize_solution(x, y, spec);
  auto dec = decompose_terms(sol, spec);
  if (parse_format(format) == OutputFormat::Json) {
    json terms = json::array();
    for (const auto& t : dec.terms)
      terms.push_back({{"j", t.j},
                       {"a", t.a.value().get_str()},
                       {"x", t.x.get_str()}});
    std::cout << json{{"n", sol.n.get_str()},
                      {"d", sol.d.get_str()},
                      {"ell0", sol.ell0},
                      {"m", sol.m.get_str()},
                      {"t", sol.t.get_str()},
                      {"terms", terms}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n=" << sol.n.get_str() << " d=" << sol.d.get_str()
              << " ell0=" << sol.ell0 << " m=" << sol.m.get_str()
              << " t=" << sol.t.get_str() << "\n";
    for (const auto& t : dec.terms)
      std::cout << "  j=" << t.j << "\ta_j=" << t.a.value().get_str()
                << "\tx_j=" << t.x.get_str() << "\n";
  }
  return 0;
}

int cmd_lambda(unsigned ell, long q, const std::string& format) {
  const LambdaSet& ls = lambda_set(ell, q);
  if (parse_format(format) == OutputFormat::Json) {
    json arr = json::array();
    for (const Int& r : ls.residues) arr.push_back(r.get_str());
    std::cout << json{{"ell", ell}, {"q", q}, {"residues", arr}}.dump(2)
              << "\n";
  } else {
    std::cout << format_residues(ls.residues, ls.q) << "\n";
  }
  return 0;
}

int cmd_kb_match(unsigned ell, const std::string& sig, const std::string& a,
                 const std::string& b, const std::string& c,
                 const std::vector<std::string>& conds,
                 const std::string& kb_file, const std::string& format) {
  TernaryEquation eq;
  eq.ell = ell;
  eq.sig = sig == "ll2" ? Signature::LL2 : Signature::LLL;
  eq.coeff = {Int(a), Int(b), Int(c)};
  eq.slots = {Slot{"x"}, Slot{"y"}, Slot{"z"}};
  eq = reduce(std::move(eq));
  for (const auto& spec : conds) {
    auto bar = spec.find('|');
    if (bar == std::string::npos)
      throw CLI::ValidationError("--cond needs the form <divisor>|<x|y|z>");
    int slot = std::string("xyz").find(spec.substr(bar + 1));
    eq.side_conditions.push_back({Int(spec.substr(0, bar)), slot});
  }
  KB kb = load_kb(kb_file.empty() ? std::nullopt
                                  : std::make_optional(kb_file));
  auto matches = kb.match(eq, ell);
  if (parse_format(format) == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& m : matches)
      arr.push_back({{"entry", m.entry->id},
                     {"conclusion", m.conclusion == Conclusion::NoNontrivial
                                        ? "no-nontrivial"
                                        : "exceptional"}});
    std::cout << json{{"equation", eq.str()}, {"matches", arr}}.dump(2)
              << "\n";
  } else {
    std::cout << eq.str() << "\n";
    if (matches.empty()) std::cout << "  no KB match\n";
    for (const auto& m : matches)
      std::cout << "  " << m.entry->id << ": "
                << (m.conclusion == Conclusion::NoNontrivial
                        ? "no nontrivial solutions"
                        : "exceptional solutions exist")
                << "\n";
  }
  return 0;
}

int cmd_replay(int table, bool all, const std::string& format) {
  KB kb = load_kb(std::nullopt);
  bool ok = true;
  std::vector<int> tables;
  if (all)
    for (int t = 1; t <= 14; ++t) tables.push_back(t);
  else
    tables.push_back(table);
  for (int t : tables) {
    auto rows = load_case_rows(table_file(t));
    auto report = replay_table(std::to_string(t), rows, kb);
    std::cout << render_table_report(report, parse_format(format));
    ok = ok && report.all_passed();
  }
  return ok ? 0 : 1;
}

int cmd_patterns(const SpecFlags& sf, long p, const std::string& format) {
  auto spec = sf.spec();
  auto pats = enumerate_patterns(spec.k, spec.ell, spec.i, p, ell0_for(spec));
  if (parse_format(format) == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& pat : pats) {
      json e = json::object();
      for (const auto& [j, v] : pat.exps) e[std::to_string(j)] = v;
      arr.push_back({{"exps", e},
                     {"witness_n", pat.witness_n.get_str()},
                     {"witness_d", pat.witness_d.get_str()}});
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& pat : pats) {
      for (const auto& [j, v] : pat.exps) std::cout << v << " ";
      std::cout << "\t(n=" << pat.witness_n.get_str()
                << ", d=" << pat.witness_d.get_str() << ")\n";
    }
  }
  return 0;
}

int cmd_reflect(const SpecFlags& sf, const std::string& xs,
                const std::string& ys, const std::string& format) {
  Rat x = parse_rational(xs);
  Rat y = ys.empty() ? Rat(0) : parse_rational(ys);
  auto [spec2, x2, y2] = reflect(sf.spec(), x, y);
  if (parse_format(format) == OutputFormat::Json) {
    std::cout << json{{"k", spec2.k},
                      {"i", spec2.i},
                      {"ell", spec2.ell},
                      {"x", x2.get_str()},
                      {"y", y2.get_str()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "k=" << spec2.k << " i=" << spec2.i << " ell=" << spec2.ell
              << " x=" << x2.get_str() << " y=" << y2.get_str() << "\n";
  }
  return 0;
}

struct CurveFlags {
  std::string triple, quartic;
  void attach(CLI::App* app) {
    app->add_option("--triple", triple, "p1,p2,p3,b of b y^2 = (x+p1)(x+p2)(x+p3)");
    app->add_option("--quartic", quartic,
                    "p,q,r,c of N(N+pd)(N+qd)(N+rd) = c y^2");
  }
  std::optional<QuarticModel> quartic_model() const {
    if (quartic.empty()) return std::nullopt;
    std::stringstream ss(quartic);
    std::string tok;
    std::vector<long> v;
    while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
    if (v.size() != 4)
      throw CLI::ValidationError("--quartic needs p,q,r,c");
    return QuarticModel{static_cast<int>(v[0]), static_cast<int>(v[1]),
                        static_cast<int>(v[2]), Int(v[3])};
  }
  WeierstrassCurve curve() const {
    if (!triple.empty()) {
      std::stringstream ss(triple);
      std::string tok;
      std::vector<long> v;
      while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
      if (v.size() != 4)
        throw CLI::ValidationError("--triple needs p1,p2,p3,b");
      return ec_from_triple(v[0], v[1], v[2], Int(v[3]));
    }
    if (auto m = quartic_model()) return quartic_to_cubic(*m);
    throw CLI::ValidationError("give --triple or --quartic");
  }
};

std::string curve_str(const WeierstrassCurve& E) {
  std::ostringstream os;
  os << "y^2 = x^3";
  auto term = [&](const Int& c, const char* mono) {
    if (c == 0) return;
    os << (c < 0 ? " - " : " + ");
    if (abs_int(c) != 1 || std::string(mono).empty()) os << abs_int(c).get_str();
    os << mono;
  };
  term(E.a2, " x^2");
  term(E.a4, " x");
  term(E.a6, "");
  return os.str();
}

std::string point_str(const CurvePoint& P) {
  if (P.infinity) return "inf";
  return "(" + P.x.get_str() + ", " + P.y.get_str() + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"searching and checking perfect powers in omitted-term products"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json")->capture_default_str();

  // search
  auto* s_search = app.add_subcommand("search", "exhaustive box search");
  SpecFlags sf_search;
  sf_search.attach(s_search);
  long nmax = 100, dmax = 10;
  bool trivial = false;
  int jobs = 0;
  s_search->add_option("--nmax", nmax, "bound on |n|")->required();
  s_search->add_option("--dmax", dmax, "bound on d")->required();
  s_search->add_flag("--include-trivial", trivial, "emit y = 0 roots too");
  s_search->add_option("--jobs", jobs, "worker threads (0 = all cores)");

  // verify
  auto* s_verify = app.add_subcommand("verify", "check one candidate exactly");
  SpecFlags sf_verify;
  sf_verify.attach(s_verify);
  std::string xs, ys;
  s_verify->add_option("--x", xs, "rational x")->required();
  s_verify->add_option("--y", ys, "rational y")->required();

  // decompose
  auto* s_dec = app.add_subcommand("decompose", "split a solution into a_j x_j^ell");
  SpecFlags sf_dec;
  sf_dec.attach(s_dec);
  std::string dxs, dys;
  s_dec->add_option("--x", dxs, "rational x")->required();
  s_dec->add_option("--y", dys, "rational y")->required();

  // lambda
  auto* s_lambda = app.add_subcommand("lambda", "residues with x^(phi(q)/ell) = 1");
  unsigned l_ell = 7;
  long l_q = 49;
  s_lambda->add_option("--ell", l_ell)->required();
  s_lambda->add_option("--q", l_q)->required();

  // kb-match
  auto* s_kb = app.add_subcommand("kb-match", "match a ternary equation");
  unsigned kb_ell = 7;
  std::string kb_sig = "lll", kb_a = "1", kb_b = "1", kb_c = "1", kb_file;
  std::vector<std::string> kb_conds;
  s_kb->add_option("--ell", kb_ell)->required();
  s_kb->add_option("--sig", kb_sig, "lll or ll2");
  s_kb->add_option("--a", kb_a)->required();
  s_kb->add_option("--b", kb_b)->required();
  s_kb->add_option("--c", kb_c)->required();
  s_kb->add_option("--cond", kb_conds, "side conditions like 5|x");
  s_kb->add_option("--kb", kb_file, "extra KB records file");

  // replay
  auto* s_replay = app.add_subcommand("replay", "replay a shipped case table");
  int table = 0;
  bool all_tables = false;
  s_replay->add_option("--table", table, "table number 1..14");
  s_replay->add_flag("--all", all_tables, "replay every table");

  // patterns
  auto* s_pat = app.add_subcommand("patterns", "valuation patterns mod ell");
  SpecFlags sf_pat;
  sf_pat.attach(s_pat);
  long pat_p = 2;
  s_pat->add_option("--p", pat_p, "prime below k")->required();

  // reflect
  auto* s_refl = app.add_subcommand("reflect", "mirror i -> k+1-i");
  SpecFlags sf_refl;
  sf_refl.attach(s_refl);
  std::string rxs, rys;
  s_refl->add_option("--x", rxs)->required();
  s_refl->add_option("--y", rys);

  // curve
  auto* s_curve = app.add_subcommand("curve", "elliptic curve helpers");
  s_curve->require_subcommand(1);
  auto* c_build = s_curve->add_subcommand("build", "print the integral model");
  CurveFlags cf_build;
  cf_build.attach(c_build);
  auto* c_tor = s_curve->add_subcommand("torsion", "list the torsion points");
  CurveFlags cf_tor;
  cf_tor.attach(c_tor);
  auto* c_map = s_curve->add_subcommand("map", "map a quartic point to the curve");
  CurveFlags cf_map;
  cf_map.attach(c_map);
  std::string m_N, m_d = "1", m_y;
  c_map->add_option("--N", m_N)->required();
  c_map->add_option("--d", m_d);
  c_map->add_option("--Y", m_y, "quartic y value")->required();
  auto* c_fam = s_curve->add_subcommand("family", "solutions from a seed point");
  CurveFlags cf_fam;
  cf_fam.attach(c_fam);
  SpecFlags sf_fam;
  sf_fam.attach(c_fam);
  std::string seed;
  int count = 2;
  c_fam->add_option("--seed", seed, "seed point X,Y")->required();
  c_fam->add_option("--count", count, "multiples of the seed to walk");

  try {
    app.parse(argc, argv);

    if (*s_search)
      return cmd_search(sf_search, nmax, dmax, trivial, jobs, format);
    if (*s_verify) return cmd_verify(sf_verify, xs, ys, format);
    if (*s_dec) return cmd_decompose(sf_dec, dxs, dys, format);
    if (*s_lambda) return cmd_lambda(l_ell, l_q, format);
    if (*s_kb)
      return cmd_kb_match(kb_ell, kb_sig, kb_a, kb_b, kb_c, kb_conds, kb_file,
                          format);
    if (*s_replay) {
      if (!all_tables && (table < 1 || table > 14))
        throw CLI::ValidationError("--table must be 1..14 (or use --all)");
      return cmd_replay(table, all_tables, format);
    }
    if (*s_pat) return cmd_patterns(sf_pat, pat_p, format);
    if (*s_refl) return cmd_reflect(sf_refl, rxs, rys, format);
    if (*s_curve) {
      if (*c_build) {
        std::cout << curve_str(cf_build.curve()) << "\n";
        return 0;
      }
      if (*c_tor) {
        for (const auto& P : torsion_points(cf_tor.curve()))
          std::cout << point_str(P) << "\n";
        return 0;
      }
      if (*c_map) {
        auto model = cf_map.quartic_model();
        if (!model) throw CLI::ValidationError("map needs --quartic");
        CurvePoint P = map_quartic_point(*model, parse_rational(m_N),
                                         parse_rational(m_d),
                                         parse_rational(m_y));
        std::cout << point_str(P) << "\n";
        return 0;
      }
      if (*c_fam) {
        auto model = cf_fam.quartic_model();
        if (!model) throw CLI::ValidationError("family needs --quartic");
        auto comma = seed.find(',');
        if (comma == std::string::npos)
          throw CLI::ValidationError("--seed needs X,Y");
        CurvePoint P = CurvePoint::make(parse_rational(seed.substr(0, comma)),
                                        parse_rational(seed.substr(comma + 1)));
        auto fam = generate_family(*model, sf_fam.spec(), P, count);
        for (const auto& [x, y] : fam)
          std::cout << x.get_str() << "\t+-" << y.get_str() << "\n";
        return 0;
      }
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
