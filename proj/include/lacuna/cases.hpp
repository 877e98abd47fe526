#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lacuna/decompose.hpp"
#include "lacuna/kb.hpp"
#include "lacuna/sieve.hpp"

namespace lacuna {

// Residue classes mod ell of nu_p(n + j d^{ell0}) over the k-1 live indices,
// together with an (n, d) witness realizing them.
struct ValuationPattern {
  Int p;
  std::map<int, unsigned> exps;  // j -> e_j in [0, ell)
  Int witness_n;
  Int witness_d;

  bool operator==(const ValuationPattern& o) const { return exps == o.exps; }
};

// Complete, duplicate-free list of patterns realizable with p not dividing d
// and gcd(n, d) = 1, and with the exponent sum = 0 (mod ell) forced by the
// product being an ell-th power.
std::vector<ValuationPattern> enumerate_patterns(int k, unsigned ell, int i,
                                                 const Int& p, unsigned ell0);

// Window exponent for the enumeration: nu_p(lcm(1..k)) + ell + 1.
unsigned pattern_window(int k, unsigned ell, const Int& p);

struct ExclusionCertificate {
  std::string rule;       // which rule produced the equation
  std::string provenance; // former tag or progression window
  std::string equation;
  std::string kb_entry;
};

// Try the pair/triple exclusion rules, then every former over the index
// subsets, then the short-progression products, matching each reduced
// equation against the KB.  First closing certificate wins; exceptional
// branches never close.
std::optional<ExclusionCertificate> apply_exclusion_rules(
    const std::map<int, Int>& assignment, int k, unsigned ell, int i,
    const KB& kb);

struct RowExpect {
  enum class Kind { Equation, Ab, Constant, Pass, Jq } kind = Kind::Pass;
  std::array<Int, 3> eq{};
  Int value;
};

struct CaseRow {
  int id = 0;  // paper row number; expansion lines share it
  ProblemSpec spec;
  std::map<int, Int> a;
  enum class Action { Form, Cong, Sieve, L21, Res91, Res94 } action =
      Action::Form;
  std::vector<int> indices;           // former indices
  std::optional<Signature> form_sig;  // force the 4-term signature
  Int q;                              // cong/sieve modulus
  long jq = 0;                        // -1 encodes the q | d branch
  std::vector<std::pair<int, int>> pairs;  // sieve pairs
  int l21_j = 0, l21_jl = 0;
  Int l21_eps;
  std::vector<std::pair<Int, int>> extra_conds;  // divisor | x_j
  RowExpect expect;
  bool has_expect = false;
  bool unverified = false;
  std::string cite;
  int lineno = 0;
};

struct RowResult {
  int id = 0;
  int lineno = 0;
  bool unverified = false;
  bool pass = false;
  std::string certificate;
  std::string detail;
};

struct TableReport {
  std::string table_id;
  std::vector<RowResult> lines;
  int rows_total = 0;  // distinct verified row ids
  int rows_passed = 0;
  int rows_unverified = 0;

  bool all_passed() const { return rows_passed == rows_total; }
};

std::vector<CaseRow> load_case_rows(const std::string& path);
TableReport replay_table(const std::string& table_id,
                         const std::vector<CaseRow>& rows, const KB& kb);

// Data directory: LACUNA_DATA env var, else the compiled-in default.
std::string data_dir();
std::string table_file(int table_number);

}  // namespace lacuna
