#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lacuna/ternary.hpp"

namespace lacuna {

class KBParseError : public std::runtime_error {
 public:
  explicit KBParseError(const std::string& w) : std::runtime_error(w) {}
};

enum class Conclusion {
  NoNontrivial,  // no solutions beyond units / zero coordinates
  Exceptional,   // solvable only by the listed witnesses
};

struct EllConstraint {
  enum class Kind { Exact, AtLeast, OneOf } kind = Kind::AtLeast;
  unsigned value = 2;
  std::vector<unsigned> list;

  bool admits(unsigned ell) const;
  std::string str() const;
  static EllConstraint parse(const std::string& s);
};

// A resolved Fermat-type equation family.  Ternary entries match reduced
// TernaryEquations; progression entries match windows
// prod(m + o*s for o in offsets) = b * y^ell.
struct KBEntry {
  std::string id;
  bool is_prog = false;
  Signature sig = Signature::LLL;
  std::vector<int> prog_offsets;
  EllConstraint ell;

  // Required divisibility side conditions; every group must be witnessed by
  // one of its divisors on an admissible unknown.
  struct CondGroup {
    std::vector<Int> divisors;
    bool power_vars_only = true;  // slots 0,1 only (the ell-power unknowns)
  };
  std::vector<CondGroup> conds;

  Conclusion conclusion = Conclusion::NoNontrivial;
  std::vector<std::array<Int, 3>> exceptional;       // ternary (x, y, z)
  std::vector<std::array<Int, 4>> exceptional_prog;  // (m, s, b, y)

  std::string coeff_desc;
  std::function<bool(const TernaryEquation&)> coeff_pred;
  std::function<bool(const Int& b, unsigned ell)> prog_pred;
  std::string cite;
};

struct KBMatch {
  const KBEntry* entry;
  Conclusion conclusion;
};

struct KB {
  std::vector<KBEntry> entries;

  // Every returned entry's predicates hold for eq; empty means "not
  // resolved here", never "has solutions".
  std::vector<KBMatch> match(const TernaryEquation& eq, unsigned ell) const;

  // offsets must be normalized (gcd of gaps divided out, first offset 1).
  std::vector<KBMatch> match_prog(const std::vector<int>& offsets,
                                  const Int& b, unsigned ell) const;

  const KBEntry* find(const std::string& id) const;
};

// The built-in entries (Selmer's cubic table, Kraus' quintic, the classical
// (l,l,l) results, the smooth-coefficient and signature-(l,l,2) families,
// and both progression-product lemmas).
KB default_kb();

// Built-in KB, extended by the records of `path` when given.
// Line format, '#' comments allowed:
//   entry <id> sig=<lll|ll2|prog:o1,o2,...> ell=<n|>=n|n1|n2> \
//     coeff=<set:[n,...]|radical:B[,v2>=u]> cond=<none|d1[,d2]|xy;...> \
//     conclude=<none|except:[(x,y,z),...]> [eq=a,b,c] cite="<string>"
KB load_kb(const std::optional<std::string>& path);

}  // namespace lacuna
