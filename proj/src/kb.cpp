#include "lacuna/kb.hpp"

#include <fstream>
#include <sstream>

namespace lacuna {

namespace {

bool smooth(const Int& n, long bound) {
  return greatest_prime_factor(abs_int(n)) <= bound;
}

// n = 2^u * p^v for the given p (u, v >= 0)?
bool two_p_smooth(const Int& n, long p, long* u_out = nullptr) {
  Int m = abs_int(n);
  long u = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++u;
  }
  while (m % p == 0) m /= p;
  if (u_out) *u_out = u;
  return m == 1;
}

bool prime_power_of(const Int& n, long p) {
  Int m = abs_int(n);
  while (m % p == 0) m /= p;
  return m == 1;
}

bool pairwise_coprime(const TernaryEquation& eq) {
  return gcd(eq.coeff[0], eq.coeff[1]) == 1 &&
         gcd(eq.coeff[0], eq.coeff[2]) == 1 &&
         gcd(eq.coeff[1], eq.coeff[2]) == 1;
}

bool cond_satisfied(const TernaryEquation& eq, const KBEntry::CondGroup& g) {
  int max_slot = g.power_vars_only && eq.sig == Signature::LL2 ? 1 : 2;
  for (const Int& d : g.divisors)
    for (int s = 0; s <= max_slot; ++s)
      if (eq.has_condition(d, s)) return true;
  return false;
}

void verify_exceptional_ternary(const KBEntry& e,
                                const std::array<Int, 3>& eqc,
                                unsigned ell) {
  for (const auto& w : e.exceptional) {
    Int lhs = eqc[0] * pow_int(w[0], ell) + eqc[1] * pow_int(w[1], ell);
    Int rhs = e.sig == Signature::LL2
                  ? eqc[2] * w[2] * w[2]
                  : Int(-eqc[2] * pow_int(w[2], ell));
    if (lhs != rhs)
      throw KBParseError("entry " + e.id +
                         ": exceptional solution fails substitution");
  }
}

void verify_exceptional_prog(const KBEntry& e, unsigned ell) {
  for (const auto& w : e.exceptional_prog) {
    Int prod = 1;
    for (int o : e.prog_offsets) prod *= w[0] + o * w[1];
    if (prod != w[2] * pow_int(w[3], ell))
      throw KBParseError("entry " + e.id +
                         ": exceptional progression solution fails substitution");
  }
}

KBEntry base(std::string id, Signature sig, EllConstraint ell,
             std::string desc, std::string cite) {
  KBEntry e;
  e.id = std::move(id);
  e.sig = sig;
  e.ell = ell;
  e.coeff_desc = std::move(desc);
  e.cite = std::move(cite);
  return e;
}

EllConstraint exact(unsigned v) {
  return {EllConstraint::Kind::Exact, v, {}};
}
EllConstraint at_least(unsigned v) {
  return {EllConstraint::Kind::AtLeast, v, {}};
}

const std::set<Int> kSelmerSet = {1,  2,  3,  4,   5,   7,   9,   10,
                                  14, 18, 21, 25,  28,  36,  45,  49,
                                  60, 98, 100, 147, 150, 196, 225, 300};

}  // namespace

bool EllConstraint::admits(unsigned ell) const {
  switch (kind) {
    case Kind::Exact:
      return ell == value;
    case Kind::AtLeast:
      return ell >= value;
    case Kind::OneOf:
      for (unsigned v : list)
        if (v == ell) return true;
      return false;
  }
  return false;
}

std::string EllConstraint::str() const {
  switch (kind) {
    case Kind::Exact:
      return std::to_string(value);
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::OneOf: {
      std::string s;
      for (unsigned v : list) s += (s.empty() ? "" : "|") + std::to_string(v);
      return s;
    }
  }
  return "";
}

EllConstraint EllConstraint::parse(const std::string& s) {
  EllConstraint c;
  if (s.rfind(">=", 0) == 0) {
    c.kind = Kind::AtLeast;
    c.value = std::stoul(s.substr(2));
  } else if (s.find('|') != std::string::npos) {
    c.kind = Kind::OneOf;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '|')) c.list.push_back(std::stoul(tok));
  } else {
    c.kind = Kind::Exact;
    c.value = std::stoul(s);
  }
  return c;
}

std::vector<KBMatch> KB::match(const TernaryEquation& eq, unsigned ell) const {
  std::vector<KBMatch> out;
  if (eq.ell != ell) return out;
  // Match against the whole scaling-equivalence class: multiplying through
  // by a prime and absorbing complete powers preserves the solution set.
  for (const auto& var : scaling_variants(eq)) {
    for (const auto& e : entries) {
      if (e.is_prog || e.sig != var.sig) continue;
      if (!e.ell.admits(ell)) continue;
      if (!e.coeff_pred || !e.coeff_pred(var)) continue;
      bool ok = true;
      for (const auto& g : e.conds)
        if (!cond_satisfied(var, g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      bool dup = false;
      for (const auto& m : out)
        if (m.entry == &e) dup = true;
      if (!dup) out.push_back({&e, e.conclusion});
    }
  }
  return out;
}

std::vector<KBMatch> KB::match_prog(const std::vector<int>& offsets,
                                    const Int& b, unsigned ell) const {
  std::vector<KBMatch> out;
  for (const auto& e : entries) {
    if (!e.is_prog || e.prog_offsets != offsets) continue;
    if (!e.ell.admits(ell)) continue;
    if (!e.prog_pred || !e.prog_pred(b, ell)) continue;
    out.push_back({&e, e.conclusion});
  }
  return out;
}

const KBEntry* KB::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

KB default_kb() {
  KB kb;

  {
    auto e = base("Selmer-2.1", Signature::LLL, exact(3),
                  "x^3 + a y^3 + b z^3 = 0, gcd(a,b)=1, ab in Selmer set",
                  "Selmer 1951, Tables 2b and 4a");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && gcd(q.coeff[1], q.coeff[2]) == 1 &&
             kSelmerSet.count(q.coeff[1] * q.coeff[2]) > 0;
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("Kraus-2.2", Signature::LLL, exact(5),
                  "x^5 + y^5 = c z^5, P(c) <= 5, c != 2",
                  "Kraus; see Bennett-Bruin-Gyory-Hajdu, Prop. 6.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && q.coeff[1] == 1 && q.coeff[2] != 2 &&
             smooth(q.coeff[2], 5);
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("Kraus-2.2-exc", Signature::LLL, exact(5),
                  "x^5 + y^5 = 2 z^5: only x = y = z = +-1",
                  "Kraus; see Bennett-Bruin-Gyory-Hajdu, Prop. 6.1");
    e.conclusion = Conclusion::Exceptional;
    e.exceptional = {{1, 1, -1}, {-1, -1, 1}};
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && q.coeff[1] == 1 && q.coeff[2] == 2;
    };
    verify_exceptional_ternary(e, {1, 1, 2}, 5);
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("Classical-2.3", Signature::LLL, at_least(3),
                  "x^l + y^l = p^a z^l, p in {2,3}",
                  "Wiles; Darmon-Merel; Ribet; Serre");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && q.coeff[1] == 1 &&
             (prime_power_of(q.coeff[2], 2) || prime_power_of(q.coeff[2], 3));
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("SaSh-2.4", Signature::LLL, at_least(5),
                  "a x^l + b y^l = c z^l, abc in {2^u 3^v, 2^u 5^v}, u >= 4",
                  "Saradha-Shorey, Lemma 13");
    e.coeff_pred = [](const TernaryEquation& q) {
      if (!pairwise_coprime(q)) return false;
      Int abc = q.coeff[0] * q.coeff[1] * q.coeff[2];
      long u = 0;
      if (two_p_smooth(abc, 3, &u) && u >= 4) return true;
      if (two_p_smooth(abc, 5, &u) && u >= 4) return true;
      return false;
    };
    kb.entries.push_back(std::move(e));
  }

  // Perfect powers in short progression products: P_{k,l} bounds.
  for (int kk : {3, 4, 5}) {
    KBEntry e;
    e.id = "Bennett-2.5-k" + std::to_string(kk);
    e.is_prog = true;
    for (int o = 1; o <= kk; ++o) e.prog_offsets.push_back(o);
    e.ell = at_least(2);
    e.coeff_desc = "(m+s)...(m+" + std::to_string(kk) + "s) = b y^l, P(b) bounded";
    e.cite = "Bennett; Bennett-Bruin-Gyory-Hajdu";
    e.prog_pred = [kk](const Int& b, unsigned ell) {
      long bound = 0;
      if (kk == 3) bound = ell >= 3 ? 2 : 0;
      if (kk == 4) bound = ell == 2 ? 2 : (ell == 3 ? 3 : 2);
      if (kk == 5) bound = ell == 2 ? 5 : 3;
      return bound > 0 && smooth(b, bound);
    };
    kb.entries.push_back(std::move(e));
  }
  {
    KBEntry e;
    e.id = "GHP-2.6";
    e.is_prog = true;
    e.prog_offsets = {1, 2, 4, 5};
    e.ell = at_least(7);
    e.coeff_desc = "(m+s)(m+2s)(m+4s)(m+5s) = b y^l, P(b) <= 3, b != 4";
    e.cite = "Bennett; Gyory-Hajdu-Pinter, Prop. 2.3";
    e.prog_pred = [](const Int& b, unsigned) { return b != 4 && smooth(b, 3); };
    kb.entries.push_back(std::move(e));
  }
  {
    KBEntry e;
    e.id = "GHP-2.6-exc";
    e.is_prog = true;
    e.prog_offsets = {1, 2, 4, 5};
    e.ell = at_least(7);
    e.conclusion = Conclusion::Exceptional;
    e.exceptional_prog = {{3, -1, 4, 1}, {-3, 1, 4, 1}};
    e.coeff_desc = "(m+s)(m+2s)(m+4s)(m+5s) = 4 y^l: only (m,s) = (+-3, -+1)";
    e.cite = "Bennett; Gyory-Hajdu-Pinter, Prop. 2.3";
    e.prog_pred = [](const Int& b, unsigned) { return b == 4; };
    verify_exceptional_prog(e, 7);
    kb.entries.push_back(std::move(e));
  }

  {
    auto e = base("BBGH-2.7-i", Signature::LL2, at_least(7),
                  "x^l + 2^a y^l = 3^b z^2, a != 1",
                  "Bennett-Bruin-Gyory-Hajdu, Prop. 3.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && prime_power_of(q.coeff[1], 2) &&
             q.coeff[1] != 2 && prime_power_of(q.coeff[2], 3);
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BBGH-2.7-ii", Signature::LL2, at_least(7),
                  "x^l + 2^a y^l = 3 z^2, p | xy for p in {5,7}",
                  "Bennett-Bruin-Gyory-Hajdu, Prop. 3.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && prime_power_of(q.coeff[1], 2) &&
             q.coeff[2] == 3;
    };
    e.conds = {{{5, 7}, true}};
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BBGH-2.7-iii", Signature::LL2, at_least(7),
                  "x^l + y^l = c z^2, c in {1,2,3,5,6,10}",
                  "Bennett-Bruin-Gyory-Hajdu, Prop. 3.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      static const std::set<Int> cs = {1, 2, 3, 5, 6, 10};
      return q.coeff[0] == 1 && q.coeff[1] == 1 && cs.count(q.coeff[2]) > 0;
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BBGH-2.7-iv", Signature::LL2, at_least(7),
                  "a x^l + b y^l = z^2, P(ab) <= 3, p | xy for p in {5,7}",
                  "Bennett-Bruin-Gyory-Hajdu, Prop. 3.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[2] == 1 && smooth(q.coeff[0] * q.coeff[1], 3);
    };
    e.conds = {{{5, 7}, true}};
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BBGH-2.7-v", Signature::LL2, at_least(11),
                  "a x^l + b y^l = z^2, P(ab) <= 5, 7 | xy",
                  "Bennett-Bruin-Gyory-Hajdu, Prop. 3.1");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[2] == 1 && smooth(q.coeff[0] * q.coeff[1], 5);
    };
    e.conds = {{{7}, true}};
    kb.entries.push_back(std::move(e));
  }

  {
    auto e = base("BS-2.8-i", Signature::LL2, exact(7),
                  "a x^7 + b y^7 = z^2, ab = 2^a 3^b with a >= 6",
                  "modular method, Bennett-Skinner recipe; levels 1,2,3,6");
    e.coeff_pred = [](const TernaryEquation& q) {
      if (q.coeff[2] != 1) return false;
      Int ab = q.coeff[0] * q.coeff[1];
      long u = 0;
      return two_p_smooth(ab, 3, &u) && u >= 6;
    };
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BS-2.8-ii", Signature::LL2, exact(7),
                  "a x^7 + b y^7 = z^2, ab = 2^a 3^b 7^d, not (a=1 & b,d >= 1), "
                  "5 | xy",
                  "modular method; newform levels 14..1344, c_5 trace test");
    e.coeff_pred = [](const TernaryEquation& q) {
      if (q.coeff[2] != 1) return false;
      Int ab = abs_int(q.coeff[0] * q.coeff[1]);
      long a = 0, b = 0, d = 0;
      while (ab % 2 == 0) { ab /= 2; ++a; }
      while (ab % 3 == 0) { ab /= 3; ++b; }
      while (ab % 7 == 0) { ab /= 7; ++d; }
      if (ab != 1) return false;
      return !(a == 1 && b >= 1 && d >= 1);
    };
    e.conds = {{{5}, true}};
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("BS-2.8-iii", Signature::LL2, exact(7),
                  "x^7 + 3^b y^7 = 2 z^2, 5 | xy",
                  "modular method; newform levels 256, 768, c_5 trace test");
    e.coeff_pred = [](const TernaryEquation& q) {
      return q.coeff[0] == 1 && prime_power_of(q.coeff[1], 3) &&
             q.coeff[2] == 2;
    };
    e.conds = {{{5}, true}};
    kb.entries.push_back(std::move(e));
  }
  {
    auto e = base("HK-2.9", Signature::LLL, exact(7),
                  "A x^7 + B y^7 = C z^7, ABC = 2^a 3^b 5^g 7^d, a >= 4, "
                  "bgd > 0, 7 does not divide bgd, 29 and 43 | xyz",
                  "modular method, Halberstadt-Kraus recipe; levels 105, 210");
    e.coeff_pred = [](const TernaryEquation& q) {
      if (!pairwise_coprime(q)) return false;
      Int abc = abs_int(q.coeff[0] * q.coeff[1] * q.coeff[2]);
      long a = 0, b = 0, g = 0, d = 0;
      while (abc % 2 == 0) { abc /= 2; ++a; }
      while (abc % 3 == 0) { abc /= 3; ++b; }
      while (abc % 5 == 0) { abc /= 5; ++g; }
      while (abc % 7 == 0) { abc /= 7; ++d; }
      if (abc != 1) return false;
      return a >= 4 && b > 0 && g > 0 && d > 0 && (b * g * d) % 7 != 0;
    };
    e.conds = {{{29}, false}, {{43}, false}};
    kb.entries.push_back(std::move(e));
  }

  return kb;
}

namespace {

std::string take_field(std::string& line, const std::string& key, int lineno,
                       bool required) {
  auto pos = line.find(key + "=");
  if (pos == std::string::npos) {
    if (required)
      throw KBParseError("line " + std::to_string(lineno) + ": missing field " +
                         key);
    return "";
  }
  auto start = pos + key.size() + 1;
  std::string val;
  if (line[start] == '"') {
    auto end = line.find('"', start + 1);
    if (end == std::string::npos)
      throw KBParseError("line " + std::to_string(lineno) +
                         ": unterminated string in field " + key);
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

std::vector<Int> parse_int_list(const std::string& s, int lineno) {
  std::vector<Int> out;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    if (tok.empty())
      throw KBParseError("line " + std::to_string(lineno) + ": empty number");
    out.emplace_back(tok);
  }
  return out;
}

void parse_conds(KBEntry& e, const std::string& spec, int lineno) {
  if (spec == "none" || spec.empty()) return;
  std::stringstream ss(spec);
  std::string group;
  while (std::getline(ss, group, ';')) {
    auto bar = group.find('|');
    if (bar == std::string::npos)
      throw KBParseError("line " + std::to_string(lineno) +
                         ": cond group needs d|vars");
    KBEntry::CondGroup g;
    for (const Int& d : parse_int_list(group.substr(0, bar), lineno))
      g.divisors.push_back(d);
    std::string vars = group.substr(bar + 1);
    if (vars == "xy")
      g.power_vars_only = true;
    else if (vars == "xyz")
      g.power_vars_only = false;
    else
      throw KBParseError("line " + std::to_string(lineno) +
                         ": cond vars must be xy or xyz");
    e.conds.push_back(std::move(g));
  }
}

KBEntry parse_entry(std::string line, int lineno) {
  if (line.rfind("entry ", 0) != 0)
    throw KBParseError("line " + std::to_string(lineno) +
                       ": record must start with 'entry'");
  line.erase(0, 6);

  std::string cite = take_field(line, "cite", lineno, true);
  std::string sig = take_field(line, "sig", lineno, true);
  std::string ell = take_field(line, "ell", lineno, true);
  std::string coeff = take_field(line, "coeff", lineno, true);
  std::string cond = take_field(line, "cond", lineno, true);
  std::string conclude = take_field(line, "conclude", lineno, true);
  std::string eqrep = take_field(line, "eq", lineno, false);

  std::stringstream rest(line);
  std::string id, extra;
  rest >> id;
  if (id.empty())
    throw KBParseError("line " + std::to_string(lineno) + ": missing id");
  if (rest >> extra)
    throw KBParseError("line " + std::to_string(lineno) + ": unknown key " +
                       extra);

  KBEntry e;
  e.id = id;
  e.cite = cite;
  e.ell = EllConstraint::parse(ell);
  if (sig == "lll") {
    e.sig = Signature::LLL;
  } else if (sig == "ll2") {
    e.sig = Signature::LL2;
  } else if (sig.rfind("prog:", 0) == 0) {
    e.is_prog = true;
    for (const Int& o : parse_int_list(sig.substr(5), lineno))
      e.prog_offsets.push_back(static_cast<int>(o.get_si()));
  } else {
    throw KBParseError("line " + std::to_string(lineno) + ": bad sig " + sig);
  }

  e.coeff_desc = coeff;
  if (coeff.rfind("set:[", 0) == 0 && coeff.back() == ']') {
    auto vals = parse_int_list(coeff.substr(5, coeff.size() - 6), lineno);
    std::set<Int> s(vals.begin(), vals.end());
    if (e.is_prog) {
      e.prog_pred = [s](const Int& b, unsigned) { return s.count(b) > 0; };
    } else if (e.sig == Signature::LLL) {
      // x^l + a y^l + b z^l with ab in the set.
      e.coeff_pred = [s](const TernaryEquation& q) {
        return q.coeff[0] == 1 && gcd(q.coeff[1], q.coeff[2]) == 1 &&
               s.count(q.coeff[1] * q.coeff[2]) > 0;
      };
    } else {
      e.coeff_pred = [s](const TernaryEquation& q) {
        return q.coeff[0] == 1 && q.coeff[1] == 1 && s.count(q.coeff[2]) > 0;
      };
    }
  } else if (coeff.rfind("radical:", 0) == 0) {
    std::string body = coeff.substr(8);
    long v2 = -1;
    auto comma = body.find(",v2>=");
    if (comma != std::string::npos) {
      v2 = std::stol(body.substr(comma + 5));
      body = body.substr(0, comma);
    }
    long bound = std::stol(body);
    if (e.is_prog) {
      e.prog_pred = [bound](const Int& b, unsigned) { return smooth(b, bound); };
    } else if (e.sig == Signature::LLL) {
      e.coeff_pred = [bound, v2](const TernaryEquation& q) {
        Int abc = q.coeff[0] * q.coeff[1] * q.coeff[2];
        if (!smooth(abc, bound)) return false;
        return v2 < 0 || static_cast<long>(valuation(abc, 2)) >= v2;
      };
    } else {
      e.coeff_pred = [bound, v2](const TernaryEquation& q) {
        if (q.coeff[2] != 1) return false;
        Int ab = q.coeff[0] * q.coeff[1];
        if (!smooth(ab, bound)) return false;
        return v2 < 0 || static_cast<long>(valuation(ab, 2)) >= v2;
      };
    }
  } else {
    throw KBParseError("line " + std::to_string(lineno) +
                       ": bad coeff predicate " + coeff);
  }

  parse_conds(e, cond, lineno);

  if (conclude == "none") {
    e.conclusion = Conclusion::NoNontrivial;
  } else if (conclude.rfind("except:[", 0) == 0 && conclude.back() == ']') {
    e.conclusion = Conclusion::Exceptional;
    std::string body = conclude.substr(8, conclude.size() - 9);
    // (x,y,z)(x,y,z)... or (m,s,b,y) for prog entries
    size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] != '(')
        throw KBParseError("line " + std::to_string(lineno) +
                           ": bad exceptional list");
      auto close = body.find(')', pos);
      auto vals = parse_int_list(body.substr(pos + 1, close - pos - 1), lineno);
      if (e.is_prog) {
        if (vals.size() != 4)
          throw KBParseError("line " + std::to_string(lineno) +
                             ": prog exceptional needs (m,s,b,y)");
        e.exceptional_prog.push_back({vals[0], vals[1], vals[2], vals[3]});
      } else {
        if (vals.size() != 3)
          throw KBParseError("line " + std::to_string(lineno) +
                             ": exceptional needs (x,y,z)");
        e.exceptional.push_back({vals[0], vals[1], vals[2]});
      }
      pos = close + 1;
      if (pos < body.size() && body[pos] == ',') ++pos;
    }
  } else {
    throw KBParseError("line " + std::to_string(lineno) + ": bad conclude " +
                       conclude);
  }

  // Exceptional witnesses must check out by substitution.
  if (e.conclusion == Conclusion::Exceptional) {
    unsigned ell_probe = e.ell.kind == EllConstraint::Kind::OneOf
                             ? e.ell.list.front()
                             : e.ell.value;
    if (e.is_prog) {
      verify_exceptional_prog(e, ell_probe);
    } else {
      if (eqrep.empty())
        throw KBParseError("line " + std::to_string(lineno) +
                           ": exceptional ternary entry needs eq=a,b,c");
      auto vals = parse_int_list(eqrep, lineno);
      if (vals.size() != 3)
        throw KBParseError("line " + std::to_string(lineno) + ": bad eq field");
      verify_exceptional_ternary(e, {vals[0], vals[1], vals[2]}, ell_probe);
    }
  }
  return e;
}

}  // namespace

KB load_kb(const std::optional<std::string>& path) {
  KB kb = default_kb();
  if (!path) return kb;
  std::ifstream in(*path);
  if (!in) throw KBParseError("cannot open KB file " + *path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    kb.entries.push_back(parse_entry(line.substr(start), lineno));
  }
  return kb;
}

}  // namespace lacuna
