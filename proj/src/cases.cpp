#include "lacuna/cases.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "lacuna/ternary.hpp"

namespace lacuna {

namespace {

std::vector<int> live_indices(int k, int i) {
  std::vector<int> out;
  for (int j = 1; j <= k; ++j)
    if (j != i) out.push_back(j);
  return out;
}

}  // namespace

unsigned pattern_window(int k, unsigned ell, const Int& p) {
  unsigned nu = 0;
  Int pe = p;
  while (pe <= k) {
    pe *= p;
    ++nu;
  }
  return nu + ell + 1;
}

std::vector<ValuationPattern> enumerate_patterns(int k, unsigned ell, int i,
                                                 const Int& p, unsigned ell0) {
  ProblemSpec{k, ell, i}.validate();
  if (!is_prime(p) || p >= k)
    throw ArithError("enumerate_patterns: need p prime, p < k");
  if (ell0 != 1 && ell0 != ell)
    throw ArithError("enumerate_patterns: ell0 must be 1 or ell");

  const unsigned M = pattern_window(k, ell, p);
  // The window values fit comfortably in machine words (at most 7^9).
  const int64_t pl = p.get_si();
  int64_t pM = 1;
  for (unsigned e = 0; e < M; ++e) pM *= pl;
  const auto live = live_indices(k, i);

  std::map<std::map<int, unsigned>, std::pair<Int, Int>> found;

  for (int64_t c = 0; c < pM; ++c) {
    std::array<unsigned, 9> flat{};
    int dominant = 0;
    unsigned long sum = 0;
    for (int j : live) {
      int64_t rem = (c + j) % pM;
      if (rem == 0) {
        dominant = j;  // at most one index can hit the window
      } else {
        unsigned long e = 0;
        while (rem % pl == 0) {
          rem /= pl;
          ++e;
        }
        flat[j] = static_cast<unsigned>(e % ell);
        sum += e;
      }
    }
    if (dominant == 0 && sum % ell != 0) continue;
    std::map<int, unsigned> exps;
    for (int j : live) exps[j] = flat[j];
    Int n, d = 1;
    if (dominant != 0) {
      unsigned e_dom = static_cast<unsigned>((ell - sum % ell) % ell);
      exps[dominant] = e_dom;
      // Minimal witness: n + dominant = p^v with the smallest admissible v.
      // Every other live term then has its exact spacing valuation, which is
      // what the window residues already recorded.
      unsigned nu_lcm = M - ell - 1;
      unsigned long v = nu_lcm + 1;
      while (v % ell != e_dom) ++v;
      n = pow_int(p, v) - dominant;
    } else {
      n = c;
    }
    if (!found.count(exps)) found.emplace(exps, std::make_pair(n, d));
  }

  // p | d makes every live term a p-unit: the all-zero pattern, which the
  // c-loop (p coprime to d) cannot always reach.
  {
    std::map<int, unsigned> zero;
    for (int j : live) zero[j] = 0;
    if (!found.count(zero)) found.emplace(zero, std::make_pair(Int(1), p));
  }

  std::vector<ValuationPattern> out;
  for (const auto& [exps, wit] : found)
    out.push_back({p, exps, wit.first, wit.second});
  return out;
}

namespace {

Int assignment_value(const std::map<int, Int>& a, int j) {
  auto it = a.find(j);
  if (it == a.end())
    throw ArithError("assignment missing a_" + std::to_string(j));
  return it->second;
}

// Normalized window product b for the progression lemmas: the ell-free part
// of the product of the window's a_j.  Inapplicable when a prime dividing
// the step also divides a window coefficient (the lemma needs gcd(m,s)=1,
// and p | t with p dividing no window a forces p away from every term).
std::optional<Int> prog_b(const std::map<int, Int>& a,
                          const std::vector<int>& window, int step,
                          unsigned ell) {
  if (step > 1) {
    for (const auto& [pr, e] : factor(step).factors)
      for (int j : window)
        if (assignment_value(a, j) % pr == 0) return std::nullopt;
  }
  Int prod = 1;
  for (int j : window) prod *= assignment_value(a, j);
  return ell_free_part(prod, ell).first;
}

std::optional<ExclusionCertificate> close_with_kb(const TernaryEquation& eq,
                                                  unsigned ell, const KB& kb,
                                                  const std::string& rule) {
  // A reachable exceptional branch keeps the case open no matter what else
  // matches; the engine reports it instead of closing.
  auto ms = kb.match(eq, ell);
  for (const auto& m : ms)
    if (m.conclusion == Conclusion::Exceptional) return std::nullopt;
  for (const auto& m : ms)
    if (m.conclusion == Conclusion::NoNontrivial)
      return ExclusionCertificate{rule, eq.provenance, eq.str(), m.entry->id};
  return std::nullopt;
}

std::optional<ExclusionCertificate> close_prog(const std::map<int, Int>& a,
                                               const std::vector<int>& window,
                                               int step,
                                               const std::vector<int>& offsets,
                                               unsigned ell, const KB& kb,
                                               const std::string& rule) {
  auto b = prog_b(a, window, step, ell);
  if (!b) return std::nullopt;
  auto ms = kb.match_prog(offsets, *b, ell);
  for (const auto& m : ms)
    if (m.conclusion == Conclusion::Exceptional) return std::nullopt;
  for (const auto& m : ms) {
    if (m.conclusion != Conclusion::NoNontrivial) continue;
    std::string prov = "prod(";
    for (size_t s = 0; s < window.size(); ++s)
      prov += (s ? "," : "") + std::to_string(window[s]);
    prov += ")";
    return ExclusionCertificate{rule, prov, prov + " = " + b->get_str() + " y^" +
                                          std::to_string(ell),
                                m.entry->id};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExclusionCertificate> apply_exclusion_rules(
    const std::map<int, Int>& assignment, int k, unsigned ell, int i,
    const KB& kb) {
  ProblemSpec spec{k, ell, i};
  spec.validate();
  const unsigned ell0 = ell0_for(spec);
  const auto live = live_indices(k, i);
  auto in_live = [&](int j) {
    return j >= 1 && j <= k && j != i;
  };
  auto A = [&](int j) { return assignment_value(assignment, j); };

  // Lemma-style pair rules need the d^ell denominator shape.
  if (ell0 == ell) {
    // (i) P(a_j a_{j+2^s}) <= 2
    for (int j : live)
      for (int t = 1; j + t <= k; t *= 2)
        if (in_live(j + t) && greatest_prime_factor(A(j) * A(j + t)) <= 2)
          if (auto c = close_with_kb(
                  form_two_term(A(j), A(j + t), j, j + t, ell, ell0), ell, kb,
                  "L4.1(i)"))
            return c;
    // (ii) P(a_j a_{j+3^s}) <= 3, odd
    for (int j : live)
      for (int t = 1; j + t <= k; t *= 3)
        if (in_live(j + t)) {
          Int prod = A(j) * A(j + t);
          if (prod % 2 != 0 && greatest_prime_factor(prod) <= 3)
            if (auto c = close_with_kb(
                    form_two_term(A(j), A(j + t), j, j + t, ell, ell0), ell,
                    kb, "L4.1(ii)"))
              return c;
        }
    // (iii) P(a_j a_{j+3t}) = 3 with nu_3 = 1 on both, t in {1,2}
    for (int j : live)
      for (int t : {3, 6})
        if (in_live(j + t)) {
          Int prod = A(j) * A(j + t);
          if (greatest_prime_factor(prod) == 3 && valuation(A(j), 3) == 1 &&
              valuation(A(j + t), 3) == 1)
            if (auto c = close_with_kb(
                    form_two_term(A(j), A(j + t), j, j + t, ell, ell0), ell,
                    kb, "L4.1(iii)"))
              return c;
        }
    // (iv) P(a_j a_{j+t} a_{j+2t}) <= 3, t = 2^s
    for (int j : live)
      for (int t = 1; j + 2 * t <= k; t *= 2)
        if (in_live(j + t) && in_live(j + 2 * t) &&
            greatest_prime_factor(A(j) * A(j + t) * A(j + 2 * t)) <= 3) {
          const int idx[3] = {j, j + t, j + 2 * t};
          for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v)
              if ((A(idx[u]) * A(idx[v])) % 3 != 0)
                if (auto c = close_with_kb(
                        form_two_term(A(idx[u]), A(idx[v]), idx[u], idx[v],
                                      ell, ell0),
                        ell, kb, "L4.1(iv)"))
                  return c;
        }
    // (v) P(a_j a_{j+t} a_{j+2t}) = 3, t = 3*2^s
    for (int j : live)
      for (int t = 3; j + 2 * t <= k; t *= 2)
        if (in_live(j + t) && in_live(j + 2 * t) &&
            greatest_prime_factor(A(j) * A(j + t) * A(j + 2 * t)) == 3) {
          const int idx[3] = {j, j + t, j + 2 * t};
          for (int u = 0; u < 3; ++u)
            for (int v = u + 1; v < 3; ++v)
              if (valuation(A(idx[u]), 3) == 1 && valuation(A(idx[v]), 3) == 1)
                if (auto c = close_with_kb(
                        form_two_term(A(idx[u]), A(idx[v]), idx[u], idx[v],
                                      ell, ell0),
                        ell, kb, "L4.1(v)"))
                  return c;
        }
  }

  // All two-term formers.
  if (ell0 == ell)
    for (size_t u = 0; u < live.size(); ++u)
      for (size_t v = u + 1; v < live.size(); ++v)
        if (auto c = close_with_kb(
                form_two_term(A(live[u]), A(live[v]), live[u], live[v], ell,
                              ell0),
                ell, kb, "former"))
          return c;

  // All three-term formers.
  for (size_t u = 0; u < live.size(); ++u)
    for (size_t v = u + 1; v < live.size(); ++v)
      for (size_t w = v + 1; w < live.size(); ++w)
        if (auto c = close_with_kb(
                form_three_term(A(live[u]), A(live[v]), A(live[w]), live[u],
                                live[v], live[w], ell),
                ell, kb, "former"))
          return c;

  // Four-term formers over p + q = r + t.
  for (int p : live)
    for (int q : live)
      for (int r : live)
        for (int t : live) {
          if (p >= q || r >= t || p >= r) continue;
          if (p + q != r + t) continue;
          if (auto c = close_with_kb(
                  form_four_term(A(p), A(q), A(r), A(t), p, q, r, t, ell, ell0,
                                 Signature::LL2),
                  ell, kb, "former"))
            return c;
          if (ell0 == ell)
            if (auto c = close_with_kb(
                    form_four_term(A(p), A(q), A(r), A(t), p, q, r, t, ell,
                                   ell0, Signature::LLL),
                    ell, kb, "former"))
              return c;
        }

  // Short progression windows.
  for (int len : {5, 4, 3})
    for (int step = 1; step * (len - 1) < k; ++step)
      for (int j0 = 1; j0 + step * (len - 1) <= k; ++j0) {
        std::vector<int> window;
        for (int s = 0; s < len; ++s) window.push_back(j0 + s * step);
        if (!std::all_of(window.begin(), window.end(), in_live)) continue;
        std::vector<int> offsets;
        for (int s = 1; s <= len; ++s) offsets.push_back(s);
        if (auto c = close_prog(assignment, window, step, offsets, ell, kb,
                                "prog"))
          return c;
      }
  // the 1,2,4,5 gap pattern
  for (int step = 1; step * 4 < k; ++step)
    for (int j0 = 1; j0 + step * 4 <= k; ++j0) {
      std::vector<int> window = {j0, j0 + step, j0 + 3 * step, j0 + 4 * step};
      if (!std::all_of(window.begin(), window.end(), in_live)) continue;
      if (auto c =
              close_prog(assignment, window, step, {1, 2, 4, 5}, ell, kb, "prog"))
        return c;
    }

  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Case table files

namespace {

Int parse_value(const std::string& tok, int lineno) {
  // integer, or product of prime powers like 2^3*3^5*7^6, with optional sign
  std::string s = tok;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Int out = 1;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '*')) {
    auto caret = part.find('^');
    try {
      if (caret == std::string::npos) {
        out *= Int(part);
      } else {
        out *= pow_int(Int(part.substr(0, caret)),
                       std::stoul(part.substr(caret + 1)));
      }
    } catch (const std::exception&) {
      throw ArithError("line " + std::to_string(lineno) + ": bad value " + tok);
    }
  }
  return neg ? Int(-out) : out;
}

std::string take_field(std::string& line, const std::string& key, int lineno,
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
    if (end == std::string::npos)
      throw ArithError("line " + std::to_string(lineno) +
                       ": unterminated string");
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

std::vector<int> parse_index_list(const std::string& s, int lineno) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<int>(parse_value(tok, lineno).get_si()));
  return out;
}

CaseRow parse_row(std::string line, int lineno) {
  if (line.rfind("row ", 0) != 0)
    throw ArithError("line " + std::to_string(lineno) +
                     ": record must start with 'row'");
  line.erase(0, 4);
  line = " " + line;

  CaseRow row;
  row.lineno = lineno;
  row.cite = take_field(line, "cite", lineno, false);
  std::string k = take_field(line, "k", lineno, true);
  std::string ell = take_field(line, "ell", lineno, true);
  std::string i = take_field(line, "i", lineno, true);
  std::string a = take_field(line, "a", lineno, true);
  std::string action = take_field(line, "action", lineno, true);
  std::string expect = take_field(line, "expect", lineno, false);
  std::string cond = take_field(line, "cond", lineno, false);
  std::string flags = take_field(line, "flags", lineno, false);

  std::stringstream rest(line);
  std::string id, extra;
  rest >> id;
  row.id = static_cast<int>(parse_value(id, lineno).get_si());
  if (rest >> extra)
    throw ArithError("line " + std::to_string(lineno) + ": unknown key " +
                     extra);

  row.spec.k = std::stoi(k);
  row.spec.ell = std::stoul(ell);
  row.spec.i = std::stoi(i);
  row.spec.validate_search_scope();

  if (a.size() < 2 || a.front() != '{' || a.back() != '}')
    throw ArithError("line " + std::to_string(lineno) + ": bad a={...}");
  std::stringstream as(a.substr(1, a.size() - 2));
  std::string pair;
  while (std::getline(as, pair, ',')) {
    auto colon = pair.find(':');
    if (colon == std::string::npos)
      throw ArithError("line " + std::to_string(lineno) + ": bad a entry " +
                       pair);
    int j = std::stoi(pair.substr(0, colon));
    row.a[j] = parse_value(pair.substr(colon + 1), lineno);
  }

  auto args_of = [&](const std::string& act, char open, char close) {
    auto o = act.find(open);
    auto c = act.rfind(close);
    if (o == std::string::npos || c == std::string::npos || c < o)
      throw ArithError("line " + std::to_string(lineno) + ": bad action " +
                       act);
    return act.substr(o + 1, c - o - 1);
  };

  if (action.rfind("form", 0) == 0) {
    row.action = CaseRow::Action::Form;
    if (action.rfind("form2[", 0) == 0) row.form_sig = Signature::LL2;
    if (action.rfind("formlll[", 0) == 0) row.form_sig = Signature::LLL;
    row.indices = parse_index_list(args_of(action, '[', ']'), lineno);
    if (row.indices.size() < 2 || row.indices.size() > 4)
      throw ArithError("line " + std::to_string(lineno) +
                       ": former needs 2..4 indices");
  } else if (action.rfind("cong(", 0) == 0) {
    row.action = CaseRow::Action::Cong;
    auto args = parse_index_list(args_of(action, '(', ')'), lineno);
    if (args.size() != 4)
      throw ArithError("line " + std::to_string(lineno) +
                       ": cong needs (j1,j2,q,jq)");
    row.pairs = {{args[0], args[1]}};
    row.q = args[2];
    row.jq = args[3];
  } else if (action.rfind("sieve(", 0) == 0) {
    row.action = CaseRow::Action::Sieve;
    std::string body = args_of(action, '(', ')');
    auto colon = body.find(':');
    if (colon == std::string::npos)
      throw ArithError("line " + std::to_string(lineno) +
                       ": sieve needs q:pairs");
    row.q = parse_value(body.substr(0, colon), lineno);
    std::stringstream ps(body.substr(colon + 1));
    std::string p;
    while (std::getline(ps, p, ';')) {
      auto idx = parse_index_list(p, lineno);
      if (idx.size() != 2)
        throw ArithError("line " + std::to_string(lineno) + ": bad sieve pair");
      row.pairs.emplace_back(idx[0], idx[1]);
    }
  } else if (action.rfind("l21(", 0) == 0) {
    row.action = CaseRow::Action::L21;
    auto args = args_of(action, '(', ')');
    std::stringstream ss(args);
    std::string tok;
    std::vector<std::string> toks;
    while (std::getline(ss, tok, ',')) toks.push_back(tok);
    if (toks.size() != 3)
      throw ArithError("line " + std::to_string(lineno) +
                       ": l21 needs (j,jl,eps)");
    row.l21_j = std::stoi(toks[0]);
    row.l21_jl = std::stoi(toks[1]);
    row.l21_eps = parse_value(toks[2], lineno);
  } else if (action == "res91") {
    row.action = CaseRow::Action::Res91;
  } else if (action.rfind("res94(", 0) == 0) {
    row.action = CaseRow::Action::Res94;
    row.jq = parse_value(args_of(action, '(', ')'), lineno).get_si();
  } else {
    throw ArithError("line " + std::to_string(lineno) + ": unknown action " +
                     action);
  }

  if (!expect.empty()) {
    row.has_expect = true;
    if (expect == "pass") {
      row.expect.kind = RowExpect::Kind::Pass;
    } else if (expect.rfind("eq:", 0) == 0) {
      auto vals = expect.substr(3);
      std::stringstream ss(vals);
      std::string tok;
      std::vector<Int> cs;
      while (std::getline(ss, tok, ',')) cs.push_back(parse_value(tok, lineno));
      if (cs.size() != 3)
        throw ArithError("line " + std::to_string(lineno) +
                         ": expect=eq needs three coefficients");
      row.expect.kind = RowExpect::Kind::Equation;
      row.expect.eq = {cs[0], cs[1], cs[2]};
    } else if (expect.rfind("ab:", 0) == 0) {
      row.expect.kind = RowExpect::Kind::Ab;
      row.expect.value = parse_value(expect.substr(3), lineno);
    } else if (expect.rfind("c:", 0) == 0) {
      row.expect.kind = RowExpect::Kind::Constant;
      row.expect.value = parse_value(expect.substr(2), lineno);
    } else if (expect.rfind("jq:", 0) == 0) {
      row.expect.kind = RowExpect::Kind::Jq;
      row.expect.value = parse_value(expect.substr(3), lineno);
    } else {
      throw ArithError("line " + std::to_string(lineno) + ": bad expect " +
                       expect);
    }
  }

  if (!cond.empty() && cond != "none") {
    std::stringstream ss(cond);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      auto bar = tok.find('|');
      if (bar == std::string::npos || tok[bar + 1] != 'x')
        throw ArithError("line " + std::to_string(lineno) +
                         ": cond needs d|x<j>");
      row.extra_conds.emplace_back(parse_value(tok.substr(0, bar), lineno),
                                   std::stoi(tok.substr(bar + 2)));
    }
  }

  if (!flags.empty()) {
    if (flags != "unverified")
      throw ArithError("line " + std::to_string(lineno) + ": unknown flag " +
                       flags);
    row.unverified = true;
  }
  return row;
}

// Does this slot's label mention x<j> as a whole factor?
bool slot_mentions(const Slot& slot, int j) {
  const std::string needle = "x" + std::to_string(j);
  size_t pos = 0;
  while ((pos = slot.label.find(needle, pos)) != std::string::npos) {
    size_t end = pos + needle.size();
    if (end == slot.label.size() || slot.label[end] == 'x') return true;
    pos = end;
  }
  return false;
}

TernaryEquation build_former(const CaseRow& row) {
  const unsigned ell = row.spec.ell;
  const unsigned ell0 = ell0_for(row.spec);
  auto A = [&](int j) { return assignment_value(row.a, j); };
  TernaryEquation eq;
  const auto& ix = row.indices;
  if (ix.size() == 2) {
    eq = form_two_term(A(ix[0]), A(ix[1]), ix[0], ix[1], ell, ell0);
  } else if (ix.size() == 3) {
    eq = form_three_term(A(ix[0]), A(ix[1]), A(ix[2]), ix[0], ix[1], ix[2], ell);
  } else {
    Signature sig = row.form_sig.value_or(ell0 == ell ? Signature::LLL
                                                      : Signature::LL2);
    eq = form_four_term(A(ix[0]), A(ix[1]), A(ix[2]), A(ix[3]), ix[0], ix[1],
                        ix[2], ix[3], ell, ell0, sig);
  }
  for (const auto& [div, j] : row.extra_conds) {
    bool attached = false;
    for (int s = 0; s < 3 && !attached; ++s)
      if (slot_mentions(eq.slots[s], j)) {
        for (const auto& [p, e] : factor(div).factors)
          eq.side_conditions.push_back({p, s});
        attached = true;
      }
    if (!attached)
      throw ArithError("cond references x" + std::to_string(j) +
                       " which is not an unknown of " + eq.provenance);
  }
  return eq;
}

RowResult replay_form(const CaseRow& row, const KB& kb) {
  RowResult res;
  TernaryEquation eq = build_former(row);
  if (row.has_expect) {
    switch (row.expect.kind) {
      case RowExpect::Kind::Equation:
        if (eq.coeff != row.expect.eq) {
          res.detail = "reduced to " + eq.str() + ", table prints different coefficients";
          return res;
        }
        break;
      case RowExpect::Kind::Ab:
        if (eq.sig != Signature::LLL || eq.coeff[0] != 1 ||
            eq.coeff[1] * eq.coeff[2] != row.expect.value) {
          res.detail = "reduced to " + eq.str() + ", ab mismatch";
          return res;
        }
        break;
      case RowExpect::Kind::Constant: {
        // pre-reduction right-hand constant of the four-term identity
        const auto& ix = row.indices;
        Int c = Int(ix[0]) * ix[1] - Int(ix[2]) * ix[3];
        if (c != row.expect.value) {
          res.detail = "constant " + c.get_str() + " != expected";
          return res;
        }
        break;
      }
      case RowExpect::Kind::Pass:
        break;
    }
  }
  auto matches = kb.match(eq, row.spec.ell);
  bool exceptional = false;
  for (const auto& m : matches)
    if (m.conclusion == Conclusion::Exceptional) exceptional = true;
  if (!exceptional)
    for (const auto& m : matches)
      if (m.conclusion == Conclusion::NoNontrivial) {
        res.pass = true;
        res.certificate =
            eq.provenance + " -> " + eq.str() + " -> " + m.entry->id;
        return res;
      }
  res.detail = matches.empty()
                   ? eq.provenance + " -> " + eq.str() + ": no KB match"
                   : eq.provenance + " -> " + eq.str() + ": exceptional branch reachable";
  return res;
}

RowResult replay_cong(const CaseRow& row) {
  RowResult res;
  auto [j1, j2] = row.pairs.at(0);
  Verdict v;
  if (row.jq < 0)
    v = passes_qd_v(assignment_value(row.a, j1), assignment_value(row.a, j2),
                    row.spec.ell, row.q);
  else
    v = passes_chi_v(assignment_value(row.a, j1), j1,
                     assignment_value(row.a, j2), j2, row.jq, row.spec.ell,
                     row.q);
  if (v == Verdict::Fail) {
    res.pass = true;
    res.certificate = "(" + std::to_string(j1) + "," + std::to_string(j2) +
                      ") mod " + row.q.get_str() +
                      (row.jq < 0 ? ", q|d" : ", jq=" + std::to_string(row.jq)) +
                      ": no lambda works";
  } else {
    res.detail = v == Verdict::Pass ? "a lambda satisfies the congruence"
                                    : "filter not applicable";
  }
  return res;
}

RowResult replay_sieve(const CaseRow& row) {
  RowResult res;
  const bool narrowing = row.has_expect && row.expect.kind == RowExpect::Kind::Jq;
  std::vector<std::string> surviving;
  // q | d branch
  bool killed = false;
  for (const auto& [j1, j2] : row.pairs)
    if (passes_qd_v(assignment_value(row.a, j1), assignment_value(row.a, j2),
                    row.spec.ell, row.q) == Verdict::Fail) {
      killed = true;
      break;
    }
  if (!killed) surviving.push_back("q|d");
  // every residue branch
  for (long jq = 0; jq < row.q; ++jq) {
    killed = false;
    for (const auto& [j1, j2] : row.pairs)
      if (passes_chi_v(assignment_value(row.a, j1), j1,
                       assignment_value(row.a, j2), j2, jq, row.spec.ell,
                       row.q) == Verdict::Fail) {
        killed = true;
        break;
      }
    if (!killed) surviving.push_back(std::to_string(jq));
  }
  if (narrowing) {
    if (surviving.size() == 1 && surviving[0] == row.expect.value.get_str()) {
      res.pass = true;
      res.certificate = "mod " + row.q.get_str() +
                        " narrows to the single branch jq=" + surviving[0];
    } else {
      res.detail = "surviving branches differ from the expected narrowing:";
      for (const auto& s : surviving) res.detail += " " + s;
    }
  } else if (surviving.empty()) {
    res.pass = true;
    res.certificate = "all residue branches mod " + row.q.get_str() +
                      " excluded by the listed pairs";
  } else {
    res.detail = "surviving branches:";
    for (const auto& s : surviving) res.detail += " " + s;
  }
  return res;
}

RowResult replay_l21(const CaseRow& row) {
  RowResult res;
  Verdict v = passes_l21_v(assignment_value(row.a, row.l21_j), row.l21_j,
                           row.l21_jl, row.l21_eps, row.spec.ell);
  if (v == Verdict::Fail) {
    res.pass = true;
    res.certificate = "l^3-refined congruence fails at j=" +
                      std::to_string(row.l21_j);
  } else {
    res.detail = v == Verdict::Pass ? "congruence satisfied" : "not applicable";
  }
  return res;
}

RowResult replay_res(const CaseRow& row) {
  RowResult res;
  auto nu = [&](int j, long p) {
    return static_cast<int>(valuation(assignment_value(row.a, j), p));
  };
  bool value = false;
  if (row.action == CaseRow::Action::Res91) {
    int gamma = static_cast<int>(valuation(
                    assignment_value(row.a, 3) * assignment_value(row.a, 6), 5)) -
                1;
    value = residue_condition_9_1(nu(3, 2), nu(4, 2), nu(5, 2), nu(6, 2),
                                  nu(4, 3), nu(5, 3), gamma);
  } else {
    int gamma = static_cast<int>(valuation(
        assignment_value(row.a, 3) * assignment_value(row.a, 6), 5));
    value = residue_condition_9_4(nu(2, 2), nu(3, 2), nu(5, 2), nu(6, 2),
                                  nu(8, 3), gamma, static_cast<int>(row.jq));
  }
  bool expected = row.expect.kind == RowExpect::Kind::Pass;
  if (value == expected) {
    res.pass = true;
    res.certificate = std::string("residue condition evaluates ") +
                      (value ? "satisfiable, as printed" : "unsatisfiable");
  } else {
    res.detail = "residue condition disagrees with the printed row";
  }
  return res;
}

}  // namespace

std::vector<CaseRow> load_case_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArithError("cannot open case file " + path);
  std::vector<CaseRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments outside quotes
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
    rows.push_back(parse_row(line.substr(start), lineno));
  }
  return rows;
}

TableReport replay_table(const std::string& table_id,
                         const std::vector<CaseRow>& rows, const KB& kb) {
  TableReport report;
  report.table_id = table_id;
  std::map<int, bool> row_ok;
  std::set<int> row_unverified;

  for (const auto& row : rows) {
    RowResult res;
    if (row.unverified) {
      res.unverified = true;
      res.detail = "flagged unverified; excluded from pass counts";
    } else {
      switch (row.action) {
        case CaseRow::Action::Form:
          res = replay_form(row, kb);
          break;
        case CaseRow::Action::Cong:
          res = replay_cong(row);
          break;
        case CaseRow::Action::Sieve:
          res = replay_sieve(row);
          break;
        case CaseRow::Action::L21:
          res = replay_l21(row);
          break;
        case CaseRow::Action::Res91:
        case CaseRow::Action::Res94:
          res = replay_res(row);
          break;
      }
    }
    res.id = row.id;
    res.lineno = row.lineno;
    res.unverified = row.unverified;
    report.lines.push_back(res);

    if (row.unverified) {
      row_unverified.insert(row.id);
    } else {
      auto it = row_ok.find(row.id);
      row_ok[row.id] = (it == row_ok.end() ? true : it->second) && res.pass;
    }
  }

  for (const auto& [id, ok] : row_ok) {
    ++report.rows_total;
    if (ok) ++report.rows_passed;
  }
  for (int id : row_unverified)
    if (!row_ok.count(id)) ++report.rows_unverified;
  return report;
}

std::string data_dir() {
  if (const char* env = std::getenv("LACUNA_DATA")) return env;
#ifdef LACUNA_DEFAULT_DATA_DIR
  return LACUNA_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

std::string table_file(int table_number) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "table%02d.cases", table_number);
  return data_dir() + "/" + buf;
}

}  // namespace lacuna
