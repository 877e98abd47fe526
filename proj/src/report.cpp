#include "lacuna/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lacuna {

using nlohmann::json;

std::string format_rational(const Rat& r) {
  return r.get_str();
}

std::string format_residues(const std::vector<Int>& residues, const Int& q) {
  std::vector<Int> sorted = residues;
  std::sort(sorted.begin(), sorted.end());
  bool symmetric = true;
  for (const Int& r : sorted)
    if (!std::binary_search(sorted.begin(), sorted.end(), (q - r) % q)) {
      symmetric = false;
      break;
    }
  std::ostringstream os;
  if (symmetric) {
    bool first = true;
    for (const Int& r : sorted) {
      if (r > q / 2) continue;
      os << (first ? "" : " ") << "+-" << r.get_str();
      first = false;
    }
  } else {
    for (size_t s = 0; s < sorted.size(); ++s)
      os << (s ? " " : "") << sorted[s].get_str();
  }
  return os.str();
}

namespace {

const char* class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::Trivial:
      return "trivial";
    case SolutionClass::Listed:
      return "listed";
    case SolutionClass::New:
      return "new";
  }
  return "?";
}

}  // namespace

std::string render_solutions(const std::vector<SolutionRecord>& records,
                             OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : records) {
      arr.push_back({{"k", r.spec.k},
                     {"i", r.spec.i},
                     {"ell", r.spec.ell},
                     {"n", r.n.get_str()},
                     {"d", r.d.get_str()},
                     {"m", r.m.get_str()},
                     {"t", r.t.get_str()},
                     {"x", format_rational(r.x)},
                     {"y", format_rational(r.y)},
                     {"class", class_name(r.classification)}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "x\ty\tn\td\tclass\n";
  for (const auto& r : records) {
    std::string y = format_rational(r.y);
    if (r.spec.ell % 2 == 0 && r.y != 0) y = "+-" + y;
    os << format_rational(r.x) << "\t" << y << "\t" << r.n.get_str() << "\t"
       << r.d.get_str() << "\t" << class_name(r.classification) << "\n";
  }
  return os.str();
}

std::string render_table_report(const TableReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json lines = json::array();
    for (const auto& l : report.lines)
      lines.push_back({{"row", l.id},
                       {"line", l.lineno},
                       {"verdict", l.unverified ? "unverified"
                                                : (l.pass ? "pass" : "fail")},
                       {"certificate", l.certificate},
                       {"detail", l.detail}});
    json out = {{"table", report.table_id},
                {"rows", report.rows_total},
                {"passed", report.rows_passed},
                {"unverified", report.rows_unverified},
                {"lines", lines}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "table " << report.table_id << "\n";
  for (const auto& l : report.lines) {
    os << "  row " << l.id << " (line " << l.lineno << "): ";
    if (l.unverified)
      os << "unverified";
    else if (l.pass)
      os << "pass  " << l.certificate;
    else
      os << "FAIL  " << l.detail;
    os << "\n";
  }
  os << report.rows_passed << "/" << report.rows_total << " rows pass";
  if (report.rows_unverified)
    os << " (" << report.rows_unverified << " unverified rows skipped)";
  os << "\n";
  return os.str();
}

}  // namespace lacuna
