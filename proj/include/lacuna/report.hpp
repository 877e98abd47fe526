#pragma once

#include <string>
#include <vector>

#include "lacuna/cases.hpp"
#include "lacuna/search.hpp"

namespace lacuna {

enum class OutputFormat { Text, Json };

std::string format_rational(const Rat& r);

// One residue list like "+-1 +-18 +-19" when the set is symmetric,
// else the plain list.
std::string format_residues(const std::vector<Int>& residues, const Int& q);

std::string render_solutions(const std::vector<SolutionRecord>& records,
                             OutputFormat fmt);
std::string render_table_report(const TableReport& report, OutputFormat fmt);

}  // namespace lacuna
