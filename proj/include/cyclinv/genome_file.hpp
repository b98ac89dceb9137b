#pragma once

// Genome list files: one record per line, "NAME<TAB>p1,p2,...,pn".
// '#' comments and blank lines are ignored.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cyclinv/circular.hpp"

namespace cyclinv {

using GenomeList = std::vector<std::pair<std::string, CircularArrangement>>;

// Throws std::invalid_argument on duplicate/empty names, mixed n, bad windows.
GenomeList read_genome_file(std::istream& in);
GenomeList read_genome_file_path(const std::string& path);

} // namespace cyclinv
