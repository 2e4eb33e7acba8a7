#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mopls/objective.hpp"

namespace mopls {

// Archive dump format: header "# d=<d> n=<count>" followed by one line per
// entry with d space-separated decimal values in canonical maximization
// orientation. Rows are written in lexicographic order.
void write_archive_dump(std::ostream& out, std::vector<ObjectiveVector> points);
void write_archive_dump_file(const std::string& path, std::vector<ObjectiveVector> points);

std::vector<ObjectiveVector> read_archive_dump(std::istream& in);
std::vector<ObjectiveVector> read_archive_dump_file(const std::string& path);

}  // namespace mopls
