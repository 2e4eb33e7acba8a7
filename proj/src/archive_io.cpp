#include "mopls/archive_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mopls {

namespace {
std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}
}  // namespace

void write_archive_dump(std::ostream& out, std::vector<ObjectiveVector> points) {
  std::size_t d = points.empty() ? 0 : points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("archive dump: mixed dimensions");
  std::sort(points.begin(), points.end());
  out << "# d=" << d << " n=" << points.size() << "\n";
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ' ';
      out << format_value(p[k]);
    }
    out << "\n";
  }
}

void write_archive_dump_file(const std::string& path, std::vector<ObjectiveVector> points) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_archive_dump(out, std::move(points));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<ObjectiveVector> read_archive_dump(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("archive dump: missing header");
  std::size_t d = 0, n = 0;
  if (std::sscanf(header.c_str(), "# d=%zu n=%zu", &d, &n) != 2)
    throw std::runtime_error("archive dump: bad header: " + header);
  std::vector<ObjectiveVector> points;
  points.reserve(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    ObjectiveVector p;
    p.reserve(d);
    double v;
    while (row >> v) p.push_back(v);
    if (p.size() != d) throw std::runtime_error("archive dump: row with wrong dimension");
    points.push_back(std::move(p));
  }
  if (points.size() != n) throw std::runtime_error("archive dump: row count mismatch");
  return points;
}

std::vector<ObjectiveVector> read_archive_dump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_archive_dump(in);
}

}  // namespace mopls
