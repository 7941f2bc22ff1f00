#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gds/errors.hpp"
#include "gds/format.hpp"
#include "gds/graph.hpp"

namespace gds {

inline constexpr std::string_view kEdgeListHeader = "Source,Target,weight";

/// Reads a `Source,Target,weight` edge list. Row numbers in errors are
/// 1-based data rows, so the first line after the header is row 1.
/// Blank lines are skipped but still counted.
inline std::vector<EdgeRow> read_edge_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IngestError(0, "missing header");
  std::string_view header = line;
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  if (header != kEdgeListHeader) {
    throw IngestError(0, "header must be exactly '" + std::string(kEdgeListHeader) + "'");
  }

  std::vector<EdgeRow> rows;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string_view rest = detail::trim(line);
    if (rest.empty()) continue;

    std::string_view fields[3];
    std::size_t count = 0;
    while (true) {
      const auto comma = rest.find(',');
      if (count == 3) {
        throw IngestError(row, "expected 3 fields, found more");
      }
      fields[count++] = detail::trim(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != 3) {
      throw IngestError(row, "expected 3 fields, found " + std::to_string(count));
    }
    if (fields[0].empty() || fields[1].empty()) throw IngestError(row, "empty node name");

    double w = 0.0;
    const auto* first = fields[2].data();
    const auto* last = first + fields[2].size();
    auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc() || ptr != last || fields[2].empty()) {
      throw IngestError(row, "unparsable weight '" + std::string(fields[2]) + "'");
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]), w});
  }
  return rows;
}

inline std::vector<EdgeRow> read_edge_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_edge_csv(in);
}

inline Graph load_edge_csv(const std::filesystem::path& path, IngestStats* stats = nullptr) {
  const auto rows = read_edge_csv(path);
  return from_edge_list(rows, stats);
}

/// Writes every edge once, in (u, v) order, with the canonical header.
inline void write_edge_csv(std::ostream& out, const Graph& g) {
  out << kEdgeListHeader << '\n';
  for (const auto& e : g.edges()) {
    out << g.name(e.u) << ',' << g.name(e.v) << ',' << format_real(e.weight) << '\n';
  }
}

}  // namespace gds
