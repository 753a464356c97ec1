#ifndef MOPO_TABLE_HPP
#define MOPO_TABLE_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace mopo {

// Plain-text data table:
//   '#'-prefixed header lines carrying "key = value" metadata in insertion
//   order, a final "# columns = <tab-joined names>" line, then one
//   tab-delimited numeric row per line.
// Numbers are printed with 17 significant digits, enough for an exact
// double round trip, so identical inputs give byte-identical files and
// re-parsing reproduces the in-memory values bitwise. "inf"/"-inf" are
// legal cell values.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row has columns.size() cells
};

// Shortest-exact formatting used for every numeric cell (%.17g).
std::string format_full(double x);

void write_table(const Table& table, const std::filesystem::path& file);

// Inverse of write_table. Throws ParseError on malformed input.
Table read_table(const std::filesystem::path& file);

} // namespace mopo

#endif
