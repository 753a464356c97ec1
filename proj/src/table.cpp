#include "mopo/table.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mopo/errors.hpp"

namespace mopo {

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_table(const Table& table, const std::filesystem::path& file) {
    if (table.columns.empty())
        throw ConfigError("table has no columns");
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw ConfigError("table row width does not match column count");

    std::ofstream out(file, std::ios::binary);  // binary: no newline surprises
    if (!out)
        throw Error("cannot open " + file.string() + " for writing");
    for (const auto& [key, value] : table.metadata)
        out << "# " << key << " = " << value << "\n";
    out << "# columns =";
    for (const auto& name : table.columns)
        out << "\t" << name;
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "\t" : "") << format_full(row[i]);
        out << "\n";
    }
    if (!out)
        throw Error("write failed for " + file.string());
}

Table read_table(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw ParseError("cannot open table file " + file.string());

    Table table;
    std::string line;
    int lineno = 0;
    bool saw_columns = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            const auto eq = body.find('=');
            if (eq == std::string::npos)
                throw ParseError(file.string() + ":" + std::to_string(lineno) +
                                 ": header line without '='");
            auto strip = [](std::string s) {
                const auto a = s.find_first_not_of(" \t");
                if (a == std::string::npos) return std::string();
                const auto b = s.find_last_not_of(" \t");
                return s.substr(a, b - a + 1);
            };
            const std::string key = strip(body.substr(0, eq));
            const std::string value = body.substr(eq + 1);
            if (key == "columns") {
                std::istringstream cs(value);
                std::string name;
                while (std::getline(cs >> std::ws, name, '\t'))
                    if (!name.empty()) table.columns.push_back(name);
                if (table.columns.empty())
                    throw ParseError(file.string() + ":" +
                                     std::to_string(lineno) + ": empty column list");
                saw_columns = true;
            } else {
                table.metadata.emplace_back(key, strip(value));
            }
            continue;
        }
        if (!saw_columns)
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": numeric row before the column header");
        std::vector<double> row;
        row.reserve(table.columns.size());
        std::istringstream rs(line);
        std::string cell;
        while (std::getline(rs, cell, '\t')) {
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0')
                throw ParseError(file.string() + ":" + std::to_string(lineno) +
                                 ": bad numeric cell '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != table.columns.size())
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": expected " + std::to_string(table.columns.size()) +
                             " cells, got " + std::to_string(row.size()));
        table.rows.push_back(std::move(row));
    }
    if (!saw_columns)
        throw ParseError(file.string() + ": no column header found");
    return table;
}

} // namespace mopo
