#include "ratiolab/report.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ratiolab {

void ReportTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("report: row width does not match header");
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell& cell) {
    if (const auto* u = std::get_if<std::uint64_t>(&cell)) return std::to_string(*u);
    if (const auto* d = std::get_if<double>(&cell)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", *d);
        return buf;
    }
    return std::get<std::string>(cell);
}

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

void write_csv(std::ostream& os, const ReportTable& table) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        if (j) os << ',';
        os << csv_escape(table.columns[j]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ',';
            os << csv_escape(format_cell(row[j]));
        }
        os << '\n';
    }
}

nlohmann::ordered_json table_json(const ReportTable& table) {
    nlohmann::ordered_json doc;
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const Cell& cell = row[j];
            if (const auto* u = std::get_if<std::uint64_t>(&cell))
                obj[table.columns[j]] = *u;
            else if (const auto* d = std::get_if<double>(&cell))
                obj[table.columns[j]] = *d;
            else
                obj[table.columns[j]] = std::get<std::string>(cell);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

}  // namespace ratiolab
