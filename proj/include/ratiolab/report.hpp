#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace ratiolab {

// One table cell; integers stay integral in JSON and CSV.
using Cell = std::variant<std::uint64_t, double, std::string>;

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    // Row width must match the header.
    void add_row(std::vector<Cell> row);
};

// Doubles at 12 significant digits, '.' decimal point regardless of locale.
std::string format_cell(const Cell& cell);

// RFC-4180-style: header row, comma separated, fields quoted only when they
// contain a comma, quote or newline.
void write_csv(std::ostream& os, const ReportTable& table);

// {"columns": [...], "rows": [{column: value, ...}, ...]} with native JSON
// number types, so the same data round-trips keyed identically to the CSV.
nlohmann::ordered_json table_json(const ReportTable& table);

}  // namespace ratiolab
