#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace rgd::cli {

enum class Format { Csv, Json };

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest decimal that reads back to the same double; never locale dependent.
std::string formatReal(double v);

// CSV: header line then one line per row.
// JSON: {"command": ..., <meta>, "columns": [...], "rows": [{column: value}]}.
void writeTable(std::ostream& os, const Table& t, Format f, const std::string& command,
                const nlohmann::json& meta = nlohmann::json::object());

}  // namespace rgd::cli
