#include "output.hpp"

#include <charconv>
#include <cmath>

namespace rgd::cli {

std::string formatReal(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

namespace {

std::string csvField(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return formatReal(*d);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

nlohmann::json jsonField(const Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    return std::get<std::string>(c);
}

}  // namespace

void writeTable(std::ostream& os, const Table& t, Format f, const std::string& command, const nlohmann::json& meta) {
    if (f == Format::Csv) {
        for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csvField(row[j]);
            os << '\n';
        }
        return;
    }
    nlohmann::json doc = meta;
    doc["command"] = command;
    doc["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::object();
        for (std::size_t j = 0; j < row.size() && j < t.columns.size(); ++j) r[t.columns[j]] = jsonField(row[j]);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

}  // namespace rgd::cli
