#include "gtpac/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace gtpac {

std::string csv_format(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    // Shortest representation that round-trips a double.
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double parsed = std::strtod(buf, nullptr);
    for (int prec = 1; prec <= 16; ++prec) {
        char shorter[64];
        std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
        parsed = std::strtod(shorter, nullptr);
        if (parsed == v) {
            std::memcpy(buf, shorter, sizeof(shorter));
            break;
        }
    }
    return buf;
}

std::string csv_format(long long v) { return std::to_string(v); }

void CsvWriter::header(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> current;
    std::string cell;
    for (char ch : text) {
        if (ch == ',') {
            current.push_back(cell);
            cell.clear();
        } else if (ch == '\n') {
            current.push_back(cell);
            cell.clear();
            rows.push_back(current);
            current.clear();
        } else if (ch != '\r') {
            cell.push_back(ch);
        }
    }
    if (!cell.empty() || !current.empty()) {
        current.push_back(cell);
        rows.push_back(current);
    }
    return rows;
}

}  // namespace gtpac
