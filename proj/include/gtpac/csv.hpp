#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtpac {

/// Locale-independent value formatting: '.' decimal point, shortest
/// round-trip representation for doubles, no embedded commas.
std::string csv_format(double v);
std::string csv_format(long long v);

/// Minimal comma-separated writer. All output is UTF-8, rows end with '\n'.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& names);
    void row(const std::vector<std::string>& cells);

private:
    std::ostream& out_;
};

/// Parses a CSV file produced by CsvWriter back into cells (no quoting in
/// this schema, separator is always ',').
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace gtpac
