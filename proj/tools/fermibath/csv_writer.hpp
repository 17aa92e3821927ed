// csv_writer.hpp — Deterministic CSV output with metadata lines

#pragma once

#include <fstream>
#include <iostream>
#include <span>
#include <string>
#include <vector>

namespace fermibath::cli {

// 17 significant digits, C locale, round-trip safe.
std::string format_number(double value);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path); // empty path writes to stdout

    void metadata(const std::string& line);      // "# " prefix
    void header(std::span<const std::string> names);
    void row(std::span<const double> values);

private:
    std::ofstream file_;
    std::ostream* out_;
};

} // namespace fermibath::cli
