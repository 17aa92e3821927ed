#include "csv_writer.hpp"

#include <cstdio>
#include <stdexcept>

namespace fermibath::cli {

std::string format_number(double value)
{
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

CsvWriter::CsvWriter(const std::string& path)
{
    if (path.empty()) {
        out_ = &std::cout;
    } else {
        file_.open(path, std::ios::binary | std::ios::trunc);
        if (!file_) {
            throw std::runtime_error("cannot open output file: " + path);
        }
        out_ = &file_;
    }
}

void CsvWriter::metadata(const std::string& line)
{
    *out_ << "# " << line << "\n";
}

void CsvWriter::header(std::span<const std::string> names)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        *out_ << (i ? "," : "") << names[i];
    }
    *out_ << "\n";
}

void CsvWriter::row(std::span<const double> values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        *out_ << (i ? "," : "") << format_number(values[i]);
    }
    *out_ << "\n";
}

} // namespace fermibath::cli
