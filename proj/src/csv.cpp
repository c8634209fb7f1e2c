#include "trics/csv.hpp"

#include <cstdio>

namespace trics::csv {

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Writer::comment(const std::string& text) { out_ << "# " << text << "\n"; }

void Writer::header(std::span<const std::string> columns) {
    for (size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
}

void Writer::row(std::span<const double> values) {
    for (size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format(values[i]);
    out_ << "\n";
}

}  // namespace trics::csv
