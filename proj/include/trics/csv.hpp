// csv.hpp — deterministic CSV emission: 17 significant digits, LF endings,
// a '#'-prefixed config comment line for provenance.
#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace trics::csv {

std::string format(double v);  // %.17g

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}
    void comment(const std::string& text);
    void header(std::span<const std::string> columns);
    void row(std::span<const double> values);

private:
    std::ostream& out_;
};

}  // namespace trics::csv
