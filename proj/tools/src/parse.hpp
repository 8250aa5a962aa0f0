#pragma once

// Text forms accepted on the command line: reals, complex numbers written as
// re+imi (e.g. 1+2i, 0.5-1e-3i, -i) and comma-separated lists of either.

#include "ghcs/specfun.hpp"

#include <string>
#include <vector>

namespace ghcs::cli {

// Throws std::invalid_argument on malformed input.
cplx parse_complex(const std::string& text);
double parse_real(const std::string& text);
std::vector<cplx> parse_complex_list(const std::string& text);
std::vector<double> parse_real_list(const std::string& text);

// "a:b" pairs separated by commas, e.g. "2:4,3:3,4:2".
std::vector<std::pair<double, double>> parse_pair_list(const std::string& text);

// Shortest round-trip decimal form of a double.
std::string format_real(double v);
std::string format_complex(cplx v);

}  // namespace ghcs::cli
