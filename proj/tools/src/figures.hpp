#pragma once

// Data series for the thirteen figures: photon-number distributions, mean
// photon numbers and Mandel parameters (1-7), Husimi phase distributions of
// hypergeometric signals (8-10) and hypergeometric phase distributions of a
// coherent signal (11-13). Each sweep value is its own series, and the
// coherent-state reference is always included.

#include "output.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace ghcs::cli {

inline constexpr int kFigureCount = 13;

struct FigureOptions {
    std::string values;              // sweep override: "0.2,1,5" or "2:4,3:3,4:2"
    std::optional<double> r;         // |alpha| (or |epsilon|) for fixed-point figures
    double phi = 0.0;
    double r_max = 6.0;              // upper end of the |alpha| sweep in figures 2, 3, 5, 6
    std::size_t r_count = 61;        // samples of that sweep, starting at 0
    std::size_t theta_count = 721;
    double theta_start = -3.141592653589793;
    double tol = 1e-12;
    std::size_t cap = 4096;
};

// Throws std::out_of_range for an id outside 1..kFigureCount.
Document figure(int id, const FigureOptions& opts);

// One-line description of a figure, used in the output header.
std::string figure_title(int id);

}  // namespace ghcs::cli
