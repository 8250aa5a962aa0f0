#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature with global bisection, plus the two
// variable maps used for moment integrals: the half line [0, inf) and the unit
// interval with power-graded endpoints for integrable algebraic singularities.

#include <cstddef>
#include <functional>

namespace ghcs::quad {

struct Options {
    double abs_tol = 0.0;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error = 0.0;  // sum of |K15 - G7| over the final partition
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
    bool converged = false;
};

Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

// Integral of f over [0, inf) through x = (s / (1 - s))^power. power > 1 grades
// the nodes towards x = 0, which tames x^alpha singularities with alpha > -1.
Result integrate_half_line(const std::function<double(double)>& f, const Options& opts = {},
                           unsigned power = 1);

// Integral over [0, 1] of f(x, 1 - x), through x = s^m / (s^m + (1 - s)^m).
// The complement is passed separately so that (1 - x)^beta keeps full relative
// precision near x = 1.
Result integrate_unit(const std::function<double(double, double)>& f, const Options& opts = {},
                      unsigned power = 1);

// Exponent m for the maps above that brings an endpoint behaviour x^alpha
// (alpha > -1) to at least linear vanishing of the mapped integrand.
unsigned grading_power(double alpha);

}  // namespace ghcs::quad
