#pragma once

// Closed-form weight functions w(x) of the resolution of unity for the five
// example families, their reduced form w~(x) = w(x) / N(x), quadrature checks
// of the moment identity int_0^R x^n w~(x) dx = rho(n), and positivity scans.

#include "ghcs/families.hpp"
#include "ghcs/parameters.hpp"
#include "ghcs/quadrature.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ghcs {

// Upper end R of the support: infinity on the plane, 1 on the disk.
double support_radius(Family family) noexcept;

// Throws ParameterError for a shape mismatch or a violated precondition
// (F01: b > 0, F10: a > 1, F21: a1 + a2 - b > 1).
void check_weight_preconditions(Family family, const ParameterSet& params);

// w(x) for 0 <= x < R.
double weight(Family family, const ParameterSet& params, double x);

// w~(x) = w(x) / N(x) for 0 <= x < R. Evaluated from the reduced closed forms
// (e.g. 2 x^((b-1)/2) K_{b-1}(2 sqrt x) / Gamma(b) for F01), never as a quotient.
double reduced_weight(Family family, const ParameterSet& params, double x);

// Weight for any parameter set whose coalescence-reduced shape is one of the families.
double weight_for(const ParameterSet& params, double x);
double reduced_weight_for(const ParameterSet& params, double x);
Family weight_family(const ParameterSet& params);  // family of params.reduced(); throws ParameterError

struct MomentRecord {
    std::size_t n = 0;
    double quadrature = 0.0;
    double rho = 0.0;
    double rel_error = 0.0;
    double quad_error = 0.0;  // error estimate reported by the integrator
};

struct MomentReport {
    Family family = Family::CS;
    ParameterSet params;
    std::vector<MomentRecord> records;
    double max_rel_error = 0.0;
    bool converged = true;
};

MomentReport moment_check(Family family, const ParameterSet& params, std::size_t n_max,
                          const quad::Options& opts = {});

// int_0^R x^n w~(x) dx by adaptive quadrature with endpoint grading.
quad::Result weighted_moment(Family family, const ParameterSet& params, double n, const quad::Options& opts = {});

// int_0^R g(x) w~(x) dx with the same endpoint grading. g should be smooth on
// [0, R]; points where w~ underflows contribute nothing.
quad::Result integrate_against_weight(Family family, const ParameterSet& params,
                                      const std::function<double(double)>& g, const quad::Options& opts = {});

struct PositivityReport {
    double min_value = 0.0;
    double argmin = 0.0;
    std::size_t samples = 0;
    bool negative = false;
};

// w(x) on a grid that is logarithmically dense towards the ends of (0, R).
PositivityReport positivity_scan(Family family, const ParameterSet& params, std::size_t grid_size = 400);

struct CircleWeightOutcome {
    bool resolves_unity = false;
    double reduced_weight = 0.0;  // 1 / (2 pi) for the phase states
    std::string reason;
};

// Circle states admit no weight: a resolution of unity over the circle would force
// w~ to be constant, which cannot match a non-constant rho(n). The single exception
// is rho(n) = 1, i.e. (1;0) with a = 1 after coalescence, with w~ = 1 / (2 pi).
CircleWeightOutcome circle_weight_attempt(const ParameterSet& params);

}  // namespace ghcs
