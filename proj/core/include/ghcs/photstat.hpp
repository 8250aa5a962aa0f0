#pragma once

// Photon-number distribution P(n) = x^n / (rho(n) N(x)), factorial moments,
// mean photon number and Mandel parameter, plus the closed forms of the five
// example families as an independent check of the generic path.

#include "ghcs/families.hpp"
#include "ghcs/states.hpp"

#include <string>
#include <vector>

namespace ghcs {

struct DistributionSeries {
    std::string label;
    std::vector<double> grid;    // n (as double) or theta
    std::vector<double> values;
    double normalization_residual = 0.0;  // |sum (or integral) - 1|
};

struct PhotonStats {
    DistributionSeries pn;
    double mean = 0.0;
    double mandel_q = 0.0;
    double x = 0.0;  // |z|^2
};

struct PnOptions {
    double cumulative_tol = 1e-12;  // stop once sum P(n) >= 1 - cumulative_tol ...
    double relative_floor = 1e-16;  // ... and P(n) < relative_floor * max P
    std::size_t cap = 4096;
};

DistributionSeries pn_distribution(const StateSpec& spec, const PnOptions& opts = {});

// n^(k) = x^k prod (a)_k / prod (b)_k pFq(a+k; b+k; x) / pFq(a; b; x).
double factorial_moment(const ParameterSet& params, double x, unsigned k, double tol = 1e-15);

struct MeanMandel {
    double mean = 0.0;
    double mandel_q = 0.0;  // 0 at x = 0 by continuity
};

MeanMandel mean_and_mandel(const ParameterSet& params, double x, double tol = 1e-15);

// Generic path: distribution, mean and Mandel parameter of the state.
PhotonStats photon_stats(const StateSpec& spec, const PnOptions& opts = {});

// Closed forms in terms of Bessel-I, Kummer-M and Gauss-2F1 ratios.
PhotonStats closed_form_stats(Family family, const ParameterSet& params, double x,
                              const PnOptions& opts = {});

}  // namespace ghcs
