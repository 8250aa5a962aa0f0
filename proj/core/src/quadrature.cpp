#include "ghcs/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ghcs::quad {
namespace {

// Kronrod abscissae (descending), Kronrod weights, and the embedded 7-point
// Gauss weights for xgk[1], xgk[3], xgk[5], xgk[7].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b, const Options& opts) {
    Result out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Segment> heap;
    Segment first = kronrod15(f, a, b);
    out.evaluations = 15;
    double total = first.value;
    double error = first.error;
    heap.push(first);
    // Segments too narrow to split are parked here with their error counted.
    std::vector<Segment> frozen;

    while (!heap.empty()) {
        const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
        if (error <= target) {
            out.converged = true;
            break;
        }
        if (heap.size() + frozen.size() >= opts.max_intervals) break;
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            frozen.push_back(worst);
            continue;
        }
        const Segment left = kronrod15(f, worst.a, mid);
        const Segment right = kronrod15(f, mid, worst.b);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-add from the final partition to drop the drift of incremental updates.
    total = 0.0;
    error = 0.0;
    out.intervals = heap.size() + frozen.size();
    while (!heap.empty()) {
        total += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    for (const Segment& s : frozen) {
        total += s.value;
        error += s.error;
    }
    out.value = total;
    out.error = error;
    if (!out.converged) {
        out.converged = error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    }
    return out;
}

Result integrate_half_line(const std::function<double(double)>& f, const Options& opts,
                           unsigned power) {
    const double m = static_cast<double>(std::max(1u, power));
    auto mapped = [&](double s) -> double {
        const double u = s / (1.0 - s);
        const double x = std::pow(u, m);
        if (!std::isfinite(x)) return 0.0;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        const double jac = m * std::pow(u, m - 1.0) / ((1.0 - s) * (1.0 - s));
        return fx * jac;
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

Result integrate_unit(const std::function<double(double, double)>& f, const Options& opts,
                      unsigned power) {
    const double m = static_cast<double>(std::max(1u, power));
    auto mapped = [&](double s) -> double {
        const double sm = std::pow(s, m);
        const double cm = std::pow(1.0 - s, m);
        const double den = sm + cm;
        const double x = sm / den;
        const double xc = cm / den;
        const double fx = f(x, xc);
        if (fx == 0.0) return 0.0;
        const double jac = m * std::pow(s, m - 1.0) * std::pow(1.0 - s, m - 1.0) / (den * den);
        return fx * jac;
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

unsigned grading_power(double alpha) {
    if (alpha >= 0.0) return 2;
    const double m = std::ceil(2.0 / (1.0 + alpha));
    return static_cast<unsigned>(std::clamp(m, 2.0, 16.0));
}

}  // namespace ghcs::quad
