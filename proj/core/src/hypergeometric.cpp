#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

namespace ghcs {
namespace {
std::atomic<std::size_t> g_term_cap{100000};
}  // namespace

std::size_t series_term_cap() noexcept { return g_term_cap.load(std::memory_order_relaxed); }

void set_series_term_cap(std::size_t cap) noexcept {
    g_term_cap.store(std::max<std::size_t>(cap, 16), std::memory_order_relaxed);
}

namespace specfun {
namespace {

double real_part(double v) { return v; }
double real_part(cplx v) { return v.real(); }

bool is_nonpos_int(double v) { return is_nonpositive_integer(v, 0.0); }
bool is_nonpos_int(cplx v) { return v.imag() == 0.0 && is_nonpositive_integer(v.real(), 0.0); }

// Neumaier compensated accumulator.
template <class T>
class Accumulator {
public:
    explicit Accumulator(bool compensated) : compensated_(compensated) {}

    void add(T v) {
        if constexpr (std::is_same_v<T, cplx>) {
            add_component(sum_re_, comp_re_, v.real());
            add_component(sum_im_, comp_im_, v.imag());
        } else {
            add_component(sum_re_, comp_re_, v);
        }
    }

    T value() const {
        if constexpr (std::is_same_v<T, cplx>) {
            return {sum_re_ + comp_re_, sum_im_ + comp_im_};
        } else {
            return sum_re_ + comp_re_;
        }
    }

private:
    void add_component(double& sum, double& comp, double v) const {
        if (!compensated_) {
            sum += v;
            return;
        }
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    bool compensated_;
    double sum_re_ = 0.0, comp_re_ = 0.0;
    double sum_im_ = 0.0, comp_im_ = 0.0;
};

template <class T>
T term_ratio(const std::vector<T>& a, const std::vector<T>& b, T x, std::size_t n) {
    const double dn = static_cast<double>(n);
    T num = x;
    T den = dn + 1.0;
    for (const T& ai : a) num *= ai + dn;
    for (const T& bj : b) den *= bj + dn;
    return num / den;
}

// Index of the first vanishing numerator factor, or max() for a non-terminating series.
template <class T>
std::size_t termination_index(const std::vector<T>& a) {
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (const T& ai : a) {
        if (is_nonpos_int(ai)) m = std::min(m, static_cast<std::size_t>(-real_part(ai)));
    }
    return m;
}

// Quad-precision scalars for the Levin transform. Its extrapolation weights
// alternate in sign and grow quickly for logarithmically convergent input, so
// the partial sums have to carry far more digits than the requested result.
__extension__ typedef __float128 quad_t;

struct QuadComplex {
    quad_t re = 0;
    quad_t im = 0;
};

inline QuadComplex operator+(QuadComplex u, QuadComplex v) { return {u.re + v.re, u.im + v.im}; }
inline QuadComplex operator-(QuadComplex u, QuadComplex v) { return {u.re - v.re, u.im - v.im}; }
inline QuadComplex operator*(QuadComplex u, QuadComplex v) {
    return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
}
inline QuadComplex operator*(quad_t s, QuadComplex u) { return {s * u.re, s * u.im}; }
inline QuadComplex operator/(QuadComplex u, QuadComplex v) {
    const quad_t den = v.re * v.re + v.im * v.im;
    return {(u.re * v.re + u.im * v.im) / den, (u.im * v.re - u.re * v.im) / den};
}

template <class T>
struct QuadOf {
    using type = quad_t;
    static type from(double v) { return v; }
    static double to(type v) { return static_cast<double>(v); }
    static double magnitude(type v) { return std::abs(static_cast<double>(v)); }
    static bool is_zero(type v) { return v == 0; }
};

template <>
struct QuadOf<cplx> {
    using type = QuadComplex;
    static type from(cplx v) { return {v.real(), v.imag()}; }
    static cplx to(type v) { return {static_cast<double>(v.re), static_cast<double>(v.im)}; }
    static double magnitude(type v) { return std::abs(to(v)); }
    static bool is_zero(type v) { return v.re == 0 && v.im == 0; }
};

// Levin u-transform L_k^{(0)} of the partial sums, used on the unit circle.
template <class T>
SeriesResult<T> levin_sum(const std::vector<T>& a, const std::vector<T>& b, T x,
                          const SeriesOptions& opts) {
    using Q = QuadOf<T>;
    using LT = typename Q::type;
    constexpr int kMaxOrder = 60;

    std::vector<LT> qa;
    std::vector<LT> qb;
    for (const T& v : a) qa.push_back(Q::from(v));
    for (const T& v : b) qb.push_back(Q::from(v));
    const LT qx = Q::from(x);

    std::vector<LT> partial;
    std::vector<LT> terms;
    LT t = Q::from(T(1.0));
    LT s{};
    for (int n = 0; n <= kMaxOrder + 1; ++n) {
        s = s + t;
        terms.push_back(t);
        partial.push_back(s);
        const quad_t dn = n;
        LT num = qx;
        LT den = Q::from(T(1.0));
        for (const LT& ai : qa) num = num * (ai + Q::from(T(dn)));
        for (const LT& bj : qb) den = den * (bj + Q::from(T(dn)));
        t = (dn + 1) == 0 ? LT{} : t * (num / ((dn + 1) * den));
    }

    LT previous{};
    double best_diff = std::numeric_limits<double>::infinity();
    LT best{};
    int best_order = 0;
    int agreement = 0;
    for (int k = 1; k <= kMaxOrder; ++k) {
        LT num{};
        LT den{};
        quad_t binom = 1;
        for (int j = 0; j <= k; ++j) {
            if (Q::is_zero(terms[j])) break;
            const LT omega = quad_t(1 + j) * terms[j];
            const quad_t base = quad_t(1 + j) / quad_t(1 + k);
            quad_t ratio = 1;
            for (int e = 0; e < k - 1; ++e) ratio *= base;
            const quad_t c = ((j % 2 == 0) ? binom : -binom) * ratio;
            const LT unit = Q::from(T(1.0));
            num = num + c * (partial[j] / omega);
            den = den + c * (unit / omega);
            binom = binom * (k - j) / (j + 1);
        }
        const LT estimate = num / den;
        if (k > 1) {
            const double diff = Q::magnitude(estimate - previous);
            if (diff < best_diff) {
                best_diff = diff;
                best = estimate;
                best_order = k;
            }
            if (diff <= 0.1 * opts.tol * Q::magnitude(estimate)) {
                if (++agreement >= 2) break;
            } else {
                agreement = 0;
            }
        }
        previous = estimate;
    }

    SeriesResult<T> out;
    out.value = Q::to(best);
    out.terms_used = static_cast<std::size_t>(best_order + 1);
    out.tail_estimate = best_diff;
    out.converged = out.tail_estimate <= opts.tol * std::max(1.0, std::abs(out.value));
    if (!out.converged) {
        throw ConvergenceError("pFq on the unit circle: Levin acceleration reached " +
                               describe(out.tail_estimate) + " (requested " +
                               describe(opts.tol) + ")");
    }
    return out;
}

template <class T>
SeriesResult<T> pfq_impl(const std::vector<T>& a, const std::vector<T>& b, T x,
                         const SeriesOptions& opts) {
    const std::size_t p = a.size();
    const std::size_t q = b.size();
    const std::size_t stop = termination_index(a);
    const bool terminating = stop != std::numeric_limits<std::size_t>::max();

    for (const T& bj : b) {
        if (is_nonpos_int(bj) && !(terminating && stop < static_cast<std::size_t>(-real_part(bj)))) {
            throw DomainError("pFq: denominator parameter is a non-positive integer");
        }
    }

    SeriesResult<T> out;
    if (x == T{}) {
        out.value = 1.0;
        out.terms_used = 1;
        out.converged = true;
        return out;
    }

    const double ax = std::abs(x);
    const bool on_circle = std::abs(ax - 1.0) <= 1e-14;
    if (!terminating) {
        if (p > q + 1) {
            throw DivergenceError("pFq diverges for every nonzero argument when p > q + 1");
        }
        if (p == q + 1) {
            if (ax > 1.0 && !on_circle) {
                throw DivergenceError("pFq with p = q + 1 diverges for |x| > 1");
            }
            if (on_circle) {
                T eta_c{};
                for (const T& ai : a) eta_c += ai;
                for (const T& bj : b) eta_c -= bj;
                const double eta = real_part(eta_c);
                const bool at_one = std::abs(x - T(1.0)) <= 1e-14;
                if (!(eta < 0.0 || (eta < 1.0 && !at_one))) {
                    throw DivergenceError("pFq with p = q + 1 diverges on |x| = 1 for eta = " +
                                          describe(eta));
                }
                if (at_one && p == 2 && opts.use_closed_forms) {
                    out.value = T(gauss_2f1_unit(a[0], a[1], b[0]));
                    out.terms_used = 1;
                    out.converged = true;
                    return out;
                }
                return levin_sum(a, b, x, opts);
            }
        }
    }

    // Ratios of pFq terms become monotone once n exceeds the parameter magnitudes.
    double scale = 0.0;
    for (const T& ai : a) scale = std::max(scale, std::abs(ai));
    for (const T& bj : b) scale = std::max(scale, std::abs(bj));
    const auto n_min = static_cast<std::size_t>(std::ceil(scale));
    const double limit_ratio = (p == q + 1) ? ax : 0.0;

    Accumulator<T> acc(opts.compensated);
    T term = 1.0;
    acc.add(term);
    int small_run = 0;
    T ratio = term_ratio(a, b, x, 0);
    for (std::size_t n = 0; n + 1 < opts.max_terms; ++n) {
        term *= ratio;
        acc.add(term);
        out.terms_used = n + 2;
        if (term == T{}) {
            out.value = acc.value();
            out.tail_estimate = 0.0;
            out.converged = true;
            return out;
        }
        const T next_ratio = term_ratio(a, b, x, n + 1);
        const T sum = acc.value();
        const double abs_sum = std::abs(sum);
        const double abs_term = std::abs(term);
        small_run = (abs_term <= opts.tol * abs_sum) ? small_run + 1 : 0;

        const double r_now = std::abs(ratio);
        const double r_next = std::abs(next_ratio);
        // With p = q + 1 every later ratio stays below max(r_next, |x|) whichever
        // side the ratios approach |x| from; otherwise they must be decreasing.
        const bool bounded = (p == q + 1) || r_next <= r_now;
        if (small_run >= 3 && n + 1 >= n_min && r_next < 1.0 && bounded) {
            const double r_sup = std::max(r_next, limit_ratio);
            const double tail = abs_term * r_sup / (1.0 - r_sup);
            if (tail <= opts.tol * abs_sum) {
                out.value = sum;
                out.tail_estimate = tail;
                out.converged = true;
                return out;
            }
        }
        ratio = next_ratio;
    }
    throw ConvergenceError("pFq: term cap of " + std::to_string(opts.max_terms) +
                           " reached before tolerance " + describe(opts.tol));
}

}  // namespace

SeriesResult<double> pfq(const std::vector<double>& a, const std::vector<double>& b, double x,
                         const SeriesOptions& opts) {
    return pfq_impl<double>(a, b, x, opts);
}

SeriesResult<cplx> pfq(const std::vector<cplx>& a, const std::vector<cplx>& b, cplx x,
                       const SeriesOptions& opts) {
    return pfq_impl<cplx>(a, b, x, opts);
}

}  // namespace specfun
}  // namespace ghcs
