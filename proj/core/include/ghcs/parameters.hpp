#pragma once

// Parameter lists (a_1..a_p; b_1..b_q) of a generalized hypergeometric state,
// their admissibility rules and the convergence domain they induce.

#include "ghcs/specfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ghcs {

struct ValidationReport;

class ParameterSet {
public:
    ParameterSet() = default;

    // Validates and canonicalizes (both lists sorted); throws ParameterError
    // carrying the validation message when the lists are not admissible.
    static ParameterSet make(std::vector<cplx> a, std::vector<cplx> b);
    static ParameterSet make_real(const std::vector<double>& a, const std::vector<double>& b);

    const std::vector<cplx>& a() const noexcept { return a_; }
    const std::vector<cplx>& b() const noexcept { return b_; }
    std::size_t p() const noexcept { return a_.size(); }
    std::size_t q() const noexcept { return b_.size(); }

    // True when every entry has a vanishing imaginary part.
    bool is_real() const noexcept { return real_; }
    // Real parts of the entries; meaningful when is_real().
    std::vector<double> a_real() const;
    std::vector<double> b_real() const;

    // Re(sum a - sum b), stored for every (p, q).
    double eta() const noexcept { return eta_; }

    // Same set with every entry shifted by k (a + k; b + k).
    ParameterSet shifted(double k) const;
    // Same set with c appended to both lists. The pair cancels in every ratio,
    // so no admissibility check is applied to c itself.
    ParameterSet with_matched_pair(cplx c) const;
    // Cancels numerator/denominator entries with |a_i - b_j| <= tol.
    ParameterSet reduced(double tol = 1e-12) const;

    // e.g. "(2;1) a=[0.3,0.4] b=[1.5]"
    std::string label() const;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

private:
    friend ValidationReport validate(const std::vector<cplx>& a, const std::vector<cplx>& b);
    ParameterSet(std::vector<cplx> a, std::vector<cplx> b);

    std::vector<cplx> a_;
    std::vector<cplx> b_;
    bool real_ = true;
    double eta_ = 0.0;
};

struct ValidationReport {
    bool valid = false;
    // "ok", "non-positive-integer", "unpaired-complex", "unpaired-negative".
    std::string rule = "ok";
    char list = ' ';          // 'a' or 'b' for the offending entry
    std::size_t index = 0;    // position in that list (as given, before sorting)
    std::string message;
    std::optional<ParameterSet> params;  // set iff valid
};

// Admissibility check: every entry is positive, or negative reals come in
// pairs with equal integer parts (pooled over both lists, since only the sign
// of the whole ratio matters), or complex entries come in conjugate pairs
// within one list. Zero and negative integers are never allowed.
ValidationReport validate(const std::vector<cplx>& a, const std::vector<cplx>& b);

enum class DomainKind { Plane, UnitDisk, CircleNormalized, CircleUnnormalizable };

const char* to_string(DomainKind kind) noexcept;

struct DomainClass {
    DomainKind kind = DomainKind::Plane;
    double eta = 0.0;
    // For p = q + 1: whether the unit-circle states are normalizable (eta < 0).
    bool circle_normalizable = false;
};

// Domain of the parameter set: Plane for p < q + 1, UnitDisk for p = q + 1.
// Throws DivergenceError for p > q + 1.
DomainClass classify(const ParameterSet& params);

// Domain class of a particular point z, distinguishing the two circle kinds.
// Throws DivergenceError when z lies outside the convergence domain.
DomainClass classify(const ParameterSet& params, cplx z);

}  // namespace ghcs
