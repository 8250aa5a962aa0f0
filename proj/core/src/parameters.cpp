#include "ghcs/parameters.hpp"

#include "ghcs/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ghcs {
namespace {

constexpr double kConjugateTol = 1e-12;
constexpr double kCircleTol = 1e-12;

bool canonical_less(const cplx& u, const cplx& v) {
    if (u.real() != v.real()) return u.real() < v.real();
    return u.imag() < v.imag();
}

bool close(const cplx& u, const cplx& v, double tol) {
    return std::abs(u - v) <= tol * std::max(1.0, std::abs(u));
}

struct Entry {
    cplx value;
    char list;
    std::size_t index;
};

void format_list(std::ostringstream& os, const std::vector<cplx>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ',';
        os << v[i].real();
        if (v[i].imag() != 0.0) os << (v[i].imag() < 0 ? "" : "+") << v[i].imag() << 'i';
    }
    os << ']';
}

ValidationReport reject(std::string rule, const Entry& e, std::string message) {
    ValidationReport r;
    r.valid = false;
    r.rule = std::move(rule);
    r.list = e.list;
    r.index = e.index;
    r.message = std::move(message);
    return r;
}

}  // namespace

ParameterSet::ParameterSet(std::vector<cplx> a, std::vector<cplx> b) : a_(std::move(a)), b_(std::move(b)) {
    std::sort(a_.begin(), a_.end(), canonical_less);
    std::sort(b_.begin(), b_.end(), canonical_less);
    cplx eta{};
    for (const cplx& v : a_) {
        eta += v;
        real_ = real_ && v.imag() == 0.0;
    }
    for (const cplx& v : b_) {
        eta -= v;
        real_ = real_ && v.imag() == 0.0;
    }
    eta_ = eta.real();
}

ParameterSet ParameterSet::make(std::vector<cplx> a, std::vector<cplx> b) {
    ValidationReport report = validate(a, b);
    if (!report.valid) throw ParameterError(report.message);
    return *report.params;
}

ParameterSet ParameterSet::make_real(const std::vector<double>& a, const std::vector<double>& b) {
    return make(std::vector<cplx>(a.begin(), a.end()), std::vector<cplx>(b.begin(), b.end()));
}

std::vector<double> ParameterSet::a_real() const {
    std::vector<double> out;
    for (const cplx& v : a_) out.push_back(v.real());
    return out;
}

std::vector<double> ParameterSet::b_real() const {
    std::vector<double> out;
    for (const cplx& v : b_) out.push_back(v.real());
    return out;
}

ParameterSet ParameterSet::shifted(double k) const {
    std::vector<cplx> a = a_;
    std::vector<cplx> b = b_;
    for (cplx& v : a) v += k;
    for (cplx& v : b) v += k;
    return ParameterSet(std::move(a), std::move(b));
}

ParameterSet ParameterSet::with_matched_pair(cplx c) const {
    std::vector<cplx> a = a_;
    std::vector<cplx> b = b_;
    a.push_back(c);
    b.push_back(c);
    return ParameterSet(std::move(a), std::move(b));
}

ParameterSet ParameterSet::reduced(double tol) const {
    std::vector<cplx> a;
    std::vector<cplx> b = b_;
    for (const cplx& v : a_) {
        auto it = std::find_if(b.begin(), b.end(), [&](const cplx& w) { return std::abs(v - w) <= tol; });
        if (it != b.end()) {
            b.erase(it);
        } else {
            a.push_back(v);
        }
    }
    return ParameterSet(std::move(a), std::move(b));
}

std::string ParameterSet::label() const {
    std::ostringstream os;
    os.precision(12);
    os << '(' << p() << ';' << q() << ") a=";
    format_list(os, a_);
    os << " b=";
    format_list(os, b_);
    return os.str();
}

ValidationReport validate(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < a.size(); ++i) entries.push_back({a[i], 'a', i});
    for (std::size_t i = 0; i < b.size(); ++i) entries.push_back({b[i], 'b', i});

    for (const Entry& e : entries) {
        if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
            return reject("non-finite", e, std::string("parameter ") + e.list + "[" +
                                               std::to_string(e.index) + "] is not finite");
        }
        if (e.value.imag() == 0.0 && specfun::is_nonpositive_integer(e.value.real(), 0.0)) {
            return reject("non-positive-integer", e,
                          std::string("parameter ") + e.list + "[" + std::to_string(e.index) +
                              "] is zero or a negative integer");
        }
    }

    // Complex entries: conjugate partners within the same list.
    for (char list : {'a', 'b'}) {
        std::vector<const Entry*> pending;
        for (const Entry& e : entries) {
            if (e.list != list || e.value.imag() == 0.0) continue;
            auto it = std::find_if(pending.begin(), pending.end(), [&](const Entry* other) {
                return close(std::conj(other->value), e.value, kConjugateTol);
            });
            if (it != pending.end()) {
                pending.erase(it);
            } else {
                pending.push_back(&e);
            }
        }
        if (!pending.empty()) {
            const Entry& e = *pending.front();
            return reject("unpaired-complex", e,
                          std::string("complex parameter ") + e.list + "[" + std::to_string(e.index) +
                              "] has no conjugate partner in the same list");
        }
    }

    // Negative reals, pooled over both lists: adjacent pairs after sorting must
    // share their integer part so that the sign of the ratio never flips.
    std::vector<const Entry*> negatives;
    for (const Entry& e : entries) {
        if (e.value.imag() == 0.0 && e.value.real() < 0.0) negatives.push_back(&e);
    }
    std::sort(negatives.begin(), negatives.end(),
              [](const Entry* u, const Entry* v) { return u->value.real() < v->value.real(); });
    for (std::size_t i = 0; i < negatives.size(); i += 2) {
        const Entry& e = *negatives[i];
        if (i + 1 == negatives.size()) {
            return reject("unpaired-negative", e,
                          std::string("negative parameter ") + e.list + "[" + std::to_string(e.index) +
                              "] has no partner with the same integer part");
        }
        const Entry& f = *negatives[i + 1];
        if (std::trunc(e.value.real()) != std::trunc(f.value.real())) {
            return reject("unpaired-negative", e,
                          std::string("negative parameters ") + e.list + "[" + std::to_string(e.index) +
                              "] and " + f.list + "[" + std::to_string(f.index) +
                              "] have different integer parts");
        }
    }

    ValidationReport ok;
    ok.valid = true;
    ok.message = "valid";
    ok.params = ParameterSet(a, b);
    return ok;
}

const char* to_string(DomainKind kind) noexcept {
    switch (kind) {
        case DomainKind::Plane: return "plane";
        case DomainKind::UnitDisk: return "unit-disk";
        case DomainKind::CircleNormalized: return "circle-normalized";
        case DomainKind::CircleUnnormalizable: return "circle-unnormalizable";
    }
    return "unknown";
}

DomainClass classify(const ParameterSet& params) {
    DomainClass out;
    out.eta = params.eta();
    if (params.p() > params.q() + 1) {
        throw DivergenceError("no convergence domain for p > q + 1: " + params.label());
    }
    if (params.p() == params.q() + 1) {
        out.kind = DomainKind::UnitDisk;
        out.circle_normalizable = out.eta < 0.0;
    }
    return out;
}

DomainClass classify(const ParameterSet& params, cplx z) {
    DomainClass out = classify(params);
    if (out.kind == DomainKind::Plane) return out;
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= kCircleTol) {
        out.kind = out.circle_normalizable ? DomainKind::CircleNormalized : DomainKind::CircleUnnormalizable;
    } else if (r > 1.0) {
        throw DivergenceError("|z| > 1 lies outside the unit disk of " + params.label());
    }
    return out;
}

}  // namespace ghcs
