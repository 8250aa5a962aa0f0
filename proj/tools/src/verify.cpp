#include "verify.hpp"

#include "figures.hpp"
#include "parse.hpp"

#include "ghcs/ladder.hpp"
#include "ghcs/phase.hpp"
#include "ghcs/photstat.hpp"
#include "ghcs/weights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace ghcs::cli {
namespace {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void check(const std::string& what, double measured, double tolerance) {
        const bool ok = std::isfinite(measured) && measured <= tolerance;
        Json c = Json::object();
        c["name"] = what;
        c["measured"] = std::isfinite(measured) ? Json(measured) : Json(nullptr);
        c["tolerance"] = tolerance;
        c["pass"] = ok;
        checks_.push_back(c);
        pass_ = pass_ && ok;
    }

    // Runs body; an exception counts as a failed check carrying the message.
    void guarded(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            Json c = Json::object();
            c["name"] = what;
            c["error"] = e.what();
            c["pass"] = false;
            checks_.push_back(c);
            pass_ = false;
        }
    }

    Json report() const {
        Json r = Json::object();
        r["suite"] = name_;
        r["pass"] = pass_;
        r["checks"] = checks_;
        return r;
    }
    bool pass() const { return pass_; }

private:
    std::string name_;
    Json checks_ = Json::array();
    bool pass_ = true;
};

struct Case {
    Family family;
    std::vector<double> a;
    std::vector<double> b;
};

void moments(Suite& s) {
    const std::vector<Case> cases = {
        {Family::CS, {}, {}},          {Family::F01, {}, {0.2}},    {Family::F01, {}, {1.0}},
        {Family::F01, {}, {5.0}},      {Family::F11, {2.0}, {4.0}}, {Family::F11, {3.0}, {3.0}},
        {Family::F11, {4.0}, {2.0}},   {Family::F10, {1.5}, {}},    {Family::F10, {2.0}, {}},
        {Family::F10, {4.0}, {}},      {Family::F21, {3.0, 3.0}, {2.0}},
    };
    quad::Options opts;
    opts.rel_tol = 1e-11;
    for (const Case& c : cases) {
        const ParameterSet p = ParameterSet::make_real(c.a, c.b);
        const std::string what = std::string("moments n<=20 ") + to_string(c.family) + " " + p.label();
        s.guarded(what, [&] {
            const MomentReport r = moment_check(c.family, p, 20, opts);
            s.check(what, r.converged ? r.max_rel_error : INFINITY, 1e-6);
        });
    }
}

void eigen(Suite& s) {
    struct State {
        std::vector<cplx> a, b;
        cplx z;
    };
    const std::vector<State> states = {
        {{}, {}, {3.0, 0.0}},
        {{}, {0.2}, std::polar(6.0, 1.0)},
        {{}, {5.0}, {0.8, 0.3}},
        {{2.0}, {3.0}, {0.8, 0.3}},
        {{4.0}, {2.0}, std::polar(3.0, 2.0)},
        {{1.5}, {}, std::polar(0.75, 0.5)},
        {{3.0, 3.0}, {2.0}, std::polar(0.9, -1.0)},
        {{0.3, 0.4}, {1.5}, std::polar(0.99, 0.2)},
        {{0.3, 0.4}, {5.0}, std::polar(1.0, 0.4)},
        {{{0.5, 1.0}, {0.5, -1.0}}, {6.0}, std::polar(1.0, -2.0)},
        {{0.5, 0.5}, {6.0}, std::polar(1.0, 1.0)},
        {{-0.5, 2.0}, {-0.3}, {0.5, 0.1}},
    };
    for (const State& st : states) {
        const ParameterSet p = ParameterSet::make(st.a, st.b);
        const std::string what = "eigen " + p.label() + " z=" + format_real(std::abs(st.z));
        s.guarded(what, [&] { s.check(what, eigenvalue_residual({p, st.z}, 1e-14), 1e-6); });
    }
}

void phase_norm(Suite& s) {
    for (int id = 8; id <= 13; ++id) {
        s.guarded("figure " + std::to_string(id), [&] {
            const Document doc = figure(id, FigureOptions{});
            for (const Series& ser : doc.series) {
                s.check("phase normalization figure " + std::to_string(id) + " " + ser.label,
                        ser.meta.at("normalization_residual").get<double>(), 1e-8);
            }
        });
    }
    const FockVector fock = FockVector::basis(3, 12);
    const std::vector<Analyzer> analyzers = {Analyzer::husimi(), Analyzer::pegg_barnett(),
                                             Analyzer::general(ParameterSet::make_real({2.0}, {4.0})),
                                             Analyzer::general(ParameterSet::make_real({3.0, 3.0}, {2.0}))};
    for (const Analyzer& an : analyzers) {
        const std::string what = "Fock |3> uniform under analyzer " + an.label();
        s.guarded(what, [&] {
            const PhaseDistribution d = phase_distribution(fock, an);
            double dev = 0.0;
            for (double v : d.values) dev = std::max(dev, std::abs(v - 0.5 / std::numbers::pi));
            s.check(what, dev, 1e-12);
        });
    }
}

double rel(double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

void coalesce(Suite& s) {
    struct Base {
        Family family;
        std::vector<double> a, b;
        double x;
    };
    const std::vector<Base> bases = {
        {Family::F01, {}, {1.5}, 2.0},
        {Family::F11, {2.0}, {4.0}, 2.0},
        {Family::F10, {3.0}, {}, 0.3},
        {Family::F21, {3.0, 3.0}, {2.0}, 0.3},
    };
    for (const Base& base : bases) {
        for (double c : {0.6, 2.7}) {
            const ParameterSet p = ParameterSet::make_real(base.a, base.b);
            const ParameterSet q = p.with_matched_pair(cplx(c, 0.0));
            const std::string tag = p.label() + " + (" + format_real(c) + ")";
            s.guarded("coalesce " + tag, [&] {
                double d_rho = 0.0, d_f = 0.0;
                for (std::size_t n = 0; n <= 30; ++n) {
                    d_rho = std::max(d_rho, std::abs(log_rho(q, n) - log_rho(p, n)));
                    d_f = std::max(d_f, rel(f_coeff(q, static_cast<long>(n)), f_coeff(p, static_cast<long>(n))));
                }
                s.check("coalesce log rho " + tag, d_rho, 1e-12);
                s.check("coalesce f " + tag, d_f, 1e-12);

                double d_w = 0.0;
                for (double x : {0.1, base.x, 0.9 * std::min(1.0, support_radius(base.family))}) {
                    d_w = std::max(d_w, rel(weight_for(q, x), weight(base.family, p, x)));
                }
                s.check("coalesce weight " + tag, d_w, 1e-12);

                const GCoefficientTable gp = g_coefficients(Analyzer::general(p), 30);
                const GCoefficientTable gq = g_coefficients(Analyzer::general(q), 30);
                s.check("coalesce G table " + tag, (gp.table - gq.table).cwiseAbs().maxCoeff(), 1e-12);

                const MeanMandel mp = mean_and_mandel(p, base.x);
                const MeanMandel mq = mean_and_mandel(q, base.x);
                s.check("coalesce mean " + tag, rel(mq.mean, mp.mean), 1e-12);
                s.check("coalesce Mandel " + tag, std::abs(mq.mandel_q - mp.mandel_q), 1e-12);
            });
        }
    }
}

}  // namespace

VerifyResult run_verify(const std::string& suite) {
    const std::vector<std::pair<std::string, void (*)(Suite&)>> table = {
        {"moments", moments}, {"eigen", eigen}, {"phase-norm", phase_norm}, {"coalesce", coalesce}};
    if (std::find(kVerifySuites.begin(), kVerifySuites.end(), suite) == kVerifySuites.end()) {
        throw std::invalid_argument("unknown verify suite '" + suite + "'");
    }
    VerifyResult out;
    out.report = Json::object();
    out.report["schema_version"] = kSchemaVersion;
    out.report["suite"] = suite;
    Json suites = Json::array();
    for (const auto& [name, fn] : table) {
        if (suite != "all" && suite != name) continue;
        Suite s(name);
        fn(s);
        suites.push_back(s.report());
        out.pass = out.pass && s.pass();
    }
    out.report["pass"] = out.pass;
    out.report["suites"] = suites;
    return out;
}

}  // namespace ghcs::cli
