#include "commands.hpp"

#include "figures.hpp"
#include "parse.hpp"
#include "verify.hpp"

#include "ghcs/error.hpp"
#include "ghcs/phase.hpp"
#include "ghcs/photstat.hpp"
#include "ghcs/weights.hpp"

#include <cmath>

namespace ghcs::cli {
namespace {

ParameterSet params_from(const std::string& a, const std::string& b) {
    return ParameterSet::make(parse_complex_list(a), parse_complex_list(b));
}

cplx point_from(const RunConfig& cfg) {
    if (cfg.z) return parse_complex(*cfg.z);
    if (cfg.r) return std::polar(*cfg.r, cfg.phi);
    throw UsageError(cfg.command + ": one of --z or --r is required");
}

Document header(const RunConfig& cfg) {
    Document doc;
    doc.set("command", cfg.command);
    for (const auto& [k, v] : cfg.echo) doc.set(k, v);
    doc.set("tol", format_real(cfg.tol));
    doc.set("cap", std::to_string(cfg.cap));
    return doc;
}

Json series_meta(const ParameterSet& params, cplx z, double tol) {
    Json m = Json::object();
    m["params"] = params.label();
    m["domain"] = to_string(classify(params, z).kind);
    m["tol"] = tol;
    return m;
}

Outcome emit(const Document& doc, const RunConfig& cfg) { return {render(doc, cfg.format), kExitOk}; }

Outcome cmd_validate(const RunConfig& cfg) {
    const ValidationReport r = validate(parse_complex_list(cfg.a), parse_complex_list(cfg.b));
    Json out = Json::object();
    out["schema_version"] = kSchemaVersion;
    out["valid"] = r.valid;
    out["rule"] = r.rule;
    if (!r.valid) {
        out["list"] = std::string(1, r.list);
        out["index"] = r.index;
    }
    out["message"] = r.message;
    if (r.valid) {
        const ParameterSet& p = *r.params;
        out["params"] = p.label();
        out["p"] = p.p();
        out["q"] = p.q();
        out["eta"] = p.eta();
        try {
            const DomainClass d = classify(p);
            out["domain"] = to_string(d.kind);
            if (d.kind != DomainKind::Plane) out["circle_normalizable"] = d.circle_normalizable;
        } catch (const DivergenceError&) {
            out["domain"] = "divergent";
        }
    }
    return {out.dump(2) + "\n", r.valid ? kExitOk : kExitInvalidParameters};
}

Outcome cmd_state(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    const cplx z = point_from(cfg);
    FockOptions fo;
    fo.tol = cfg.tol;
    fo.cap = cfg.cap;
    const FockVector v = fock_vector({p, z}, fo);
    Document doc = header(cfg);
    doc.set("cutoff", std::to_string(v.cutoff()));
    doc.set("tail_bound", format_real(v.tail_bound));
    doc.set("normalized", v.normalized ? "true" : "false");
    if (!v.warning.empty()) doc.set("warning", v.warning);
    Series re{"re", series_meta(p, z, cfg.tol), {}};
    Series im{"im", series_meta(p, z, cfg.tol), {}};
    Series ab{"abs2", series_meta(p, z, cfg.tol), {}};
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
        const double x = static_cast<double>(n);
        re.points.emplace_back(x, v.coeffs[n].real());
        im.points.emplace_back(x, v.coeffs[n].imag());
        ab.points.emplace_back(x, std::norm(v.coeffs[n]));
    }
    doc.series = {re, im, ab};
    return emit(doc, cfg);
}

Outcome cmd_pn(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    const cplx z = point_from(cfg);
    PnOptions po;
    po.cumulative_tol = cfg.tol;
    po.cap = cfg.cap;
    const DistributionSeries d = pn_distribution({p, z}, po);
    Document doc = header(cfg);
    Series s{"P(n)", series_meta(p, z, cfg.tol), {}};
    s.meta["normalization_residual"] = d.normalization_residual;
    for (std::size_t i = 0; i < d.grid.size(); ++i) s.points.emplace_back(d.grid[i], d.values[i]);
    doc.series.push_back(s);
    return emit(doc, cfg);
}

Outcome cmd_stats(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    Document doc = header(cfg);
    std::vector<double> radii;
    double phi = cfg.phi;
    if (cfg.r_max) {
        if (cfg.r_count < 1) throw UsageError("stats: --r-count must be positive");
        for (std::size_t i = 0; i < cfg.r_count; ++i) {
            radii.push_back(cfg.r_count == 1 ? *cfg.r_max
                                             : *cfg.r_max * static_cast<double>(i) / static_cast<double>(cfg.r_count - 1));
        }
    } else {
        const cplx z = point_from(cfg);
        radii.push_back(std::abs(z));
        phi = std::arg(z);
    }
    Series mean{"mean", series_meta(p, std::polar(radii.back(), phi), cfg.tol), {}};
    Series mandel{"mandel_q", mean.meta, {}};
    const double tol = std::max(cfg.tol, 1e-16);
    for (double r : radii) {
        classify(p, std::polar(r, phi));
        const MeanMandel mm = mean_and_mandel(p, r * r, tol);
        mean.points.emplace_back(r, mm.mean);
        mandel.points.emplace_back(r, mm.mandel_q);
    }
    doc.series = {mean, mandel};
    return emit(doc, cfg);
}

Outcome cmd_weight(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    const Family family = weight_family(p);
    const ParameterSet reduced = p.reduced();
    const double radius = support_radius(family);
    if (cfg.count < 1) throw UsageError("weight: --count must be positive");
    Document doc = header(cfg);
    doc.set("family", to_string(family));
    doc.set("reduced_params", reduced.label());
    std::vector<double> xs;
    if (radius == 1.0) {
        for (std::size_t k = 1; k <= cfg.count; ++k) xs.push_back(static_cast<double>(k) / static_cast<double>(cfg.count + 1));
    } else {
        const double x_max = cfg.x_max.value_or(10.0);
        doc.set("x_max", format_real(x_max));
        for (std::size_t k = 1; k <= cfg.count; ++k) xs.push_back(x_max * static_cast<double>(k) / static_cast<double>(cfg.count));
    }
    const PositivityReport pos = positivity_scan(family, reduced);
    Json meta = Json::object();
    meta["params"] = p.label();
    meta["family"] = to_string(family);
    meta["positivity_min"] = pos.min_value;
    meta["positivity_argmin"] = pos.argmin;
    Series w{"w", meta, {}};
    Series wr{"w_reduced", meta, {}};
    for (double x : xs) {
        w.points.emplace_back(x, weight(family, reduced, x));
        wr.points.emplace_back(x, reduced_weight(family, reduced, x));
    }
    doc.series = {w, wr};
    return emit(doc, cfg);
}

Outcome cmd_moment_check(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    const Family family = weight_family(p);
    quad::Options opts;
    opts.rel_tol = std::max(cfg.tol * 0.1, 1e-14);
    const MomentReport r = moment_check(family, p.reduced(), cfg.n_max, opts);
    Document doc = header(cfg);
    doc.set("family", to_string(family));
    doc.set("n_max", std::to_string(cfg.n_max));
    doc.set("threshold", format_real(cfg.threshold));
    doc.set("max_rel_error", format_real(r.max_rel_error));
    const bool ok = r.converged && r.max_rel_error <= cfg.threshold;
    doc.set("pass", ok ? "true" : "false");
    Json meta = Json::object();
    meta["params"] = p.label();
    Series err{"rel_error", meta, {}};
    Series quadv{"quadrature", meta, {}};
    Series rho{"rho", meta, {}};
    for (const MomentRecord& rec : r.records) {
        const double n = static_cast<double>(rec.n);
        err.points.emplace_back(n, rec.rel_error);
        quadv.points.emplace_back(n, rec.quadrature);
        rho.points.emplace_back(n, rec.rho);
    }
    doc.series = {err, quadv, rho};
    return {render(doc, cfg.format), ok ? kExitOk : kExitVerifyFailed};
}

PhaseGrid grid_from(const RunConfig& cfg) {
    if (cfg.theta_count < 2) throw UsageError("--theta-count must be at least 2");
    PhaseGrid g;
    g.count = cfg.theta_count;
    g.start = cfg.theta_start;
    return g;
}

Series phase_series(const PhaseDistribution& d, Json meta) {
    Series s{d.label, std::move(meta), {}};
    s.meta["normalization_residual"] = d.normalization_residual;
    for (std::size_t i = 0; i < d.theta.size(); ++i) s.points.emplace_back(d.theta[i], d.values[i]);
    return s;
}

FockOptions phase_fock_options(const RunConfig& cfg) {
    FockOptions fo;
    fo.tol = std::min(cfg.tol, 1e-15);
    fo.cap = cfg.cap;
    return fo;
}

Outcome cmd_phase(const RunConfig& cfg) {
    const ParameterSet p = params_from(cfg.a, cfg.b);
    const cplx z = point_from(cfg);
    Analyzer analyzer = Analyzer::husimi();
    if (cfg.analyzer == "PB") {
        analyzer = Analyzer::pegg_barnett();
    } else if (cfg.analyzer != "Q") {
        throw UsageError("phase: --analyzer must be Q or PB");
    }
    const FockVector signal = fock_vector({p, z}, phase_fock_options(cfg));
    Document doc = header(cfg);
    Json meta = series_meta(p, z, cfg.tol);
    meta["analyzer"] = analyzer.label();
    doc.series.push_back(phase_series(phase_distribution(signal, analyzer, grid_from(cfg)), meta));
    return emit(doc, cfg);
}

Outcome cmd_gh_phase(const RunConfig& cfg) {
    const ParameterSet analyzer = params_from(cfg.a, cfg.b);
    const ParameterSet signal_params = params_from(cfg.signal_a, cfg.signal_b);
    const cplx z = point_from(cfg);
    const FockVector signal = fock_vector({signal_params, z}, phase_fock_options(cfg));
    Document doc = header(cfg);
    Json meta = series_meta(signal_params, z, cfg.tol);
    meta["signal"] = signal_params.label();
    meta["analyzer"] = analyzer.label();
    doc.series.push_back(phase_series(phase_distribution(signal, Analyzer::general(analyzer), grid_from(cfg)), meta));
    return emit(doc, cfg);
}

Outcome cmd_figure(const RunConfig& cfg) {
    FigureOptions fo;
    fo.values = cfg.values;
    fo.r = cfg.r;
    fo.phi = cfg.phi;
    if (cfg.r_max) fo.r_max = *cfg.r_max;
    fo.r_count = cfg.r_count;
    fo.theta_count = cfg.theta_count;
    fo.theta_start = cfg.theta_start;
    fo.tol = cfg.tol;
    fo.cap = cfg.cap;
    if (fo.r_count < 1 || fo.theta_count < 2) throw UsageError("figure: grid sizes too small");
    Document doc = figure(cfg.figure, fo);
    Document head = header(cfg);
    for (const auto& kv : doc.config) head.set(kv.first, kv.second);
    head.series = std::move(doc.series);
    return emit(head, cfg);
}

Outcome cmd_verify(const RunConfig& cfg) {
    const VerifyResult r = run_verify(cfg.suite);
    return {r.report.dump(2) + "\n", r.pass ? kExitOk : kExitVerifyFailed};
}

}  // namespace

Outcome run_command(const RunConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json") throw UsageError("--format must be csv or json");
    if (cfg.command == "validate") return cmd_validate(cfg);
    if (cfg.command == "state") return cmd_state(cfg);
    if (cfg.command == "pn") return cmd_pn(cfg);
    if (cfg.command == "stats") return cmd_stats(cfg);
    if (cfg.command == "weight") return cmd_weight(cfg);
    if (cfg.command == "moment-check") return cmd_moment_check(cfg);
    if (cfg.command == "phase") return cmd_phase(cfg);
    if (cfg.command == "gh-phase") return cmd_gh_phase(cfg);
    if (cfg.command == "figure") return cmd_figure(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace ghcs::cli
