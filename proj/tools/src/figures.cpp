#include "figures.hpp"

#include "parse.hpp"

#include "ghcs/phase.hpp"
#include "ghcs/photstat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace ghcs::cli {
namespace {

enum class Kind { Pn, Mean, Mandel, SignalPhase, AnalyzerPhase };

struct FigureDef {
    Kind kind;
    Family family;
    double default_r;
    const char* default_values;
    const char* title;
};

const FigureDef kFigures[kFigureCount] = {
    {Kind::Pn, Family::F01, 3.0, "0.2,1,5", "photon-number distributions of (0;1) states and the CS"},
    {Kind::Mean, Family::F01, 0.0, "0.2,1,5", "mean photon numbers of (0;1) states and the CS versus |alpha|"},
    {Kind::Mandel, Family::F01, 0.0, "0.2,1,5", "Mandel parameters of (0;1) states and the CS versus |alpha|"},
    {Kind::Pn, Family::F11, 3.0, "2:4,3:3,4:2", "photon-number distributions of (1;1) states and the CS"},
    {Kind::Mean, Family::F11, 0.0, "2:4,3:3,4:2", "mean photon numbers of (1;1) states and the CS versus |alpha|"},
    {Kind::Mandel, Family::F11, 0.0, "2:4,3:3,4:2", "Mandel parameters of (1;1) states and the CS versus |alpha|"},
    {Kind::Pn, Family::F10, 0.75, "1.5,2,4", "photon-number distributions of (1;0) states and the CS"},
    {Kind::SignalPhase, Family::F01, 0.75, "0.5,1,3", "Husimi phase distributions of (0;1) states and the CS"},
    {Kind::SignalPhase, Family::F11, 0.75, "2:4,3:3,4:2", "Husimi phase distributions of (1;1) states and the CS"},
    {Kind::SignalPhase, Family::F10, 0.75, "1.5,2,4", "Husimi phase distributions of (1;0) states and the CS"},
    {Kind::AnalyzerPhase, Family::F01, 0.75, "0.5,1,3", "(0;1) phase distributions of the CS and its Husimi phase distribution"},
    {Kind::AnalyzerPhase, Family::F11, 0.75, "2:4,3:3,4:2", "(1;1) phase distributions of the CS and its Husimi phase distribution"},
    {Kind::AnalyzerPhase, Family::F10, 0.75, "1.5,2,4", "(1;0) phase distributions of the CS and its Husimi phase distribution"},
};

struct Member {
    std::string label;
    ParameterSet params;
};

std::vector<Member> members(Family family, const std::string& values) {
    std::vector<Member> out;
    switch (family) {
        case Family::F01:
            for (double b : parse_real_list(values)) out.push_back({"b=" + format_real(b), ParameterSet::make_real({}, {b})});
            break;
        case Family::F10:
            for (double a : parse_real_list(values)) out.push_back({"a=" + format_real(a), ParameterSet::make_real({a}, {})});
            break;
        case Family::F11:
            for (const auto& [a, b] : parse_pair_list(values)) {
                out.push_back({"a=" + format_real(a) + " b=" + format_real(b), ParameterSet::make_real({a}, {b})});
            }
            break;
        default:
            throw std::logic_error("figure family without a sweep");
    }
    return out;
}

Json meta_for(const ParameterSet& params, cplx z, double tol) {
    Json m = Json::object();
    m["params"] = params.label();
    m["domain"] = to_string(classify(params, z).kind);
    m["tol"] = tol;
    return m;
}

Series pn_series(const std::string& label, const ParameterSet& params, cplx z, const FigureOptions& opts) {
    PnOptions po;
    po.cumulative_tol = opts.tol;
    po.cap = opts.cap;
    const DistributionSeries d = pn_distribution({params, z}, po);
    Series s{label, meta_for(params, z, opts.tol), {}};
    s.meta["normalization_residual"] = d.normalization_residual;
    for (std::size_t i = 0; i < d.grid.size(); ++i) s.points.emplace_back(d.grid[i], d.values[i]);
    return s;
}

std::vector<double> sweep_grid(const FigureOptions& opts) {
    std::vector<double> r(opts.r_count);
    for (std::size_t i = 0; i < opts.r_count; ++i) {
        r[i] = opts.r_count == 1 ? opts.r_max : opts.r_max * static_cast<double>(i) / static_cast<double>(opts.r_count - 1);
    }
    return r;
}

Series stats_series(const std::string& label, const ParameterSet& params, bool mandel, const FigureOptions& opts) {
    Series s{label, meta_for(params, 0.0, opts.tol), {}};
    s.meta.erase("domain");
    for (double r : sweep_grid(opts)) {
        const MeanMandel mm = mean_and_mandel(params, r * r, std::max(opts.tol, 1e-16));
        s.points.emplace_back(r, mandel ? mm.mandel_q : mm.mean);
    }
    return s;
}

Series cs_stats_series(bool mandel, const FigureOptions& opts) {
    const ParameterSet cs = ParameterSet::make({}, {});
    Series s{"CS", Json::object(), {}};
    s.meta["params"] = cs.label();
    for (double r : sweep_grid(opts)) {
        const PhotonStats st = closed_form_stats(Family::CS, cs, r * r);
        s.points.emplace_back(r, mandel ? st.mandel_q : st.mean);
    }
    return s;
}

Series phase_series(const std::string& label, const FockVector& signal, const Analyzer& analyzer,
                    const ParameterSet& signal_params, cplx z, const FigureOptions& opts) {
    PhaseGrid grid;
    grid.count = opts.theta_count;
    grid.start = opts.theta_start;
    const PhaseDistribution d = phase_distribution(signal, analyzer, grid);
    Series s{label, meta_for(signal_params, z, opts.tol), {}};
    s.meta["signal"] = signal_params.label();
    s.meta["analyzer"] = analyzer.label();
    s.meta["normalization_residual"] = d.normalization_residual;
    for (std::size_t i = 0; i < d.theta.size(); ++i) s.points.emplace_back(d.theta[i], d.values[i]);
    return s;
}

}  // namespace

std::string figure_title(int id) {
    if (id < 1 || id > kFigureCount) throw std::out_of_range("figure id must be in 1.." + std::to_string(kFigureCount));
    return kFigures[id - 1].title;
}

Document figure(int id, const FigureOptions& opts) {
    if (id < 1 || id > kFigureCount) throw std::out_of_range("figure id must be in 1.." + std::to_string(kFigureCount));
    const FigureDef& def = kFigures[id - 1];
    const std::string values = opts.values.empty() ? def.default_values : opts.values;
    const double r = opts.r.value_or(def.default_r);
    const cplx z = std::polar(r, opts.phi);
    const ParameterSet cs = ParameterSet::make({}, {});
    FockOptions fo;
    fo.tol = std::min(opts.tol, 1e-15);
    fo.cap = opts.cap;

    Document doc;
    doc.set("figure", std::to_string(id));
    doc.set("title", def.title);
    doc.set("family", to_string(def.family));
    doc.set("values", values);
    switch (def.kind) {
        case Kind::Pn:
            doc.set("abs_z", format_real(r));
            doc.set("phi", format_real(opts.phi));
            for (const Member& m : members(def.family, values)) doc.series.push_back(pn_series(m.label, m.params, z, opts));
            doc.series.push_back(pn_series("CS", cs, z, opts));
            break;
        case Kind::Mean:
        case Kind::Mandel: {
            const bool mandel = def.kind == Kind::Mandel;
            doc.set("quantity", mandel ? "mandel_q" : "mean");
            doc.set("r_max", format_real(opts.r_max));
            doc.set("r_count", std::to_string(opts.r_count));
            for (const Member& m : members(def.family, values)) doc.series.push_back(stats_series(m.label, m.params, mandel, opts));
            doc.series.push_back(cs_stats_series(mandel, opts));
            break;
        }
        case Kind::SignalPhase:
        case Kind::AnalyzerPhase: {
            doc.set("abs_z", format_real(r));
            doc.set("phi", format_real(opts.phi));
            doc.set("theta_start", format_real(opts.theta_start));
            doc.set("theta_count", std::to_string(opts.theta_count));
            const FockVector cs_signal = fock_vector({cs, z}, fo);
            for (const Member& m : members(def.family, values)) {
                if (def.kind == Kind::SignalPhase) {
                    doc.series.push_back(
                        phase_series(m.label, fock_vector({m.params, z}, fo), Analyzer::husimi(), m.params, z, opts));
                } else {
                    doc.series.push_back(phase_series(m.label, cs_signal, Analyzer::general(m.params), cs, z, opts));
                }
            }
            doc.series.push_back(phase_series("CS", cs_signal, Analyzer::husimi(), cs, z, opts));
            break;
        }
    }
    return doc;
}

}  // namespace ghcs::cli
