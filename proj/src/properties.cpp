#include "tidom/properties.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tidom/digraph_io.hpp"
#include "tidom/error.hpp"

namespace tidom {

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("random digraph needs at least one vertex");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("arc probability must lie in [0, 1]");
    std::mt19937_64 engine(seed);
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            const double draw = static_cast<double>(engine() >> 11) * kScale;
            if (draw < p) arcs.push_back({u, v});
        }
    }
    return Digraph(n, std::move(arcs));
}

Report check_parameter_relations(const Digraph& d, const std::string& input, const SolverConfig& config) {
    if (d.has_isolated_vertex()) {
        throw InfeasibleStructure("parameter relations need a digraph without isolated vertices");
    }
    std::map<Parameter, SolveResult> solved;
    for (Parameter p : kAllParameters) solved.emplace(p, solve(d, p, config));
    auto val = [&](Parameter p) { return solved.at(p).value; };

    const int g = val(Parameter::gamma);
    const int gt = val(Parameter::gamma_t);
    const int gr = val(Parameter::gamma_r);
    const int gi = val(Parameter::gamma_i);
    const int gtr = val(Parameter::gamma_tr);
    const int gti = val(Parameter::gamma_ti);
    const int g2t = val(Parameter::gamma_2t);

    nlohmann::json values = nlohmann::json::object();
    for (Parameter p : kAllParameters) values[std::string(to_string(p))] = val(p);

    Report report;
    report.metadata()["order"] = d.order();
    report.metadata()["size"] = d.size();

    auto make = [&](std::string check) {
        return Record{std::move(check), input, nlohmann::json::object(), Status::pass, std::nullopt};
    };
    auto fail_with = [&](Record& rec, const Witness& w) {
        rec.status = Status::fail;
        rec.counterexample = format_counterexample(d, w);
    };

    {
        Record rec = make("parameter_chain");
        rec.values = values;
        const bool chain = g <= gi && gi <= gr && gr <= gtr && gi <= gti && gti <= gtr && gt <= gti && gtr <= 3 * g;
        if (!chain) fail_with(rec, solved.at(Parameter::gamma_ti).witness);
        report.add(std::move(rec));
    }

    std::vector<Labeling> ti_optima;
    for (auto& w : enumerate_optima(d, Parameter::gamma_ti, config)) ti_optima.push_back(std::get<Labeling>(std::move(w)));
    auto uses_two = [](const Labeling& f) { return !level_set(f, 2).empty(); };

    {
        Record rec = make("equal_totals_forbid_twos");
        const bool premise = gt == gti;
        rec.values = {{"premise", premise}, {"gamma_t", gt}, {"gamma_tI", gti}, {"optima", ti_optima.size()}};
        if (premise) {
            for (const auto& f : ti_optima) {
                if (uses_two(f)) {
                    fail_with(rec, f);
                    break;
                }
            }
        }
        report.add(std::move(rec));
    }
    {
        Record rec = make("two_free_optimum_total_2");
        const auto free_it = std::find_if(ti_optima.begin(), ti_optima.end(), [&](const Labeling& f) { return !uses_two(f); });
        const bool premise = free_it != ti_optima.end();
        rec.values = {{"premise", premise}, {"gamma_tI", gti}, {"gamma_2t", g2t}};
        if (premise && gti != g2t) fail_with(rec, *free_it);
        report.add(std::move(rec));
    }
    {
        Record rec = make("equal_totals_total_2");
        const bool premise = gt == gti;
        rec.values = {{"premise", premise}, {"gamma_t", gt}, {"gamma_tI", gti}, {"gamma_2t", g2t}};
        if (premise && gt != g2t) fail_with(rec, solved.at(Parameter::gamma_2t).witness);
        report.add(std::move(rec));
    }
    {
        Record rec = make("triple_gamma_strong_packing");
        const bool premise = gti == 3 * g;
        rec.values = {{"premise", premise}, {"gamma", g}, {"gamma_tI", gti}};
        if (premise) {
            const auto gamma_sets = enumerate_optima(d, Parameter::gamma, config);
            rec.values["gamma_sets"] = gamma_sets.size();
            for (const auto& w : gamma_sets) {
                if (!is_packing(d, std::get<VertexSet>(w), PackingKind::strong)) {
                    fail_with(rec, w);
                    break;
                }
            }
        }
        report.add(std::move(rec));
    }
    return report;
}

}  // namespace tidom
