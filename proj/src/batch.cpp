#include "tidom/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "tidom/digraph_io.hpp"
#include "tidom/error.hpp"
#include "tidom/properties.hpp"

namespace tidom {

namespace {

Digraph load_digraph(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(0, "cannot open " + file);
    return parse_digraph(in);
}

nlohmann::json witness_json(const Witness& w) {
    if (const auto* f = std::get_if<Labeling>(&w)) return f->values();
    return std::get<VertexSet>(w).members();
}

std::string grid_name(std::size_t rows, std::size_t columns) {
    return std::to_string(rows) + "x" + std::to_string(columns);
}

std::optional<int> closed_form(std::size_t rows, std::size_t n) {
    if (n < 2) return std::nullopt;
    if (rows == 2) return closed_form_p2(n);
    if (rows == 3) return closed_form_p3(n);
    return std::nullopt;
}

Digraph grid_digraph(std::size_t rows, std::size_t columns) {
    return cartesian_product(make_dipath(rows), make_dipath(columns));
}

class BatchRunner {
   public:
    BatchRunner(const BatchConfig& config, Report& report) : config_(config), report_(report) {}

    void operator()(const SolveRequest& r) {
        const Digraph d = load_digraph(r.file);
        const SolveResult res = solve(d, r.parameter, config_.solver);
        Record rec{"solve", r.file, nlohmann::json::object(), Status::pass, std::nullopt};
        rec.values = {{"parameter", std::string(to_string(r.parameter))},
                      {"value", res.value},
                      {"witness", witness_json(res.witness)}};
        if (!witness_feasible(d, res.witness, r.parameter) || witness_value(res.witness) != res.value) {
            rec.status = Status::fail;
            rec.counterexample = format_counterexample(d, res.witness);
        }
        report_.add(std::move(rec));
    }

    void operator()(const GridRequest& r) {
        const GridValue g = gamma_ti_grid(r.rows, r.columns, r.witness, config_.grid);
        Record rec{"grid", grid_name(r.rows, r.columns), nlohmann::json::object(), Status::pass, std::nullopt};
        rec.values = {{"k", r.rows}, {"n", r.columns}, {"value", g.value}};
        if (g.witness) {
            rec.values["witness"] = grid_matrix(*g.witness, r.rows, r.columns);
            const Digraph d = grid_digraph(r.rows, r.columns);
            if (!validate(d, *g.witness, Variant::total_italian) || weight(*g.witness) != g.value) {
                rec.status = Status::fail;
                rec.counterexample = format_counterexample(d, *g.witness);
            }
        }
        report_.add(std::move(rec));
    }

    void operator()(const GridSweepRequest& r) {
        if (r.n_min == 0 || r.n_max < r.n_min) throw InvalidArgument("grid sweep needs 1 <= n_min <= n_max");
        for (std::size_t n = r.n_min; n <= r.n_max; ++n) {
            Record rec{"grid_sweep", grid_name(r.rows, n), nlohmann::json::object(), Status::pass, std::nullopt};
            rec.values = {{"k", r.rows}, {"n", n}};
            if (r.rows == 1 && n == 1) {
                rec.status = Status::skip;
                rec.values["dp"] = nullptr;
                report_.add(std::move(rec));
                continue;
            }
            const int dp = gamma_ti_grid(r.rows, n, false, config_.grid).value;
            rec.values["dp"] = dp;
            const auto formula = closed_form(r.rows, n);
            rec.values["closed_form"] = formula ? nlohmann::json(*formula) : nlohmann::json(nullptr);
            rec.values["match"] = formula ? nlohmann::json(*formula == dp) : nlohmann::json(nullptr);
            if (formula && *formula != dp) {
                rec.status = Status::fail;
                const GridValue g = gamma_ti_grid(r.rows, n, true, config_.grid);
                rec.counterexample = format_counterexample(grid_digraph(r.rows, n), *g.witness);
            }
            report_.add(std::move(rec));
        }
    }

    void operator()(const FormulaRequest& r) {
        if (r.rows != 2 && r.rows != 3) throw InvalidArgument("formula family must be p2 or p3");
        Record rec{"formula", "p" + std::to_string(r.rows) + " n=" + std::to_string(r.n), nlohmann::json::object(),
                   Status::pass, std::nullopt};
        const int value = r.rows == 2 ? closed_form_p2(r.n) : closed_form_p3(r.n);
        rec.values = {{"family", "p" + std::to_string(r.rows)}, {"n", r.n}, {"value", value}};
        report_.add(std::move(rec));
    }

    void operator()(const WitnessRequest& r) {
        const Labeling h = explicit_witness(r.rows, r.n);
        const Digraph d = grid_digraph(r.rows, r.n);
        const int formula = r.rows == 2 ? closed_form_p2(r.n) : closed_form_p3(r.n);
        Record rec{"witness", grid_name(r.rows, r.n), nlohmann::json::object(), Status::pass, std::nullopt};
        const bool valid = validate(d, h, Variant::total_italian);
        rec.values = {{"k", r.rows},         {"n", r.n},         {"weight", weight(h)},
                      {"closed_form", formula}, {"valid", valid}, {"matrix", grid_matrix(h, r.rows, r.n)}};
        if (!valid || weight(h) != formula) {
            rec.status = Status::fail;
            rec.counterexample = format_counterexample(d, h);
        }
        report_.add(std::move(rec));
    }

    void operator()(const TreeRequest& r) {
        report_.append(verify_total_equality_trees(r.n_max, config_.trees));
        report_.append(verify_star_extremal_trees(r.n_max, config_.trees));
    }

    void operator()(const PropsFileRequest& r) {
        report_.append(check_parameter_relations(load_digraph(r.file), r.file, config_.solver));
    }

    void operator()(const PropsRandomRequest& r) {
        report_.metadata()["seed"] = r.seed;
        report_.metadata()["count"] = r.count;
        report_.metadata()["n"] = r.n;
        report_.metadata()["p"] = r.p;
        random_digraph(r.n, r.p, r.seed);  // validates arguments before spawning workers

        auto one = [&](std::size_t i) {
            const std::uint64_t seed = r.seed + i;
            std::ostringstream input;
            input << "random n=" << r.n << " p=" << r.p << " seed=" << seed;
            const Digraph d = random_digraph(r.n, r.p, seed);
            if (d.has_isolated_vertex()) {
                Report skipped;
                Record rec{"parameter_relations", input.str(), nlohmann::json::object(), Status::skip, std::nullopt};
                rec.values["reason"] = "isolated vertex";
                skipped.add(std::move(rec));
                return skipped;
            }
            return check_parameter_relations(d, input.str(), config_.solver);
        };

        // Workers fill slots in any order; records are emitted strictly in sweep order.
        std::vector<std::promise<Report>> slots(r.count);
        std::vector<std::future<Report>> results;
        results.reserve(r.count);
        for (auto& s : slots) results.push_back(s.get_future());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < r.count; i = next++) {
                try {
                    slots[i].set_value(one(i));
                } catch (...) {
                    slots[i].set_exception(std::current_exception());
                }
            }
        };
        unsigned threads = config_.threads ? config_.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(r.count, 1)));
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& f : results) report_.append(f.get());
    }

    void operator()(const LemmaRequest& r) {
        const Report lemmas = check_grid_lemmas(r.rows, r.n, config_.solver);
        for (const auto& [key, value] : lemmas.metadata().items()) report_.metadata()[key] = value;
        report_.append(lemmas);
    }

   private:
    const BatchConfig& config_;
    Report& report_;
};

}  // namespace

nlohmann::json grid_matrix(const Labeling& f, std::size_t rows, std::size_t columns) {
    if (f.size() != rows * columns) throw InvalidArgument("labeling size does not match grid shape");
    nlohmann::json m = nlohmann::json::array();
    for (std::size_t s = 0; s < rows; ++s) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t t = 0; t < columns; ++t) row.push_back(f[product_vertex(s, t, columns)]);
        m.push_back(std::move(row));
    }
    return m;
}

Report run_batch(const BatchRequest& request, const BatchConfig& config, Report::Sink sink) {
    Report report;
    report.set_sink(std::move(sink));
    report.metadata()["function_order_cap"] = config.solver.function_order_cap;
    report.metadata()["set_order_cap"] = config.solver.set_order_cap;
    report.metadata()["grid_max_rows"] = config.grid.max_rows;
    report.metadata()["tree_max_order"] = config.trees.max_order;
    std::visit(BatchRunner(config, report), request);
    return report;
}

std::string grid_sweep_csv(const Report& report) {
    auto cell = [](const nlohmann::json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        return v.dump();
    };
    std::ostringstream out;
    out << "k,n,dp,closed_form,match\n";
    for (const Record& r : report.records()) {
        if (r.check != "grid_sweep") continue;
        const auto& v = r.values;
        out << cell(v.value("k", nlohmann::json())) << ',' << cell(v.value("n", nlohmann::json())) << ','
            << cell(v.value("dp", nlohmann::json())) << ',' << cell(v.value("closed_form", nlohmann::json())) << ','
            << cell(v.value("match", nlohmann::json())) << '\n';
    }
    return out.str();
}

}  // namespace tidom
