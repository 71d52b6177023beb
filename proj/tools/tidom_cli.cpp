// tidom: command-line front end for the exact solvers and verification sweeps.
//
// Every subcommand prints one JSON record per line followed by a summary line
// (grid-sweep --csv prints a CSV table instead).
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
// 3 size limit exceeded.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tidom/batch.hpp"
#include "tidom/error.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

std::size_t family_rows(const std::string& family) {
    if (family == "p2") return 2;
    if (family == "p3") return 3;
    throw tidom::InvalidArgument("family must be p2 or p3, got \"" + family + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact total Italian domination solvers and verification harness"};
    app.require_subcommand(1);

    tidom::BatchConfig config;
    bool timing = false;
    app.add_option("--function-cap", config.solver.function_order_cap, "Order cap for labeling parameters")
        ->capture_default_str();
    app.add_option("--set-cap", config.solver.set_order_cap, "Order cap for set parameters")->capture_default_str();
    app.add_option("--grid-cap", config.grid.max_rows, "Row cap for the grid dynamic program")->capture_default_str();
    app.add_option("--tree-cap", config.trees.max_order, "Order cap for rooted-tree enumeration")
        ->capture_default_str();
    app.add_option("--threads", config.threads, "Worker threads for random sweeps (0 = all cores)");
    app.add_flag("--timing", timing, "Add wall-clock time to the summary metadata");

    tidom::BatchRequest request;
    bool csv = false;

    std::string solve_file;
    std::string solve_param;
    auto* solve = app.add_subcommand("solve", "Exact optimum and witness of a parameter on a digraph file");
    solve->add_option("file", solve_file)->required();
    solve->add_option("parameter", solve_param, "gamma, gamma_t, gamma_R, gamma_I, gamma_tR, gamma_tI, gamma_2t, rho")
        ->required();

    tidom::GridRequest grid_req;
    auto* grid = app.add_subcommand("grid", "Total Italian domination number of P_k x P_n");
    grid->add_option("k", grid_req.rows)->required();
    grid->add_option("n", grid_req.columns)->required();
    grid->add_flag("--witness", grid_req.witness, "Also print an optimal labeling as a k x n matrix");

    tidom::GridSweepRequest sweep_req;
    auto* sweep = app.add_subcommand("grid-sweep", "Grid values for n in [n_min, n_max], with closed forms for k = 2, 3");
    sweep->add_option("k", sweep_req.rows)->required();
    sweep->add_option("n_min", sweep_req.n_min)->required();
    sweep->add_option("n_max", sweep_req.n_max)->required();
    sweep->add_flag("--csv", csv, "Print k,n,dp,closed_form,match as CSV");

    std::string formula_family;
    tidom::FormulaRequest formula_req;
    auto* formula = app.add_subcommand("formula", "Closed-form value for 2 x n (p2) or 3 x n (p3)");
    formula->add_option("family", formula_family)->required();
    formula->add_option("n", formula_req.n)->required();

    std::string witness_family;
    tidom::WitnessRequest witness_req;
    auto* witness = app.add_subcommand("witness", "Explicit extremal labeling for 2 x n (p2) or 3 x n (p3)");
    witness->add_option("family", witness_family)->required();
    witness->add_option("n", witness_req.n)->required();

    tidom::TreeRequest tree_req;
    auto* trees = app.add_subcommand("verify-trees", "Rooted-tree equality characterizations up to n_max vertices");
    trees->add_option("n_max", tree_req.n_max)->required();

    std::string props_file;
    std::vector<std::string> random_args;
    auto* props = app.add_subcommand("check-props", "Parameter relations on a digraph file or a random sweep");
    auto* props_file_opt = props->add_option("file", props_file);
    auto* random_opt = props->add_option("--random", random_args, "count n p seed")->expected(4);
    props_file_opt->excludes(random_opt);

    tidom::LemmaRequest lemma_req;
    auto* lemmas = app.add_subcommand("check-lemmas", "Column structure of fewest-zero optima on 2 x n or 3 x n grids");
    lemmas->add_option("k", lemma_req.rows)->required();
    lemmas->add_option("n", lemma_req.n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve) {
            const auto p = tidom::parse_parameter(solve_param);
            if (!p) throw tidom::InvalidArgument("unknown parameter \"" + solve_param + "\"");
            request = tidom::SolveRequest{solve_file, *p};
        } else if (*grid) {
            request = grid_req;
        } else if (*sweep) {
            request = sweep_req;
        } else if (*formula) {
            formula_req.rows = family_rows(formula_family);
            request = formula_req;
        } else if (*witness) {
            witness_req.rows = family_rows(witness_family);
            request = witness_req;
        } else if (*trees) {
            request = tree_req;
        } else if (*props) {
            if (!random_args.empty()) {
                tidom::PropsRandomRequest r;
                r.count = std::stoull(random_args[0]);
                r.n = std::stoull(random_args[1]);
                r.p = std::stod(random_args[2]);
                r.seed = std::stoull(random_args[3]);
                request = r;
            } else if (!props_file.empty()) {
                request = tidom::PropsFileRequest{props_file};
            } else {
                throw tidom::InvalidArgument("check-props needs a file or --random count n p seed");
            }
        } else if (*lemmas) {
            request = lemma_req;
        }

        tidom::Report::Sink sink;
        if (!csv) {
            sink = [](const tidom::Record& r) { std::cout << tidom::to_json(r).dump() << '\n' << std::flush; };
        }
        const auto start = std::chrono::steady_clock::now();
        tidom::Report report = tidom::run_batch(request, config, sink);
        if (timing) {
            const auto elapsed = std::chrono::steady_clock::now() - start;
            report.metadata()["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        if (csv) {
            std::cout << tidom::grid_sweep_csv(report);
        } else {
            std::cout << tidom::summary_json(report).dump() << '\n';
        }
        return report.passed() ? 0 : kExitFail;
    } catch (const tidom::SizeLimitExceeded& e) {
        std::cerr << "size limit exceeded: " << e.what() << '\n';
        return kExitSize;
    } catch (const tidom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const tidom::InfeasibleStructure& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {  // tidom::InvalidArgument and std::stoull/stod
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    }
}
