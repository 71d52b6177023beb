#ifndef TIDOM_BATCH_HPP
#define TIDOM_BATCH_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "tidom/grid_dp.hpp"
#include "tidom/report.hpp"
#include "tidom/rooted_trees.hpp"
#include "tidom/solver.hpp"

namespace tidom {

struct SolveRequest {
    std::string file;
    Parameter parameter = Parameter::gamma_ti;
};

struct GridRequest {
    std::size_t rows = 2;
    std::size_t columns = 2;
    bool witness = false;
};

struct GridSweepRequest {
    std::size_t rows = 2;
    std::size_t n_min = 2;
    std::size_t n_max = 2;
};

/// rows is 2 or 3 ("p2" / "p3").
struct FormulaRequest {
    std::size_t rows = 2;
    std::size_t n = 2;
};

struct WitnessRequest {
    std::size_t rows = 2;
    std::size_t n = 2;
};

struct TreeRequest {
    std::size_t n_max = 2;
};

struct PropsFileRequest {
    std::string file;
};

/// Digraph i (0-based) of the sweep uses seed + i.
struct PropsRandomRequest {
    std::size_t count = 1;
    std::size_t n = 2;
    double p = 0.5;
    std::uint64_t seed = 0;
};

struct LemmaRequest {
    std::size_t rows = 2;
    std::size_t n = 2;
};

using BatchRequest = std::variant<SolveRequest, GridRequest, GridSweepRequest, FormulaRequest, WitnessRequest,
                                  TreeRequest, PropsFileRequest, PropsRandomRequest, LemmaRequest>;

struct BatchConfig {
    SolverConfig solver;
    GridConfig grid;
    TreeConfig trees;
    /// Worker threads for random sweeps; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/**
 * Runs one request and collects its records in declared sweep order. The sink
 * (if any) sees each record as soon as it and all earlier records are done.
 *
 * Errors from the underlying operations propagate unchanged (ParseError,
 * InvalidArgument, InfeasibleStructure, SizeLimitExceeded).
 */
Report run_batch(const BatchRequest& request, const BatchConfig& config = {}, Report::Sink sink = {});

/// Grid-sweep records as CSV with header "k,n,dp,closed_form,match".
std::string grid_sweep_csv(const Report& report);

/// rows x columns matrix of a grid labeling stored row-major.
nlohmann::json grid_matrix(const Labeling& f, std::size_t rows, std::size_t columns);

}  // namespace tidom

#endif
