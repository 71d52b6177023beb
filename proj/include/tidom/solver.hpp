#ifndef TIDOM_SOLVER_HPP
#define TIDOM_SOLVER_HPP

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tidom/digraph.hpp"
#include "tidom/labeling.hpp"

namespace tidom {

enum class Parameter {
    gamma,      ///< domination number
    gamma_t,    ///< total domination number
    gamma_r,    ///< Roman domination number
    gamma_i,    ///< Italian domination number
    gamma_tr,   ///< total Roman domination number
    gamma_ti,   ///< total Italian domination number
    gamma_2t,   ///< total 2-domination number
    rho,        ///< packing number (maximized)
};

inline constexpr Parameter kAllParameters[] = {Parameter::gamma,    Parameter::gamma_t,  Parameter::gamma_r,
                                               Parameter::gamma_i,  Parameter::gamma_tr, Parameter::gamma_ti,
                                               Parameter::gamma_2t, Parameter::rho};

std::string_view to_string(Parameter p);
/// Case-insensitive; accepts "gamma_tI", "gamma_ti", "rho", ... Empty optional if unknown.
std::optional<Parameter> parse_parameter(std::string_view name);

constexpr bool is_function_parameter(Parameter p) {
    return p == Parameter::gamma_r || p == Parameter::gamma_i || p == Parameter::gamma_tr || p == Parameter::gamma_ti;
}

constexpr bool is_total_parameter(Parameter p) {
    return p == Parameter::gamma_t || p == Parameter::gamma_tr || p == Parameter::gamma_ti || p == Parameter::gamma_2t;
}

/// Variant whose minimum defines p; rho (a packing objective) has none.
std::optional<Variant> variant_of(Parameter p);

using Witness = std::variant<Labeling, VertexSet>;

struct SolveResult {
    int value = 0;
    Witness witness;
};

struct SolverConfig {
    std::size_t function_order_cap = 16;
    std::size_t set_order_cap = 20;
};

/// Weight of a labeling or cardinality of a set.
int witness_value(const Witness& w);

/// Validates w for p: the variant check, or the packing check for rho.
bool witness_feasible(const Digraph& d, const Witness& w, Parameter p);

/**
 * Exact optimum of p on d.
 *
 * Function parameters run a depth-first label search in vertex order with
 * branch-and-bound on accumulated weight; set parameters scan subsets by
 * cardinality (upward for minimization, downward for rho). The witness is the
 * lexicographically smallest optimum (label vector / membership vector).
 *
 * Throws InvalidArgument for an empty digraph, InfeasibleStructure for total
 * parameters on digraphs with isolated vertices, SizeLimitExceeded above the
 * configured order caps.
 */
SolveResult solve(const Digraph& d, Parameter p, const SolverConfig& config = {});

/// Every optimum of p, duplicate-free, in lexicographic order.
std::vector<Witness> enumerate_optima(const Digraph& d, Parameter p, const SolverConfig& config = {});

/// The gamma_tI-optima whose number of 0-labeled vertices is smallest.
std::vector<Labeling> min_v0_optima(const Digraph& d, const SolverConfig& config = {});

}  // namespace tidom

#endif
