#ifndef TIDOM_PROPERTIES_HPP
#define TIDOM_PROPERTIES_HPP

#include <cstdint>
#include <string>

#include "tidom/digraph.hpp"
#include "tidom/report.hpp"
#include "tidom/solver.hpp"

namespace tidom {

/**
 * Seeded random digraph. A std::mt19937_64 engine seeded with `seed` (its
 * output sequence is fixed by the C++ standard) is drawn once per ordered pair
 * (u, v), u != v, in row-major order; the arc is kept iff the top 53 bits of
 * the draw, scaled to [0, 1), are below p. Same (n, p, seed) gives the same
 * digraph on every conforming platform.
 */
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

/**
 * Relations between domination parameters on a digraph without isolated
 * vertices, evaluated by exact search. Records, in order:
 *
 *   parameter_chain              gamma <= gamma_I <= gamma_R <= gamma_tR,
 *                                gamma_I <= gamma_tI <= gamma_tR,
 *                                gamma_t <= gamma_tI, gamma_tR <= 3 gamma
 *   equal_totals_forbid_twos     gamma_t = gamma_tI  =>  no gamma_tI-optimum uses label 2
 *   two_free_optimum_total_2     some gamma_tI-optimum avoids 2  =>  gamma_tI = gamma_2t
 *   equal_totals_total_2         gamma_t = gamma_tI  =>  gamma_t = gamma_2t
 *   triple_gamma_strong_packing  gamma_tI = 3 gamma  =>  every gamma-set is a strong packing
 *
 * Only these forward implications are asserted; a false premise passes and
 * records "premise": false.
 *
 * Throws InfeasibleStructure on isolated vertices and SizeLimitExceeded above
 * the solver caps.
 */
Report check_parameter_relations(const Digraph& d, const std::string& input, const SolverConfig& config = {});

}  // namespace tidom

#endif
