#ifndef TIDOM_ROOTED_TREES_HPP
#define TIDOM_ROOTED_TREES_HPP

#include <optional>
#include <string>
#include <vector>

#include "tidom/digraph.hpp"
#include "tidom/report.hpp"
#include "tidom/solver.hpp"

namespace tidom {

/// Canonical representative of a root-preserving isomorphism class of rooted trees.
struct RootedTreeCode {
    /// Preorder parent vector: vertex 0 is the root, children visited in canonical order.
    std::vector<std::optional<Vertex>> parents;
    /// Nested-parenthesis code, e.g. "(()())" for the 3-vertex out-star.
    std::string canonical;

    Digraph digraph() const { return make_rooted_tree(parents); }
};

struct TreeConfig {
    std::size_t max_order = 10;
    SolverConfig solver;
};

/// Canonical nested-parenthesis code of the rooted tree given by parents.
/// Children codes are sorted, so isomorphic trees get equal codes.
std::string canonical_code(const std::vector<std::optional<Vertex>>& parents);

/// One representative per isomorphism class on n vertices, sorted by canonical code.
std::vector<RootedTreeCode> enumerate_rooted_trees(std::size_t n, const TreeConfig& config = {});

/// True iff the root is adjacent to every other vertex.
bool is_out_star(const Digraph& tree);

/**
 * For every rooted tree on 2..n_max vertices: gamma_t == gamma_tI must hold
 * exactly when n = 2. One record per order with the tree count and the number
 * of equality cases.
 */
Report verify_total_equality_trees(std::size_t n_max, const TreeConfig& config = {});

/**
 * For every rooted tree on 3..n_max vertices: gamma_tI == 3 gamma must hold
 * exactly for the out-star. One record per order.
 */
Report verify_star_extremal_trees(std::size_t n_max, const TreeConfig& config = {});

}  // namespace tidom

#endif
