#ifndef TIDOM_GRID_DP_HPP
#define TIDOM_GRID_DP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tidom/labeling.hpp"
#include "tidom/report.hpp"
#include "tidom/solver.hpp"

namespace tidom {

/*
 * Grid conventions. P_k x P_n has k rows and n columns; cell (s, t) is vertex
 * s * n + t. Arcs run down each column, (s, t) -> (s+1, t), and along each
 * row, (s, t) -> (s, t+1). The in-neighbors of (s, t) are therefore (s-1, t)
 * and (s, t-1).
 */

/**
 * Profile of one grid column: its k labels plus the rows whose label is
 * positive but which have no positive neighbor among cells placed so far.
 * Such a row can only be rescued by the cell to its right.
 */
struct ColumnState {
    std::vector<std::uint8_t> labels;
    std::uint32_t pending = 0;  ///< bit s set: row s still needs a positive neighbor

    /// The virtual column left of column 0: all zeros, nothing pending.
    static ColumnState before_grid(std::size_t rows) { return {std::vector<std::uint8_t>(rows, 0), 0}; }

    bool operator==(const ColumnState&) const = default;
};

/**
 * Place `next` as the column after `from`.
 *
 * Legal iff every 0 in `next` at row s is defended by its in-neighbors
 * (row s-1 of `next`, row s of `from`) under the Italian rule, and every
 * pending row of `from` is positive in `next`. Returns the new profile, or
 * nullopt if illegal.
 */
std::optional<ColumnState> advance_column(const ColumnState& from, std::span<const std::uint8_t> next);

struct GridValue {
    std::size_t rows = 0;
    std::size_t columns = 0;
    int value = 0;
    std::optional<Labeling> witness;
};

struct GridConfig {
    std::size_t max_rows = 8;
};

/**
 * Total Italian domination number of P_rows x P_columns by a broken-profile
 * dynamic program (one cell at a time, column-major). The state after each
 * full column is a ColumnState; per row it is encoded in base 5 as
 * {0, 1, 1-pending, 2, 2-pending}.
 *
 * The witness, when requested, is rebuilt backward from stored column layers:
 * the last column is the lexicographically smallest optimal accepting profile,
 * and each earlier column the lexicographically smallest legal predecessor.
 *
 * Throws InfeasibleStructure for the 1 x 1 grid, InvalidArgument for a zero
 * dimension, SizeLimitExceeded when rows exceed config.max_rows.
 */
GridValue gamma_ti_grid(std::size_t rows, std::size_t columns, bool want_witness, const GridConfig& config = {});

/// ceil(3n/2), n >= 2.
int closed_form_p2(std::size_t n);

/// 9n/4 + 1 when 4 | n, else ceil(9n/4); n >= 2.
int closed_form_p3(std::size_t n);

/**
 * The explicit extremal labelings for 2 x n and 3 x n grids: all ones except
 * a fixed periodic pattern of zeros.
 *
 * rows = 2: zeros at (1, t) for every odd t.
 * rows = 3: with q = n / 4, zeros at
 *   n % 4 == 0: (1,4c+1), (2,4c+2) for c < q;  (1,4c+3) for c < q-1
 *   n % 4 == 1: (1,4c+1), (2,4c+2), (1,4c+3) for c < q
 *   n % 4 == 2: (1,4c+1), (2,4c+2), (1,4c+3) for c < q;  and (2, n-1)
 *   n % 4 == 3: (1,4c+1), (2,4c+2) for c <= q; (1,4c+3) for c < q
 *
 * Throws InvalidArgument unless rows is 2 or 3 and n >= 2.
 */
Labeling explicit_witness(std::size_t rows, std::size_t n);

/**
 * Verifies the structural column facts that hold for every gamma_tI-optimum
 * of P_rows x P_n with the fewest zeros (found by exhaustive enumeration).
 *
 * rows = 2:
 *   first_column_ones        g(0,0) = g(1,0) = 1
 *   columns_nonempty         a_t >= 1 for t >= 1
 *   adjacent_columns_ge_3    a_t + a_{t+1} >= 3
 * rows = 3:
 *   two_forces_zeros         g(s,t) = 2 with s in {0,1}, t <= n-2 gives g(s+1,t) = g(s,t+1) = 0
 *   first_column_shape       g(0,0) = 1 and g(1,0) + g(2,0) = 2        (n >= 3)
 *   row_pairs_nonempty       g(0,t)+g(1,t) >= 1 and g(1,t)+g(2,t) >= 1 (n >= 3, t >= 1)
 *   columns_ge_2             a_t >= 2 for t >= 1                       (n >= 3)
 *   four_columns_ge_9        a_t + ... + a_{t+3} >= 9                  (n >= 4)
 * where a_t is the label sum of column t. Checks whose size precondition
 * fails are recorded as skipped.
 */
Report check_grid_lemmas(std::size_t rows, std::size_t n, const SolverConfig& config = {});

}  // namespace tidom

#endif
