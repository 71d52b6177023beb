#include "tidom/grid_dp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "tidom/digraph_io.hpp"
#include "tidom/error.hpp"

namespace tidom {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 2;
constexpr std::size_t kHardRowLimit = 10;  // 5^10 states per layer

// Per-row profile code: 0 -> label 0, 1 -> 1, 2 -> 1 pending, 3 -> 2, 4 -> 2 pending.
constexpr int code_label(int c) { return (c + 1) / 2; }
constexpr bool code_pending(int c) { return c == 2 || c == 4; }
constexpr int make_code(int label, bool pending) { return label == 0 ? 0 : 2 * label - 1 + (pending ? 1 : 0); }

bool italian_defended(int up, int left) { return up == 2 || left == 2 || (up >= 1 && left >= 1); }

class ProfileCodec {
   public:
    explicit ProfileCodec(std::size_t rows) : rows_(rows), pow5_(rows + 1, 1) {
        for (std::size_t s = 1; s <= rows; ++s) pow5_[s] = pow5_[s - 1] * 5;
    }

    std::size_t states() const { return pow5_[rows_]; }
    std::size_t weight(std::size_t s) const { return pow5_[s]; }
    int digit(std::size_t index, std::size_t s) const { return static_cast<int>((index / pow5_[s]) % 5); }

    ColumnState decode(std::size_t index) const {
        ColumnState st{std::vector<std::uint8_t>(rows_, 0), 0};
        for (std::size_t s = 0; s < rows_; ++s) {
            const int c = digit(index, s);
            st.labels[s] = static_cast<std::uint8_t>(code_label(c));
            if (code_pending(c)) st.pending |= 1u << s;
        }
        return st;
    }

    bool any_pending(std::size_t index) const {
        for (std::size_t s = 0; s < rows_; ++s) {
            if (code_pending(digit(index, s))) return true;
        }
        return false;
    }

   private:
    std::size_t rows_;
    std::vector<std::size_t> pow5_;
};

// One cell step: place row s of the current column over the frontier `cur`.
void place_cell(const ProfileCodec& codec, std::size_t s, const std::vector<int>& cur, std::vector<int>& next) {
    std::fill(next.begin(), next.end(), kUnreachable);
    const std::size_t w = codec.weight(s);
    const std::size_t w_up = s > 0 ? codec.weight(s - 1) : 0;
    for (std::size_t index = 0; index < cur.size(); ++index) {
        const int value = cur[index];
        if (value >= kUnreachable) continue;
        const int left_code = codec.digit(index, s);
        const int up_code = s > 0 ? codec.digit(index, s - 1) : 0;
        const int left = code_label(left_code);
        const int up = code_label(up_code);
        const std::size_t base = index - static_cast<std::size_t>(left_code) * w;

        // Label 0: the left cell leaves the frontier for good, so it must not be pending.
        if (!code_pending(left_code) && italian_defended(up, left)) {
            next[base] = std::min(next[base], value);
        }
        for (int x = 1; x <= 2; ++x) {
            const bool pending = up == 0 && left == 0;
            std::size_t target = base + static_cast<std::size_t>(make_code(x, pending)) * w;
            if (code_pending(up_code)) target -= w_up;  // positive below resolves the cell above
            next[target] = std::min(next[target], value + x);
        }
    }
}

bool lex_less_labels(const ColumnState& a, const ColumnState& b) {
    if (a.labels != b.labels) return a.labels < b.labels;
    return a.pending < b.pending;
}

int label_sum(const std::vector<std::uint8_t>& labels) {
    int sum = 0;
    for (auto x : labels) sum += x;
    return sum;
}

}  // namespace

std::optional<ColumnState> advance_column(const ColumnState& from, std::span<const std::uint8_t> next) {
    const std::size_t rows = from.labels.size();
    if (next.size() != rows) throw InvalidArgument("column sizes differ");
    if (rows > 32) throw InvalidArgument("at most 32 rows are supported");
    for (std::size_t s = 0; s < rows; ++s) {
        if (next[s] > 2 || from.labels[s] > 2) throw InvalidArgument("label outside {0,1,2}");
        if ((from.pending >> s & 1u) && from.labels[s] == 0) throw InvalidArgument("pending row with label 0");
    }
    if (rows < 32 && (from.pending >> rows) != 0) throw InvalidArgument("pending row outside the column");

    ColumnState out{std::vector<std::uint8_t>(next.begin(), next.end()), 0};
    for (std::size_t s = 0; s < rows; ++s) {
        const int up = s > 0 ? next[s - 1] : 0;
        const int left = from.labels[s];
        if (next[s] == 0) {
            if ((from.pending >> s & 1u) || !italian_defended(up, left)) return std::nullopt;
            continue;
        }
        const bool below = s + 1 < rows && next[s + 1] >= 1;
        if (up == 0 && left == 0 && !below) out.pending |= 1u << s;
    }
    return out;
}

GridValue gamma_ti_grid(std::size_t rows, std::size_t columns, bool want_witness, const GridConfig& config) {
    if (rows == 0 || columns == 0) throw InvalidArgument("grid dimensions must be positive");
    if (rows == 1 && columns == 1) throw InfeasibleStructure("P_1 x P_1 is a single isolated vertex");
    if (config.max_rows > kHardRowLimit) {
        throw InvalidArgument("row cap above " + std::to_string(kHardRowLimit) + " is unsupported");
    }
    if (rows > config.max_rows) {
        throw SizeLimitExceeded("grid rows " + std::to_string(rows) + " exceed the cap " +
                                std::to_string(config.max_rows));
    }

    const ProfileCodec codec(rows);
    std::vector<int> layer(codec.states(), kUnreachable);
    std::vector<int> scratch(codec.states(), kUnreachable);
    layer[0] = 0;  // the all-zero virtual column

    std::vector<std::vector<int>> boundaries;
    if (want_witness) boundaries.push_back(layer);
    for (std::size_t t = 0; t < columns; ++t) {
        for (std::size_t s = 0; s < rows; ++s) {
            place_cell(codec, s, layer, scratch);
            layer.swap(scratch);
        }
        if (want_witness) boundaries.push_back(layer);
    }

    GridValue result{rows, columns, kUnreachable, std::nullopt};
    std::optional<ColumnState> last;
    for (std::size_t index = 0; index < layer.size(); ++index) {
        if (layer[index] >= kUnreachable || codec.any_pending(index)) continue;
        if (layer[index] < result.value) {
            result.value = layer[index];
            last.reset();
        }
        if (want_witness && layer[index] == result.value) {
            ColumnState st = codec.decode(index);
            if (!last || lex_less_labels(st, *last)) last = std::move(st);
        }
    }
    if (result.value >= kUnreachable) throw InfeasibleStructure("grid admits no total Italian dominating function");
    if (!want_witness) return result;

    // Backtrack column by column through the stored boundary layers.
    std::vector<std::vector<std::uint8_t>> column_labels(columns);
    ColumnState target = *last;
    int target_value = result.value;
    for (std::size_t t = columns; t-- > 0;) {
        column_labels[t] = target.labels;
        const int step = label_sum(target.labels);
        const auto& prev = boundaries[t];
        std::optional<ColumnState> chosen;
        int chosen_value = 0;
        for (std::size_t index = 0; index < prev.size(); ++index) {
            if (prev[index] >= kUnreachable || prev[index] + step != target_value) continue;
            ColumnState candidate = codec.decode(index);
            const auto reached = advance_column(candidate, target.labels);
            if (!reached || *reached != target) continue;
            if (!chosen || lex_less_labels(candidate, *chosen)) {
                chosen = std::move(candidate);
                chosen_value = prev[index];
            }
        }
        if (!chosen) throw std::logic_error("grid witness backtracking lost the optimal path");
        target = std::move(*chosen);
        target_value = chosen_value;
    }

    std::vector<int> labels(rows * columns, 0);
    for (std::size_t s = 0; s < rows; ++s) {
        for (std::size_t t = 0; t < columns; ++t) labels[product_vertex(s, t, columns)] = column_labels[t][s];
    }
    result.witness = Labeling(labels);
    return result;
}

int closed_form_p2(std::size_t n) {
    if (n < 2) throw InvalidArgument("closed form for 2 x n needs n >= 2");
    return static_cast<int>((3 * n + 1) / 2);
}

int closed_form_p3(std::size_t n) {
    if (n < 2) throw InvalidArgument("closed form for 3 x n needs n >= 2");
    if (n % 4 == 0) return static_cast<int>(9 * n / 4 + 1);
    return static_cast<int>((9 * n + 3) / 4);
}

Labeling explicit_witness(std::size_t rows, std::size_t n) {
    if (n < 2) throw InvalidArgument("explicit witness needs n >= 2");
    if (rows != 2 && rows != 3) throw InvalidArgument("explicit witness exists for 2 or 3 rows only");
    Labeling h = Labeling::constant(rows * n, 1);
    auto zero = [&](std::size_t s, std::size_t t) { h.set(product_vertex(s, t, n), 0); };

    if (rows == 2) {
        for (std::size_t t = 1; t < n; t += 2) zero(1, t);
        return h;
    }
    const std::size_t q = n / 4;
    const std::size_t r = n % 4;
    const std::size_t first_two = r == 3 ? q + 1 : q;     // periods with (1,4c+1) and (2,4c+2)
    const std::size_t third = r == 0 ? (q == 0 ? 0 : q - 1) : q;  // periods with (1,4c+3)
    for (std::size_t c = 0; c < first_two; ++c) {
        zero(1, 4 * c + 1);
        zero(2, 4 * c + 2);
    }
    for (std::size_t c = 0; c < third; ++c) zero(1, 4 * c + 3);
    if (r == 2) zero(2, n - 1);
    return h;
}

Report check_grid_lemmas(std::size_t rows, std::size_t n, const SolverConfig& config) {
    if (rows != 2 && rows != 3) throw InvalidArgument("grid structure checks exist for 2 or 3 rows only");
    if (n < 2) throw InvalidArgument("grid structure checks need n >= 2");

    const Digraph grid = cartesian_product(make_dipath(rows), make_dipath(n));
    const std::vector<Labeling> optima = min_v0_optima(grid, config);
    const std::string input = std::to_string(rows) + "x" + std::to_string(n);

    auto g = [&](const Labeling& f, std::size_t s, std::size_t t) { return f[product_vertex(s, t, n)]; };
    auto column_sum = [&](const Labeling& f, std::size_t t) {
        int sum = 0;
        for (std::size_t s = 0; s < rows; ++s) sum += g(f, s, t);
        return sum;
    };

    Report report;
    report.metadata()["rows"] = rows;
    report.metadata()["columns"] = n;
    report.metadata()["optima_checked"] = optima.size();

    auto check = [&](const std::string& name, bool applicable, auto&& holds) {
        Record rec{name, input, nlohmann::json::object(), Status::pass, std::nullopt};
        rec.values["optima"] = optima.size();
        if (!applicable) {
            rec.status = Status::skip;
        } else {
            for (const Labeling& f : optima) {
                if (!holds(f)) {
                    rec.status = Status::fail;
                    rec.counterexample = format_counterexample(grid, f);
                    break;
                }
            }
        }
        report.add(std::move(rec));
    };

    if (rows == 2) {
        check("first_column_ones", true, [&](const Labeling& f) { return g(f, 0, 0) == 1 && g(f, 1, 0) == 1; });
        check("columns_nonempty", true, [&](const Labeling& f) {
            for (std::size_t t = 1; t < n; ++t) {
                if (column_sum(f, t) < 1) return false;
            }
            return true;
        });
        check("adjacent_columns_ge_3", true, [&](const Labeling& f) {
            for (std::size_t t = 0; t + 1 < n; ++t) {
                if (column_sum(f, t) + column_sum(f, t + 1) < 3) return false;
            }
            return true;
        });
        return report;
    }

    check("two_forces_zeros", true, [&](const Labeling& f) {
        for (std::size_t s = 0; s <= 1; ++s) {
            for (std::size_t t = 0; t + 2 <= n; ++t) {
                if (g(f, s, t) == 2 && (g(f, s + 1, t) != 0 || g(f, s, t + 1) != 0)) return false;
            }
        }
        return true;
    });
    check("first_column_shape", n >= 3,
          [&](const Labeling& f) { return g(f, 0, 0) == 1 && g(f, 1, 0) + g(f, 2, 0) == 2; });
    check("row_pairs_nonempty", n >= 3, [&](const Labeling& f) {
        for (std::size_t t = 1; t < n; ++t) {
            if (g(f, 0, t) + g(f, 1, t) < 1 || g(f, 1, t) + g(f, 2, t) < 1) return false;
        }
        return true;
    });
    check("columns_ge_2", n >= 3, [&](const Labeling& f) {
        for (std::size_t t = 1; t < n; ++t) {
            if (column_sum(f, t) < 2) return false;
        }
        return true;
    });
    check("four_columns_ge_9", n >= 4, [&](const Labeling& f) {
        for (std::size_t t = 0; t + 3 < n; ++t) {
            if (column_sum(f, t) + column_sum(f, t + 1) + column_sum(f, t + 2) + column_sum(f, t + 3) < 9) return false;
        }
        return true;
    });
    return report;
}

}  // namespace tidom
