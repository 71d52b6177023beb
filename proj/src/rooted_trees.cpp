#include "tidom/rooted_trees.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tidom/digraph_io.hpp"
#include "tidom/error.hpp"

namespace tidom {

namespace {

std::string code_of(Vertex v, const std::vector<std::vector<Vertex>>& children) {
    std::vector<std::string> parts;
    parts.reserve(children[v].size());
    for (Vertex c : children[v]) parts.push_back(code_of(c, children));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ')';
    return out;
}

// Preorder parent vector read off a nested-parenthesis code.
std::vector<std::optional<Vertex>> parents_from_code(const std::string& code) {
    std::vector<std::optional<Vertex>> parents;
    std::vector<Vertex> open;
    for (char ch : code) {
        if (ch == '(') {
            parents.push_back(open.empty() ? std::nullopt : std::optional<Vertex>(open.back()));
            open.push_back(parents.size() - 1);
        } else {
            open.pop_back();
        }
    }
    return parents;
}

void check_order(std::size_t n, const TreeConfig& config) {
    if (n == 0) throw InvalidArgument("rooted trees need at least one vertex");
    if (n > config.max_order) {
        throw SizeLimitExceeded("tree order " + std::to_string(n) + " exceeds the enumeration cap " +
                                std::to_string(config.max_order));
    }
}

template <typename Classify>
Report verify_over_trees(const std::string& check, std::size_t n_min, std::size_t n_max, const TreeConfig& config,
                         Classify&& classify) {
    if (n_max < n_min) throw InvalidArgument(check + " needs n_max >= " + std::to_string(n_min));
    check_order(n_max, config);
    Report report;
    report.metadata()["n_max"] = n_max;
    report.metadata()["max_order"] = config.max_order;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        Record rec{check, "rooted trees of order " + std::to_string(n), nlohmann::json::object(), Status::pass,
                   std::nullopt};
        std::size_t equal = 0;
        const auto trees = enumerate_rooted_trees(n, config);
        for (const auto& tree : trees) {
            const Digraph d = tree.digraph();
            const auto [holds, expected, witness] = classify(d);
            if (holds) ++equal;
            if (holds != expected && rec.status == Status::pass) {
                rec.status = Status::fail;
                rec.values["counterexample_tree"] = tree.canonical;
                rec.counterexample = format_counterexample(d, witness);
            }
        }
        rec.values["trees"] = trees.size();
        rec.values["equality_cases"] = equal;
        report.add(std::move(rec));
    }
    return report;
}

struct Outcome {
    bool holds;
    bool expected;
    Witness witness;
};

}  // namespace

std::string canonical_code(const std::vector<std::optional<Vertex>>& parents) {
    make_rooted_tree(parents);  // validates shape
    std::vector<std::vector<Vertex>> children(parents.size());
    Vertex root = 0;
    for (Vertex v = 0; v < parents.size(); ++v) {
        if (parents[v]) {
            children[*parents[v]].push_back(v);
        } else {
            root = v;
        }
    }
    return code_of(root, children);
}

std::vector<RootedTreeCode> enumerate_rooted_trees(std::size_t n, const TreeConfig& config) {
    check_order(n, config);
    // Grow by one leaf at a time and keep canonical codes only.
    std::set<std::string> level{"()"};
    for (std::size_t m = 2; m <= n; ++m) {
        std::set<std::string> grown;
        for (const auto& code : level) {
            auto parents = parents_from_code(code);
            const Vertex leaf = parents.size();
            parents.emplace_back();
            for (Vertex attach = 0; attach < leaf; ++attach) {
                parents[leaf] = attach;
                grown.insert(canonical_code(parents));
            }
        }
        level = std::move(grown);
    }
    std::vector<RootedTreeCode> out;
    out.reserve(level.size());
    for (const auto& code : level) out.push_back({parents_from_code(code), code});
    return out;
}

bool is_out_star(const Digraph& tree) {
    if (tree.order() < 2 || !is_rooted_tree(tree)) return false;
    for (Vertex v = 0; v < tree.order(); ++v) {
        if (tree.in_degree(v) == 0) return tree.out_degree(v) == tree.order() - 1;
    }
    return false;
}

Report verify_total_equality_trees(std::size_t n_max, const TreeConfig& config) {
    return verify_over_trees("total_equals_total_italian", 2, n_max, config, [&](const Digraph& d) {
        const int total = solve(d, Parameter::gamma_t, config.solver).value;
        SolveResult ti = solve(d, Parameter::gamma_ti, config.solver);
        return Outcome{total == ti.value, d.order() == 2, std::move(ti.witness)};
    });
}

Report verify_star_extremal_trees(std::size_t n_max, const TreeConfig& config) {
    return verify_over_trees("total_italian_is_three_gamma", 3, n_max, config, [&](const Digraph& d) {
        const int gamma = solve(d, Parameter::gamma, config.solver).value;
        SolveResult ti = solve(d, Parameter::gamma_ti, config.solver);
        return Outcome{ti.value == 3 * gamma, is_out_star(d), std::move(ti.witness)};
    });
}

}  // namespace tidom
