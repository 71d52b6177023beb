#include "tidom/solver.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>

#include "tidom/error.hpp"

namespace tidom {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskOrder = 64;

Mask bit(Vertex v) { return Mask{1} << v; }

struct Masks {
    std::vector<Mask> in;
    std::vector<Mask> out;
    std::vector<Mask> open;  // in | out
    Mask full = 0;
};

Masks build_masks(const Digraph& d) {
    Masks m;
    const std::size_t n = d.order();
    m.in.assign(n, 0);
    m.out.assign(n, 0);
    m.open.assign(n, 0);
    for (const Arc& a : d.arcs()) {
        m.out[a.tail] |= bit(a.head);
        m.in[a.head] |= bit(a.tail);
    }
    for (Vertex v = 0; v < n; ++v) m.open[v] = m.in[v] | m.out[v];
    m.full = n == 64 ? ~Mask{0} : (bit(n) - 1);
    return m;
}

void check_preconditions(const Digraph& d, Parameter p, const SolverConfig& config) {
    if (d.order() == 0) throw InvalidArgument("digraph must have at least one vertex");
    const std::size_t cap = is_function_parameter(p) ? config.function_order_cap : config.set_order_cap;
    if (cap > kMaxMaskOrder) throw InvalidArgument("order cap above " + std::to_string(kMaxMaskOrder) + " is unsupported");
    if (d.order() > cap) {
        throw SizeLimitExceeded(std::string(to_string(p)) + ": order " + std::to_string(d.order()) +
                                " exceeds the exhaustive-search cap " + std::to_string(cap));
    }
    if (is_total_parameter(p) && d.has_isolated_vertex()) {
        throw InfeasibleStructure(std::string(to_string(p)) + " is undefined on a digraph with isolated vertices");
    }
}

// Depth-first label assignment in vertex order. A vertex's zero-defense
// condition is checked as soon as it and all of its in-neighbors are labeled;
// its totality condition as soon as it and all of its neighbors are labeled.
class LabelSearch {
   public:
    LabelSearch(const Digraph& d, Parameter p) : n_(d.order()), masks_(build_masks(d)), labels_(d.order(), 0) {
        roman_ = p == Parameter::gamma_r || p == Parameter::gamma_tr;
        total_ = p == Parameter::gamma_tr || p == Parameter::gamma_ti;
        defense_at_.resize(n_);
        totality_at_.resize(n_);
        sources_from_.assign(n_ + 1, 0);
        for (Vertex u = 0; u < n_; ++u) {
            Vertex ready = u;
            for (Vertex w : d.in_neighbors(u)) ready = std::max(ready, w);
            defense_at_[ready].push_back(u);
            for (Vertex w : d.out_neighbors(u)) ready = std::max(ready, w);
            totality_at_[ready].push_back(u);
        }
        for (std::size_t i = n_; i-- > 0;) {
            sources_from_[i] = sources_from_[i + 1] + (d.in_degree(i) == 0 ? 1 : 0);
        }
    }

    /// Minimum weight; best_ holds the lexicographically first optimum.
    int minimize() {
        enumerating_ = false;
        bound_ = static_cast<int>(2 * n_ + 1);
        found_ = false;
        dfs(0, 0);
        if (!found_) throw InfeasibleStructure("no feasible labeling exists");
        return bound_;
    }

    /// Every feasible labeling of weight at most target, in lexicographic order.
    std::vector<std::vector<std::uint8_t>> enumerate(int target) {
        enumerating_ = true;
        bound_ = target;
        all_.clear();
        dfs(0, 0);
        return std::move(all_);
    }

    const std::vector<std::uint8_t>& best() const { return best_; }

   private:
    bool defended(Vertex u) const {
        const Mask in = masks_.in[u];
        if (in & two_) return true;
        return !roman_ && std::popcount(in & positive_) >= 2;
    }

    bool checks_pass(std::size_t i) const {
        for (Vertex u : defense_at_[i]) {
            if (labels_[u] == 0 && !defended(u)) return false;
        }
        if (total_) {
            for (Vertex u : totality_at_[i]) {
                if (labels_[u] != 0 && (masks_.open[u] & positive_) == 0) return false;
            }
        }
        return true;
    }

    void dfs(std::size_t i, int weight) {
        if (i == n_) {
            if (enumerating_) {
                all_.push_back(labels_);
            } else {
                bound_ = weight;
                best_ = labels_;
                found_ = true;
            }
            return;
        }
        for (std::uint8_t x = 0; x <= 2; ++x) {
            const int w = weight + x;
            const int lower = w + sources_from_[i + 1];
            if (enumerating_ ? lower > bound_ : lower >= bound_) break;
            labels_[i] = x;
            if (x >= 1) positive_ |= bit(i);
            if (x == 2) two_ |= bit(i);
            if (checks_pass(i)) dfs(i + 1, w);
            positive_ &= ~bit(i);
            two_ &= ~bit(i);
        }
        labels_[i] = 0;
    }

    std::size_t n_;
    Masks masks_;
    bool roman_ = false;
    bool total_ = false;
    std::vector<std::vector<Vertex>> defense_at_;
    std::vector<std::vector<Vertex>> totality_at_;
    std::vector<int> sources_from_;

    std::vector<std::uint8_t> labels_;
    Mask positive_ = 0;
    Mask two_ = 0;

    bool enumerating_ = false;
    int bound_ = 0;
    bool found_ = false;
    std::vector<std::uint8_t> best_;
    std::vector<std::vector<std::uint8_t>> all_;
};

class SetSearch {
   public:
    SetSearch(const Digraph& d, Parameter p) : n_(d.order()), p_(p), masks_(build_masks(d)) {}

    /// Feasible subsets of the optimal cardinality, sorted by membership vector.
    std::vector<Mask> optima() const {
        if (p_ == Parameter::rho) {
            for (std::size_t k = n_ + 1; k-- > 0;) {
                auto found = feasible_of_size(k);
                if (!found.empty()) return found;
            }
        } else {
            for (std::size_t k = 0; k <= n_; ++k) {
                auto found = feasible_of_size(k);
                if (!found.empty()) return found;
            }
        }
        throw InfeasibleStructure(std::string(to_string(p_)) + ": no feasible set exists");
    }

   private:
    // Key whose numeric order equals lexicographic order of the membership
    // vector with vertex 0 as the leading coordinate.
    Mask lex_key(Mask m) const {
        Mask key = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (m & bit(v)) key |= bit(n_ - 1 - v);
        }
        return key;
    }

    std::vector<Mask> feasible_of_size(std::size_t k) const {
        std::vector<Mask> found;
        if (k == 0) {
            if (feasible(0)) found.push_back(0);
            return found;
        }
        // Gosper's hack over all k-subsets of n_ bits.
        Mask m = k == 64 ? ~Mask{0} : bit(k) - 1;
        const Mask limit = n_ == 64 ? 0 : bit(n_);
        while (true) {
            if (feasible(m)) found.push_back(m);
            const Mask c = m & (~m + 1);
            const Mask r = m + c;
            if (r == 0) break;  // wrapped past bit 63
            m = (((r ^ m) >> 2) / c) | r;
            if (limit != 0 && m >= limit) break;
        }
        std::sort(found.begin(), found.end(), [this](Mask a, Mask b) { return lex_key(a) < lex_key(b); });
        return found;
    }

    bool dominating(Mask x) const {
        Mask covered = x;
        for (Vertex v = 0; v < n_; ++v) {
            if (x & bit(v)) covered |= masks_.out[v];
        }
        return covered == masks_.full;
    }

    bool no_isolated_inside(Mask x) const {
        for (Vertex v = 0; v < n_; ++v) {
            if ((x & bit(v)) && (masks_.open[v] & x) == 0) return false;
        }
        return true;
    }

    bool feasible(Mask x) const {
        switch (p_) {
            case Parameter::gamma:
                return dominating(x);
            case Parameter::gamma_t:
                return dominating(x) && no_isolated_inside(x);
            case Parameter::gamma_2t: {
                if (!no_isolated_inside(x)) return false;
                for (Vertex v = 0; v < n_; ++v) {
                    if (!(x & bit(v)) && std::popcount(masks_.in[v] & x) < 2) return false;
                }
                return true;
            }
            case Parameter::rho: {
                Mask seen = 0;
                for (Vertex v = 0; v < n_; ++v) {
                    if (!(x & bit(v))) continue;
                    const Mask closed_in = masks_.in[v] | bit(v);
                    if (seen & closed_in) return false;
                    seen |= closed_in;
                }
                return true;
            }
            default:
                return false;
        }
    }

    std::size_t n_;
    Parameter p_;
    Masks masks_;
};

Labeling to_labeling(const std::vector<std::uint8_t>& labels) {
    std::vector<int> values(labels.begin(), labels.end());
    return Labeling(values);
}

VertexSet to_vertex_set(Mask m, std::size_t n) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v) {
        if (m & bit(v)) s.insert(v);
    }
    return s;
}

}  // namespace

std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::gamma:
            return "gamma";
        case Parameter::gamma_t:
            return "gamma_t";
        case Parameter::gamma_r:
            return "gamma_R";
        case Parameter::gamma_i:
            return "gamma_I";
        case Parameter::gamma_tr:
            return "gamma_tR";
        case Parameter::gamma_ti:
            return "gamma_tI";
        case Parameter::gamma_2t:
            return "gamma_2t";
        case Parameter::rho:
            return "rho";
    }
    return "unknown";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    };
    const std::string wanted = lower(name);
    for (Parameter p : kAllParameters) {
        if (lower(to_string(p)) == wanted) return p;
    }
    return std::nullopt;
}

std::optional<Variant> variant_of(Parameter p) {
    switch (p) {
        case Parameter::gamma:
            return Variant::dominating_set;
        case Parameter::gamma_t:
            return Variant::total_dominating_set;
        case Parameter::gamma_r:
            return Variant::roman;
        case Parameter::gamma_i:
            return Variant::italian;
        case Parameter::gamma_tr:
            return Variant::total_roman;
        case Parameter::gamma_ti:
            return Variant::total_italian;
        case Parameter::gamma_2t:
            return Variant::total_2_dominating_set;
        case Parameter::rho:
            return std::nullopt;
    }
    return std::nullopt;
}

int witness_value(const Witness& w) {
    if (const auto* f = std::get_if<Labeling>(&w)) return weight(*f);
    return static_cast<int>(std::get<VertexSet>(w).size());
}

bool witness_feasible(const Digraph& d, const Witness& w, Parameter p) {
    if (p == Parameter::rho) {
        const auto* q = std::get_if<VertexSet>(&w);
        if (!q) throw InvalidArgument("packing witness must be a vertex set");
        return is_packing(d, *q, PackingKind::ordinary);
    }
    return std::visit([&](const auto& x) { return validate(d, x, *variant_of(p)); }, w);
}

SolveResult solve(const Digraph& d, Parameter p, const SolverConfig& config) {
    check_preconditions(d, p, config);
    if (is_function_parameter(p)) {
        LabelSearch search(d, p);
        const int value = search.minimize();
        return {value, to_labeling(search.best())};
    }
    SetSearch search(d, p);
    const auto optima = search.optima();
    VertexSet best = to_vertex_set(optima.front(), d.order());
    const int value = static_cast<int>(best.size());
    return {value, std::move(best)};
}

std::vector<Witness> enumerate_optima(const Digraph& d, Parameter p, const SolverConfig& config) {
    check_preconditions(d, p, config);
    std::vector<Witness> out;
    if (is_function_parameter(p)) {
        LabelSearch search(d, p);
        const int value = search.minimize();
        for (const auto& labels : search.enumerate(value)) out.emplace_back(to_labeling(labels));
        return out;
    }
    SetSearch search(d, p);
    for (Mask m : search.optima()) out.emplace_back(to_vertex_set(m, d.order()));
    return out;
}

std::vector<Labeling> min_v0_optima(const Digraph& d, const SolverConfig& config) {
    std::vector<Labeling> optima;
    for (auto& w : enumerate_optima(d, Parameter::gamma_ti, config)) optima.push_back(std::get<Labeling>(std::move(w)));
    std::size_t fewest = d.order() + 1;
    for (const auto& f : optima) fewest = std::min(fewest, level_set(f, 0).size());
    std::erase_if(optima, [&](const Labeling& f) { return level_set(f, 0).size() != fewest; });
    return optima;
}

}  // namespace tidom
