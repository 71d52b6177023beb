#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tidom/error.hpp"
#include "tidom/properties.hpp"
#include "tidom/solver.hpp"

using namespace tidom;

namespace {

std::vector<Digraph> sample_digraphs() {
    std::vector<Digraph> out{make_dipath(2),
                             make_dipath(4),
                             make_dipath(7),
                             make_out_star(5),
                             cartesian_product(make_dipath(2), make_dipath(3)),
                             cartesian_product(make_dipath(3), make_dipath(3)),
                             Digraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                             Digraph(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}})};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Digraph d = random_digraph(3 + seed % 6, 0.35, seed);
        if (!d.has_isolated_vertex()) out.push_back(d);
    }
    return out;
}

std::vector<Labeling> labelings(const std::vector<Witness>& ws) {
    std::vector<Labeling> out;
    for (const auto& w : ws) out.push_back(std::get<Labeling>(w));
    return out;
}

std::vector<VertexSet> sets(const std::vector<Witness>& ws) {
    std::vector<VertexSet> out;
    for (const auto& w : ws) out.push_back(std::get<VertexSet>(w));
    return out;
}

}  // namespace

TEST_CASE("parameter names round-trip") {
    for (Parameter p : kAllParameters) {
        CHECK(parse_parameter(to_string(p)) == p);
    }
    CHECK(parse_parameter("GAMMA_TI") == Parameter::gamma_ti);
    CHECK_FALSE(parse_parameter("gamma_x").has_value());
    CHECK_FALSE(variant_of(Parameter::rho).has_value());
    CHECK(variant_of(Parameter::gamma_ti) == Variant::total_italian);
}

TEST_CASE("solve agrees with exhaustive search on every parameter") {
    for (const Digraph& d : sample_digraphs()) {
        for (Parameter p : kAllParameters) {
            CAPTURE(d.order());
            CAPTURE(std::string(to_string(p)));
            const SolveResult r = solve(d, p);
            CHECK(r.value == oracle::value(d, p));
            CHECK(witness_value(r.witness) == r.value);
            CHECK(witness_feasible(d, r.witness, p));
        }
    }
}

TEST_CASE("enumerate_optima lists exactly the exhaustive optima in order") {
    for (const Digraph& d : sample_digraphs()) {
        if (d.order() > 9) continue;
        for (Parameter p : {Parameter::gamma_ti, Parameter::gamma_i, Parameter::gamma_tr}) {
            CAPTURE(std::string(to_string(p)));
            CHECK(labelings(enumerate_optima(d, p)) == oracle::function_optima(d, *variant_of(p)));
        }
        for (Parameter p : {Parameter::gamma, Parameter::gamma_t, Parameter::gamma_2t}) {
            CAPTURE(std::string(to_string(p)));
            CHECK(sets(enumerate_optima(d, p)) == oracle::set_optima(d, *variant_of(p)));
        }
    }
}

TEST_CASE("first optimum found is the lexicographically smallest") {
    for (const Digraph& d : sample_digraphs()) {
        const auto all = oracle::function_optima(d, Variant::total_italian);
        CHECK(std::get<Labeling>(solve(d, Parameter::gamma_ti).witness) == all.front());
    }
}

TEST_CASE("min_v0_optima keeps the optima with fewest zeros") {
    for (const Digraph& d : sample_digraphs()) {
        if (d.order() > 9) continue;
        auto all = oracle::function_optima(d, Variant::total_italian);
        std::size_t fewest = d.order();
        for (const auto& f : all) fewest = std::min(fewest, level_set(f, 0).size());
        std::erase_if(all, [&](const Labeling& f) { return level_set(f, 0).size() != fewest; });
        CHECK(min_v0_optima(d) == all);
    }
}

TEST_CASE("small fixed values") {
    CHECK(solve(cartesian_product(make_dipath(3), make_dipath(3)), Parameter::gamma_ti).value == 7);
    // Out-star: the root dominates, and every total variant needs one leaf beside it.
    CHECK(solve(make_out_star(5), Parameter::gamma).value == 1);
    CHECK(solve(make_out_star(5), Parameter::gamma_ti).value == 3);
    CHECK(labelings(enumerate_optima(make_dipath(2), Parameter::gamma_ti)) == std::vector<Labeling>{{1, 1}});
    CHECK(sets(enumerate_optima(make_out_star(6), Parameter::gamma)) == std::vector<VertexSet>{VertexSet(6, {0})});
    CHECK(enumerate_optima(make_out_star(3), Parameter::gamma_ti).size() ==
          oracle::function_optima(make_out_star(3), Variant::total_italian).size());
}

TEST_CASE("solver errors") {
    CHECK_THROWS_AS(solve(make_dipath(17), Parameter::gamma_ti), SizeLimitExceeded);
    CHECK_NOTHROW(solve(make_dipath(17), Parameter::gamma_ti, SolverConfig{17, 20}));
    CHECK_THROWS_AS(solve(make_dipath(21), Parameter::gamma), SizeLimitExceeded);
    CHECK_THROWS_AS(solve(make_dipath(3), Parameter::gamma, SolverConfig{16, 65}), InvalidArgument);
    const Digraph isolated(3, {{0, 1}});
    CHECK_THROWS_AS(solve(isolated, Parameter::gamma_ti), InfeasibleStructure);
    CHECK_THROWS_AS(solve(isolated, Parameter::gamma_2t), InfeasibleStructure);
    CHECK(solve(isolated, Parameter::gamma).value == 2);
    CHECK(solve(isolated, Parameter::gamma_i).value == oracle::value(isolated, Parameter::gamma_i));
}
