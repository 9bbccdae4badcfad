/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/exact.hh>
#include <olse/errors.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace olse;

TEST_CASE("oracle on an empty G")
{
    Instance inst{ 0, 3, {}, {}, {}, std::nullopt };
    CHECK(solve_oracle(inst, Variant::OLSE).size() == 0);
}

TEST_CASE("oracle finds the identity embedding")
{
    Instance inst{ 2, 2, {}, {}, { { 0 }, { 1 } }, std::nullopt };
    auto sol = solve_oracle(inst, Variant::OLSE);
    CHECK(sol.embedding == Embedding{ { { 0, 0 }, { 1, 1 } } });
    CHECK(sol.algorithm == "oracle");
}

TEST_CASE("oracle on an edge plus an isolated vertex")
{
    Instance inst{ 3, 3, { { 0, 1 } }, {}, { { 0 }, { 1 }, { 2 } }, std::nullopt };
    auto sol = solve_oracle(inst, Variant::OLSE);
    CHECK(sol.size() == 2);
    CHECK(check_embedding(inst, sol.embedding, Variant::OLSE).ok());
}

TEST_CASE("oracle refuses instances above its cap")
{
    Instance inst{ 25, 25, {}, {}, std::vector<std::vector<int>>(25), std::nullopt };
    CHECK_THROWS_AS(solve_oracle(inst, Variant::OLSE), SizeGuardExceeded);
    CHECK_NOTHROW(solve_oracle(inst, Variant::OLSE, OracleOptions{ 30, true }));
}

TEST_CASE("oracle matches exhaustive enumeration for all variants")
{
    std::mt19937_64 rng(3);
    for (int round = 0 ; round < 300 ; ++round) {
        auto inst = oracles::random_instance(rng, 6, 6, 2, 2, 3, 0.5, 1);
        for (auto v : { Variant::OLSE, Variant::OLISE, Variant::LSE, Variant::LISE }) {
            auto sol = solve_oracle(inst, v);
            CHECK(oracles::valid(inst, sol.embedding, v));
            CHECK(sol.size() == oracles::optimum(inst, v));
            CHECK(solve_oracle(inst, v, OracleOptions{ 20, false }).size() == sol.size());
        }
    }
}

TEST_CASE("dp with all lists empty")
{
    Instance inst{ 3, 3, {}, {}, { {}, {}, {} }, std::nullopt };
    CHECK(solve_dp_no_edges(inst).solution.size() == 0);
}

TEST_CASE("dp on lists [[1],[0,2],[1]]")
{
    Instance inst{ 3, 3, {}, {}, { { 1 }, { 0, 2 }, { 1 } }, std::nullopt };
    auto result = solve_dp_no_edges(inst);
    CHECK(result.solution.size() == 2);
    CHECK(oracles::valid(inst, result.solution.embedding, Variant::OLSE));
    CHECK(oracles::valid(inst, { { 0, 1 }, { 1, 2 } }, true, false));
    CHECK(result.solution.algorithm == "dp");
}

TEST_CASE("dp on identity lists")
{
    Instance inst{ 4, 4, {}, {}, { { 0 }, { 1 }, { 2 }, { 3 } }, std::nullopt };
    CHECK(solve_dp_no_edges(inst).solution.size() == 4);
}

TEST_CASE("dp refuses G-edges")
{
    Instance inst{ 2, 2, { { 0, 1 } }, {}, { { 0 }, { 1 } }, std::nullopt };
    CHECK_THROWS_AS(solve_dp_no_edges(inst), PreconditionViolation);
    CHECK(solve_dp_no_edges(strip_edges(inst)).solution.size() == 2);
}

TEST_CASE("dp table shape and monotonicity")
{
    std::mt19937_64 rng(17);
    for (int round = 0 ; round < 200 ; ++round) {
        std::uniform_int_distribution<int> size(0, 7);
        int n_g = size(rng), n_h = size(rng);
        auto inst = oracles::random_instance(rng, n_g, n_h, 0, 2, 3);
        auto [sol, t] = solve_dp_no_edges(inst);
        REQUIRE(t.cell_count() == std::size_t(n_g + 1) * std::size_t(n_h + 1));
        for (int i = 0 ; i <= n_g ; ++i)
            for (int j = 0 ; j <= n_h ; ++j) {
                if (i == 0 || j == 0)
                    CHECK(t.at(i, j) == 0);
                else {
                    CHECK(t.at(i, j) >= t.at(i - 1, j));
                    CHECK(t.at(i, j) >= t.at(i, j - 1));
                }
                CHECK(t.at(i, j) <= std::min(i, j));
            }
        CHECK(t.at(n_g, n_h) == sol.size());
        CHECK(sol.size() == oracles::optimum(inst, Variant::OLSE));
        CHECK(oracles::valid(inst, sol.embedding, Variant::OLSE));
    }
}
