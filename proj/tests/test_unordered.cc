/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/unordered.hh>
#include <olse/errors.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace olse;

namespace
{
    auto rules_used(const LseResult & r) -> std::set<LseRule>
    {
        std::set<LseRule> result;
        for (auto & s : r.steps)
            result.insert(s.rule);
        return result;
    }

    /// Random instance with Delta_G <= 1, Delta_H = 0 and every list a
    /// singleton or empty.
    auto random_lse_instance(std::mt19937_64 & rng, int n_g, int n_h) -> Instance
    {
        auto inst = oracles::random_instance(rng, n_g, n_h, 1, 0, 1, 0.7, 1);
        return inst;
    }
}

TEST_CASE("single isolated vertex is taken by the isolated rule")
{
    Instance inst{ 1, 1, {}, {}, { { 0 } }, std::nullopt };
    auto r = solve_lse_rules(inst);
    CHECK(r.solution.size() == 1);
    CHECK(rules_used(r) == std::set<LseRule>{ LseRule::Isolated });
    CHECK(r.solution.algorithm == "lse-rules");
}

TEST_CASE("two groups joined by two edges form a 2-cycle")
{
    // S_1 = {a, a'} -> v_0 and S_2 = {b, b'} -> v_1, edges ab and a'b'
    Instance inst{ 4, 2, { { 0, 2 }, { 1, 3 } }, {}, { { 0 }, { 0 }, { 1 }, { 1 } }, std::nullopt };
    auto r = solve_lse_rules(inst);
    CHECK(r.solution.size() == 2);
    CHECK(rules_used(r).count(LseRule::Cycle));
    CHECK(oracles::valid(inst, r.solution.embedding, Variant::LSE));
    CHECK(oracles::optimum(inst, Variant::LSE) == 2);
}

TEST_CASE("path of three groups is solved by leaf rules")
{
    // {a} - {b, b', b''} - {c}, edges ab and b'c, b'' isolated
    Instance inst{ 5, 3, { { 0, 1 }, { 2, 4 } }, {}, { { 0 }, { 1 }, { 1 }, { 1 }, { 2 } }, std::nullopt };
    auto r = solve_lse_rules(inst);
    CHECK(r.solution.size() == 3);
    CHECK(r.solution.size() == oracles::optimum(inst, Variant::LSE));
    CHECK(oracles::valid(inst, r.solution.embedding, Variant::LSE));

    // singleton leaves only: {a} - {b, b'} - {c}
    Instance tight{ 4, 3, { { 0, 1 }, { 2, 3 } }, {}, { { 0 }, { 1 }, { 1 }, { 2 } }, std::nullopt };
    auto t = solve_lse_rules(tight);
    CHECK(rules_used(t).count(LseRule::Leaf));
    CHECK(t.solution.size() == oracles::optimum(tight, Variant::LSE));
}

TEST_CASE("lse rules refuse instances outside their class")
{
    Instance wide{ 1, 2, {}, {}, { { 0, 1 } }, std::nullopt };
    CHECK_THROWS_AS(solve_lse_rules(wide), PreconditionViolation);
    Instance h_edge{ 2, 2, {}, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
    CHECK_THROWS_AS(solve_lse_rules(h_edge), PreconditionViolation);
    Instance path{ 3, 3, { { 0, 1 }, { 1, 2 } }, {}, { { 0 }, { 1 }, { 2 } }, std::nullopt };
    CHECK_THROWS_AS(solve_lse_rules(path), PreconditionViolation);
}

TEST_CASE("lse rules agree with the oracle on random instances")
{
    std::mt19937_64 rng(8);
    for (int round = 0 ; round < 300 ; ++round) {
        std::uniform_int_distribution<int> size(1, 9);
        auto inst = random_lse_instance(rng, size(rng), size(rng));
        auto r = solve_lse_rules(inst);
        CHECK(oracles::valid(inst, r.solution.embedding, Variant::LSE));
        CHECK(r.solution.size() == oracles::optimum(inst, Variant::LSE));
        for (auto & s : r.steps)
            CHECK(s.vertices_after < s.vertices_before);
    }
}

TEST_CASE("matching graph for an edge mapped onto an edge")
{
    Instance inst{ 2, 2, { { 0, 1 } }, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
    auto mg = build_matching_graph(inst);
    CHECK(mg.x_nodes.size() == 1);
    CHECK(mg.y_nodes.size() == 1);
    REQUIRE(mg.weighted_edges.size() == 1);
    CHECK(mg.weighted_edges[0].weight == 2);

    auto sol = matching_to_solution(mg, max_weight_matching(mg), inst);
    CHECK(sol.embedding == Embedding{ { { 0, 0 }, { 1, 1 } } });
}

TEST_CASE("matching graph for two isolated vertices")
{
    Instance inst{ 1, 1, {}, {}, { { 0 } }, std::nullopt };
    auto mg = build_matching_graph(inst);
    REQUIRE(mg.weighted_edges.size() == 1);
    CHECK(mg.weighted_edges[0].weight == 1);
    CHECK(solve_lise_matching(inst).size() == 1);
}

TEST_CASE("isolated vertex listing both ends of an H-edge gets one edge")
{
    Instance inst{ 1, 2, {}, { { 0, 1 } }, { { 0, 1 } }, std::nullopt };
    auto mg = build_matching_graph(inst);
    CHECK(mg.y_nodes.size() == 1);
    REQUIRE(mg.weighted_edges.size() == 1);
    CHECK(mg.weighted_edges[0].weight == 1);
}

TEST_CASE("edge with only one endpoint listed still matches with weight 1")
{
    Instance inst{ 2, 2, { { 0, 1 } }, { { 0, 1 } }, { { 0 }, {} }, std::nullopt };
    CHECK(oracles::optimum(inst, Variant::LISE) == 1);
    auto mg = build_matching_graph(inst);
    REQUIRE(mg.weighted_edges.size() == 1);
    CHECK(mg.weighted_edges[0].weight == 1);
    auto sol = solve_lise_matching(inst);
    CHECK(sol.embedding == Embedding{ { { 0, 0 } } });
}

TEST_CASE("max weight matching small cases")
{
    MatchingGraph empty;
    CHECK(max_weight_matching(empty).weight == 0);

    MatchingGraph single{ { { NodeKind::Edge, 0, 1 } }, { { NodeKind::Edge, 0, 1 } }, { { 0, 0, 2 } } };
    CHECK(max_weight_matching(single).weight == 2);

    MatchingGraph star{ { { NodeKind::Vertex, 0 } }, { { NodeKind::Vertex, 0 }, { NodeKind::Vertex, 1 } },
        { { 0, 0, 1 }, { 0, 1, 1 } } };
    auto m = max_weight_matching(star);
    CHECK(m.weight == 1);
    CHECK(m.pairs.size() == 1);
}

TEST_CASE("hungarian matching equals exhaustive matching weight")
{
    std::mt19937_64 rng(21);
    for (int round = 0 ; round < 300 ; ++round) {
        MatchingGraph mg;
        std::uniform_int_distribution<int> size(0, 6), weight(1, 2);
        int nx = size(rng), ny = size(rng);
        for (int x = 0 ; x < nx ; ++x)
            mg.x_nodes.push_back({ NodeKind::Vertex, x });
        for (int y = 0 ; y < ny ; ++y)
            mg.y_nodes.push_back({ NodeKind::Vertex, y });
        std::bernoulli_distribution present(0.4);
        for (int x = 0 ; x < nx ; ++x)
            for (int y = 0 ; y < ny ; ++y)
                if (present(rng))
                    mg.weighted_edges.push_back({ x, y, weight(rng) });
        auto m = max_weight_matching(mg);
        CHECK(oracles::matching_weight(mg, m.pairs) == m.weight);
        CHECK(m.weight == oracles::max_matching_weight(mg));
    }
}

TEST_CASE("every matching converts to an embedding of its weight")
{
    std::mt19937_64 rng(22);
    for (int round = 0 ; round < 200 ; ++round) {
        auto inst = oracles::random_instance(rng, 7, 7, 1, 1, 3, 0.7, 1);
        auto mg = build_matching_graph(inst);

        auto edges = mg.weighted_edges;
        std::shuffle(edges.begin(), edges.end(), rng);
        Matching m;
        std::set<int> xs, ys;
        std::bernoulli_distribution take(0.7);
        for (auto & e : edges)
            if (! xs.count(e.x) && ! ys.count(e.y) && take(rng)) {
                xs.insert(e.x);
                ys.insert(e.y);
                m.pairs.emplace_back(e.x, e.y);
                m.weight += e.weight;
            }

        auto sol = matching_to_solution(mg, m, inst);
        CHECK(sol.size() == m.weight);
        CHECK(oracles::valid(inst, sol.embedding, Variant::LISE));
    }
}

TEST_CASE("matching pipeline agrees with the oracle")
{
    std::mt19937_64 rng(23);
    for (int round = 0 ; round < 300 ; ++round) {
        std::uniform_int_distribution<int> size(1, 8);
        auto inst = oracles::random_instance(rng, size(rng), size(rng), 1, 1, 3, 0.7, 1);
        auto sol = solve_lise_matching(inst);
        CHECK(oracles::valid(inst, sol.embedding, Variant::LISE));
        CHECK(sol.size() == oracles::optimum(inst, Variant::LISE));
    }
}

TEST_CASE("matching graph refuses higher degrees")
{
    Instance inst{ 3, 3, { { 0, 1 }, { 1, 2 } }, {}, { { 0 }, { 1 }, { 2 } }, std::nullopt };
    CHECK_THROWS_AS(build_matching_graph(inst), PreconditionViolation);
}
