/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/split.hh>
#include <olse/errors.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace olse;

namespace
{
    auto random_segments(std::mt19937_64 & rng, int m) -> std::vector<Segment>
    {
        std::vector<int> g(m), h(m);
        for (int i = 0 ; i < m ; ++i)
            g[i] = h[i] = i;
        std::shuffle(g.begin(), g.end(), rng);
        std::shuffle(h.begin(), h.end(), rng);
        std::vector<Segment> result;
        for (int i = 0 ; i < m ; ++i)
            result.push_back({ g[i], h[i] });
        return result;
    }

    auto pairwise_non_crossing(const std::vector<Segment> & segments, const std::vector<int> & chosen) -> bool
    {
        for (std::size_t a = 0 ; a < chosen.size() ; ++a)
            for (std::size_t b = a + 1 ; b < chosen.size() ; ++b)
                if (oracles::crossing(segments[chosen[a]], segments[chosen[b]]))
                    return false;
        return true;
    }
}

TEST_CASE("one vertex with two list entries becomes two crossing segments")
{
    Instance inst{ 1, 2, {}, {}, { { 0, 1 } }, std::nullopt };
    auto s = split(inst);
    CHECK(s.segments == std::vector<Segment>{ { 0, 1 }, { 1, 0 } });
    CHECK(s.origin_g == std::vector<int>{ 0, 0 });
    CHECK(s.origin_h == std::vector<int>{ 1, 0 });
    CHECK(segments_cross(s.segments[0], s.segments[1]));
}

TEST_CASE("distinct singleton lists keep their positions")
{
    Instance inst{ 3, 4, {}, {}, { { 2 }, { 0 }, { 3 } }, std::nullopt };
    auto s = split(inst);
    REQUIRE(s.segments.size() == 3);
    CHECK(s.segments == std::vector<Segment>{ { 0, 1 }, { 1, 0 }, { 2, 2 } });
    CHECK(s.origin_h == std::vector<int>{ 2, 0, 3 });
}

TEST_CASE("an edge between vertices with 3 and 2 list entries splits into 6 edges")
{
    Instance inst{ 2, 5, { { 0, 1 } }, {}, { { 0, 1, 2 }, { 3, 4 } }, std::nullopt };
    auto s = split(inst);
    CHECK(s.segments.size() == 5);
    CHECK(s.split_edges_g.size() == 6);
    CHECK(s.split_edges_h.empty());
}

TEST_CASE("simplify cases")
{
    SUBCASE("H-edge without a G-edge is dropped")
    {
        Instance inst{ 2, 2, {}, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
        auto s = simplify(split(inst));
        CHECK(s.split_edges_h.empty());
        CHECK(s.split_edges_g.empty());
    }

    SUBCASE("matched G-edge and H-edge both vanish")
    {
        Instance inst{ 2, 2, { { 0, 1 } }, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
        auto raw = split(inst);
        CHECK(raw.split_edges_g.size() == 1);
        CHECK(raw.split_edges_h.size() == 1);
        auto s = simplify(raw);
        CHECK(s.split_edges_g.empty());
        CHECK(s.split_edges_h.empty());
    }

    SUBCASE("G-edge without an H-edge stays")
    {
        Instance inst{ 2, 2, { { 0, 1 } }, {}, { { 0 }, { 1 } }, std::nullopt };
        auto s = simplify(split(inst));
        CHECK(s.split_edges_g == std::vector<SegmentPair>{ { 0, 1 } });
    }
}

TEST_CASE("conflict graph construction")
{
    Instance plain{ 2, 2, {}, {}, { { 0 }, { 1 } }, std::nullopt };
    CHECK(conflict_graph_of(plain).conflict_edges.empty());

    Instance one{ 2, 2, { { 0, 1 } }, {}, { { 0 }, { 1 } }, std::nullopt };
    CHECK(conflict_graph_of(one).conflict_edges.size() == 1);

    Instance h_edge{ 2, 2, {}, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
    CHECK_THROWS_AS(build_conflict_graph(split(h_edge)), PreconditionViolation);
}

TEST_CASE("split positions are permutations and conflict degrees are bounded")
{
    std::mt19937_64 rng(31);
    for (int round = 0 ; round < 300 ; ++round) {
        auto inst = oracles::random_instance(rng, 8, 8, 2, 2, 2, 0.6);
        auto stats = degree_stats(inst);
        auto s = split(inst);
        std::set<int> gs, hs;
        for (auto & seg : s.segments) {
            gs.insert(seg.g_pos);
            hs.insert(seg.h_pos);
        }
        int m = int(s.segments.size());
        CHECK(int(gs.size()) == m);
        CHECK(int(hs.size()) == m);
        CHECK((m == 0 || (*gs.rbegin() == m - 1 && *hs.rbegin() == m - 1)));

        auto cg = build_conflict_graph(simplify(s));
        CHECK(cg.max_conflict_degree() <= stats.delta_l * stats.delta_g);
    }
}

TEST_CASE("permutation_mis small cases")
{
    CHECK(permutation_mis({ { 0, 0 }, { 1, 1 }, { 2, 2 } }).size() == 3);
    CHECK(permutation_mis({ { 0, 1 }, { 1, 0 }, { 2, 2 } }).size() == 2);
    CHECK(permutation_mis({ { 0, 2 }, { 1, 1 }, { 2, 0 } }).size() == 1);
    CHECK(permutation_mis({}).empty());
}

TEST_CASE("permutation_mis equals brute force")
{
    std::mt19937_64 rng(32);
    for (int round = 0 ; round < 300 ; ++round) {
        std::uniform_int_distribution<int> size(0, 12);
        auto segments = random_segments(rng, size(rng));
        auto chosen = permutation_mis(segments);
        CHECK(pairwise_non_crossing(segments, chosen));
        CHECK(int(chosen.size()) == oracles::max_non_crossing(segments));
        for (std::size_t i = 1 ; i < chosen.size() ; ++i)
            CHECK(segments[chosen[i - 1]].g_pos < segments[chosen[i]].g_pos);
    }
}

TEST_CASE("conflict-free segment sets are exactly the solutions")
{
    std::mt19937_64 rng(33);
    for (int round = 0 ; round < 200 ; ++round) {
        auto inst = oracles::random_instance(rng, 7, 7, 2, 2, 2, 0.6, 1);
        auto cg = conflict_graph_of(inst);
        CHECK(oracles::max_conflict_free(cg) == oracles::optimum(inst, Variant::OLSE));
    }
}

TEST_CASE("planned trial count")
{
    TrialBudget b;
    b.delta = 0.01;
    CHECK(planned_trials(0, 1, b) == uint64_t(std::ceil(2 * std::log(100.0))));
    CHECK(planned_trials(1, 2, b) == uint64_t(std::ceil(16 * std::log(100.0))));
    b.max_trials = 50;
    CHECK(planned_trials(4, 4, b) == 50);
}

TEST_CASE("split-fpt trivial decisions")
{
    Instance inst{ 2, 2, { { 0, 1 } }, {}, { { 0 }, { 1 } }, std::nullopt };
    auto zero = solve_split_fpt(inst, 0, TrialBudget{});
    CHECK(zero.yes);
    REQUIRE(zero.witness);
    CHECK(zero.witness->embedding.empty());

    CHECK(! solve_split_fpt(inst, 3, TrialBudget{}).yes);
    CHECK_THROWS_AS(solve_split_fpt(inst, -1, TrialBudget{}), ParameterError);
}

TEST_CASE("split-fpt never reports a false yes and exhaustive mode is exact")
{
    std::mt19937_64 rng(34);
    TrialBudget random_budget;
    random_budget.mode = SeparationMode::Random;
    random_budget.max_trials = 20'000;
    TrialBudget exhaustive_budget;
    exhaustive_budget.mode = SeparationMode::Exhaustive;

    for (int round = 0 ; round < 150 ; ++round) {
        auto inst = oracles::random_instance(rng, 7, 7, 2, 2, 2, 0.6, 1);
        int opt = oracles::optimum(inst, Variant::OLSE);
        for (int k = 1 ; k <= 4 ; ++k) {
            random_budget.seed = round * 10 + k;
            auto r = solve_split_fpt(inst, k, random_budget);
            if (r.yes) {
                CHECK(k <= opt);
                REQUIRE(r.witness);
                CHECK(r.witness->size() == k);
                CHECK(oracles::valid(inst, r.witness->embedding, Variant::OLSE));
            }
            CHECK(solve_split_fpt(inst, k, exhaustive_budget).yes == (k <= opt));
        }
    }
}

TEST_CASE("random separation on G directly")
{
    Instance path{ 4, 4, { { 0, 1 }, { 1, 2 }, { 2, 3 } }, {}, { { 0 }, { 1 }, { 2 }, { 3 } }, std::nullopt };
    auto yes = solve_random_sep_simple(path, 2, TrialBudget{});
    CHECK(yes.yes);
    REQUIRE(yes.witness);
    CHECK(yes.witness->algorithm == "random-sep");
    CHECK(oracles::valid(path, yes.witness->embedding, Variant::OLSE));
    CHECK(! solve_random_sep_simple(path, 3, TrialBudget{}).yes);
    CHECK(oracles::optimum(path, Variant::OLSE) == 2);

    Instance plain{ 3, 3, {}, {}, { { 0 }, { 1 }, { 2 } }, std::nullopt };
    auto d = solve_random_sep_simple(plain, 3, TrialBudget{});
    CHECK(d.yes);
    CHECK(d.trials == 1);

    Instance h_edge{ 2, 2, {}, { { 0, 1 } }, { { 0 }, { 1 } }, std::nullopt };
    CHECK_THROWS_AS(solve_random_sep_simple(h_edge, 1, TrialBudget{}), PreconditionViolation);
}

TEST_CASE("random separation agrees with the oracle")
{
    std::mt19937_64 rng(35);
    for (int round = 0 ; round < 150 ; ++round) {
        auto inst = oracles::random_instance(rng, 7, 7, 2, 0, 2, 0.6, 1);
        int opt = oracles::optimum(inst, Variant::OLSE);
        for (int k = 1 ; k <= 4 ; ++k) {
            TrialBudget b;
            b.mode = SeparationMode::Exhaustive;
            auto d = solve_random_sep_simple(inst, k, b);
            CHECK(d.yes == (k <= opt));
            if (d.yes)
                CHECK(oracles::valid(inst, d.witness->embedding, Variant::OLSE));
        }
    }
}
