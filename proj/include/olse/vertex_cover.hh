/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_VERTEX_COVER_HH
#define OLSE_GUARD_VERTEX_COVER_HH 1

#include <olse/instance.hh>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace olse
{
    /// Minimum vertex cover by two-way branching on an uncovered edge.
    auto min_vertex_cover(const EdgeList & edges, int n) -> std::vector<int>;

    /// The part of a solution that lies inside the vertex cover: members in
    /// ascending order and their images.
    struct CoverGuess
    {
        std::vector<int> s_c;
        std::vector<int> phi_c;
    };

    /// Whether the guess is order-preserving, injective, list-respecting and
    /// maps G-edges inside s_c to H-edges.
    auto guess_is_valid(const Instance &, const CoverGuess &) -> bool;

    /// Lists of the vertices outside the cover, with every candidate that
    /// clashes with the guess removed. Cover vertices get empty lists.
    auto prune_lists(const Instance &, const std::vector<int> & cover, const CoverGuess &)
        -> std::vector<std::vector<int>>;

    /// Half-open index ranges: g_intervals[j] holds the G-vertices strictly
    /// between the (j-1)th and jth guessed cover vertices, h_intervals[j] the
    /// H-vertices strictly between their images.
    struct IntervalPartition
    {
        std::vector<std::pair<int, int>> g_intervals;
        std::vector<std::pair<int, int>> h_intervals;
    };

    auto partition_intervals(const Instance &, const CoverGuess &) -> IntervalPartition;

    struct VcDecision
    {
        bool yes = false;
        std::optional<Solution> witness;
        std::vector<int> cover;
        std::uint64_t guesses_examined = 0;
        std::uint64_t guess_bound = 0;
    };

    /// Decides OLSE (subgraph semantics) in O*((2 Delta_L)^nu) by guessing
    /// the solution inside a minimum vertex cover and running the edgeless
    /// dynamic program between consecutive guessed vertices.
    auto solve_vc_fpt(const Instance &, int k) -> VcDecision;

    /// Same enumeration, returning a maximum embedding.
    auto solve_vc_max(const Instance &) -> VcDecision;
}

#endif
