/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/vertex_cover.hh>
#include <olse/exact.hh>
#include <olse/errors.hh>

#include <algorithm>
#include <functional>
#include <limits>

using std::optional;
using std::pair;
using std::uint64_t;
using std::vector;

namespace olse
{
    auto min_vertex_cover(const EdgeList & edges, int n) -> vector<int>
    {
        vector<char> best(n, 0);
        int best_size = 0;
        for (auto & e : edges)
            if (! best[e.a] && ! best[e.b]) {
                best[e.a] = best[e.b] = 1;
                best_size += 2;
            }

        vector<char> in_cover(n, 0);
        std::function<void (int)> search = [&] (int size) {
            if (size >= best_size)
                return;
            auto uncovered = std::find_if(edges.begin(), edges.end(),
                    [&] (const Edge & e) { return ! in_cover[e.a] && ! in_cover[e.b]; });
            if (uncovered == edges.end()) {
                best = in_cover;
                best_size = size;
                return;
            }
            for (int v : { std::min(uncovered->a, uncovered->b), std::max(uncovered->a, uncovered->b) }) {
                in_cover[v] = 1;
                search(size + 1);
                in_cover[v] = 0;
            }
        };
        search(0);

        vector<int> result;
        for (int v = 0 ; v < n ; ++v)
            if (best[v])
                result.push_back(v);
        return result;
    }

    auto guess_is_valid(const Instance & inst, const CoverGuess & guess) -> bool
    {
        vector<Assignment> pairs;
        for (std::size_t i = 0 ; i < guess.s_c.size() ; ++i)
            pairs.push_back({ guess.s_c[i], guess.phi_c[i] });
        return check_embedding(inst, Embedding{ std::move(pairs) }, Variant::OLSE).ok();
    }

    auto prune_lists(const Instance & inst, const vector<int> & cover, const CoverGuess & guess) -> vector<vector<int>>
    {
        Adjacency adj_g(inst.n_g, inst.edges_g), adj_h(inst.n_h, inst.edges_h);
        vector<char> in_cover(inst.n_g, 0);
        for (int c : cover)
            in_cover[c] = 1;

        vector<vector<int>> result(inst.n_g);
        for (int u = 0 ; u < inst.n_g ; ++u) {
            if (in_cover[u])
                continue;
            for (int v : inst.lists[u]) {
                bool ok = true;
                for (std::size_t j = 0 ; ok && j < guess.s_c.size() ; ++j) {
                    int w = guess.s_c[j], image = guess.phi_c[j];
                    if (v == image)
                        ok = false;
                    else if (adj_g.adjacent(u, w) && ! adj_h.adjacent(v, image))
                        ok = false;
                    else if ((u < w) != (v < image))
                        ok = false;
                }
                if (ok)
                    result[u].push_back(v);
            }
        }
        return result;
    }

    auto partition_intervals(const Instance & inst, const CoverGuess & guess) -> IntervalPartition
    {
        IntervalPartition result;
        int g_lo = 0, h_lo = 0;
        for (std::size_t j = 0 ; j < guess.s_c.size() ; ++j) {
            result.g_intervals.push_back({ g_lo, guess.s_c[j] });
            result.h_intervals.push_back({ h_lo, guess.phi_c[j] });
            g_lo = guess.s_c[j] + 1;
            h_lo = guess.phi_c[j] + 1;
        }
        result.g_intervals.push_back({ g_lo, inst.n_g });
        result.h_intervals.push_back({ h_lo, inst.n_h });
        return result;
    }

    namespace
    {
        auto saturating_power(uint64_t base, std::size_t exponent) -> uint64_t
        {
            uint64_t result = 1;
            for (std::size_t i = 0 ; i < exponent ; ++i) {
                if (result > std::numeric_limits<uint64_t>::max() / base)
                    return std::numeric_limits<uint64_t>::max();
                result *= base;
            }
            return result;
        }

        /// Best completion of a valid guess: the guess itself plus the interval
        /// dynamic programs.
        auto complete_guess(const Instance & inst, const vector<int> & cover, const CoverGuess & guess) -> Embedding
        {
            auto lists = prune_lists(inst, cover, guess);
            auto parts = partition_intervals(inst, guess);

            vector<Assignment> pairs;
            for (std::size_t i = 0 ; i < guess.s_c.size() ; ++i)
                pairs.push_back({ guess.s_c[i], guess.phi_c[i] });

            for (std::size_t j = 0 ; j < parts.g_intervals.size() ; ++j) {
                auto [g_lo, g_hi] = parts.g_intervals[j];
                auto [h_lo, h_hi] = parts.h_intervals[j];

                Instance sub;
                sub.n_g = g_hi - g_lo;
                sub.n_h = std::max(0, h_hi - h_lo);
                sub.lists.resize(sub.n_g);
                for (int u = g_lo ; u < g_hi ; ++u)
                    for (int v : lists[u]) {
                        if (v < h_lo || v >= h_hi)
                            throw InternalError{ "pruned list entry outside its interval" };
                        sub.lists[u - g_lo].push_back(v - h_lo);
                    }

                auto dp = solve_dp_no_edges(sub);
                for (auto & [g, h] : dp.solution.embedding.pairs())
                    pairs.push_back({ g + g_lo, h + h_lo });
            }

            return Embedding{ std::move(pairs) };
        }

        /// Enumerates guesses by subset size, then lexicographically by subset,
        /// then lexicographically over list positions. `accept` returns true
        /// to stop.
        auto enumerate(const Instance & inst, VcDecision & decision,
                const std::function<bool (const CoverGuess &, const Embedding &)> & accept) -> void
        {
            auto & cover = decision.cover;
            cover = min_vertex_cover(inst.edges_g, inst.n_g);

            int delta_l = degree_stats(inst).delta_l;
            decision.guess_bound = saturating_power(uint64_t(1 + delta_l), cover.size());

            vector<char> in_cover(inst.n_g, 0);
            for (int c : cover)
                in_cover[c] = 1;
            for (auto & e : inst.edges_g)
                if (! in_cover[e.a] && ! in_cover[e.b])
                    throw InternalError{ "vertex cover misses a G-edge, interval inputs would have edges" };

            int nu = int(cover.size());
            for (int size = 0 ; size <= nu ; ++size) {
                vector<int> pick(size);
                for (int i = 0 ; i < size ; ++i)
                    pick[i] = i;

                while (true) {
                    CoverGuess guess;
                    for (int i : pick)
                        guess.s_c.push_back(cover[i]);

                    bool has_mapping = std::all_of(guess.s_c.begin(), guess.s_c.end(),
                            [&] (int u) { return ! inst.lists[u].empty(); });
                    vector<std::size_t> position(size, 0);
                    while (has_mapping) {
                        guess.phi_c.clear();
                        for (int i = 0 ; i < size ; ++i)
                            guess.phi_c.push_back(inst.lists[guess.s_c[i]][position[i]]);

                        ++decision.guesses_examined;
                        if (guess_is_valid(inst, guess))
                            if (accept(guess, complete_guess(inst, cover, guess)))
                                return;

                        int i = size - 1;
                        while (i >= 0 && ++position[i] == inst.lists[guess.s_c[i]].size())
                            position[i--] = 0;
                        if (i < 0)
                            break;
                    }

                    int i = size - 1;
                    while (i >= 0 && pick[i] == nu - size + i)
                        --i;
                    if (i < 0)
                        break;
                    ++pick[i];
                    for (int j = i + 1 ; j < size ; ++j)
                        pick[j] = pick[j - 1] + 1;
                }
            }
        }

        auto finish(const Instance & inst, VcDecision & decision) -> void
        {
            if (decision.guesses_examined > decision.guess_bound)
                throw InternalError{ "vertex cover enumeration exceeded its guess bound" };
            if (decision.witness)
                if (auto check = check_embedding(inst, decision.witness->embedding, Variant::OLSE) ; ! check)
                    throw InternalError{ "vc-fpt produced an invalid witness: " + check.detail };
        }
    }

    auto solve_vc_fpt(const Instance & inst, int k) -> VcDecision
    {
        VcDecision decision;
        if (k <= 0) {
            decision.yes = true;
            decision.witness = Solution{ Embedding{}, "vc-fpt" };
            return decision;
        }

        if (k > std::min(inst.n_g, inst.n_h)) {
            decision.cover = min_vertex_cover(inst.edges_g, inst.n_g);
            return decision;
        }

        enumerate(inst, decision, [&] (const CoverGuess &, const Embedding & emb) {
                if (emb.size() < k)
                    return false;
                decision.yes = true;
                decision.witness = Solution{ emb, "vc-fpt" };
                return true;
            });

        finish(inst, decision);
        return decision;
    }

    auto solve_vc_max(const Instance & inst) -> VcDecision
    {
        VcDecision decision;
        decision.yes = true;
        decision.witness = Solution{ Embedding{}, "vc-fpt" };
        enumerate(inst, decision, [&] (const CoverGuess &, const Embedding & emb) {
                if (emb.size() > decision.witness->size())
                    decision.witness = Solution{ emb, "vc-fpt" };
                return false;
            });
        finish(inst, decision);
        return decision;
    }
}
