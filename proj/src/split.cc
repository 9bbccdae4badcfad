/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/split.hh>
#include <olse/exact.hh>
#include <olse/errors.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

using std::optional;
using std::uint64_t;
using std::vector;

namespace olse
{
    namespace
    {
        auto make_pair_of(int a, int b) -> SegmentPair
        {
            return a < b ? SegmentPair{ a, b } : SegmentPair{ b, a };
        }

        auto sorted_unique(vector<SegmentPair> v) -> vector<SegmentPair>
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto cross_pairs(const EdgeList & edges, const vector<vector<int>> & segments_of) -> vector<SegmentPair>
        {
            vector<SegmentPair> result;
            for (auto & e : edges)
                for (int s : segments_of[e.a])
                    for (int t : segments_of[e.b])
                        result.push_back(make_pair_of(s, t));
            return sorted_unique(std::move(result));
        }
    }

    auto split(const Instance & inst) -> SplitInstance
    {
        // Splitting G: the copies of u occupy consecutive positions, and the
        // first copy takes the list edge to the last list entry.
        struct Raw
        {
            int g_pos, h_pos, u, v;
        };
        vector<Raw> raw;
        int g_next = 0;
        for (int u = 0 ; u < inst.n_g ; ++u) {
            int r = int(inst.lists[u].size());
            for (int t = 0 ; t < r ; ++t)
                raw.push_back({ g_next + (r - 1 - t), -1, u, inst.lists[u][t] });
            g_next += r;
        }

        // Splitting H: same rule against the order of G_split.
        vector<vector<int>> into(inst.n_h);
        for (int i = 0 ; i < int(raw.size()) ; ++i)
            into[raw[i].v].push_back(i);
        int h_next = 0;
        for (int v = 0 ; v < inst.n_h ; ++v) {
            auto & ids = into[v];
            std::sort(ids.begin(), ids.end(), [&] (int a, int b) { return raw[a].g_pos < raw[b].g_pos; });
            int r = int(ids.size());
            for (int q = 0 ; q < r ; ++q)
                raw[ids[q]].h_pos = h_next + (r - 1 - q);
            h_next += r;
        }

        std::sort(raw.begin(), raw.end(), [] (const Raw & a, const Raw & b) { return a.g_pos < b.g_pos; });

        SplitInstance result;
        vector<vector<int>> from_g(inst.n_g), to_h(inst.n_h);
        for (int s = 0 ; s < int(raw.size()) ; ++s) {
            result.segments.push_back({ raw[s].g_pos, raw[s].h_pos });
            result.origin_g.push_back(raw[s].u);
            result.origin_h.push_back(raw[s].v);
            from_g[raw[s].u].push_back(s);
            to_h[raw[s].v].push_back(s);
        }

        result.split_edges_g = cross_pairs(inst.edges_g, from_g);
        result.split_edges_h = cross_pairs(inst.edges_h, to_h);
        return result;
    }

    auto simplify(const SplitInstance & s) -> SplitInstance
    {
        SplitInstance result = s;
        std::set<SegmentPair> g_edges(s.split_edges_g.begin(), s.split_edges_g.end());
        for (auto & p : s.split_edges_h)
            g_edges.erase(p);
        result.split_edges_g.assign(g_edges.begin(), g_edges.end());
        result.split_edges_h.clear();
        return result;
    }

    auto ConflictGraph::conflict_degrees() const -> vector<int>
    {
        vector<int> result(segments.size(), 0);
        for (auto & [a, b] : conflict_edges) {
            ++result[a];
            ++result[b];
        }
        return result;
    }

    auto ConflictGraph::max_conflict_degree() const -> int
    {
        auto d = conflict_degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }

    auto build_conflict_graph(const SplitInstance & s) -> ConflictGraph
    {
        if (! s.split_edges_h.empty())
            throw PreconditionViolation{ "conflict graph needs a simplified split instance (H_split edgeless)" };
        return ConflictGraph{ s.segments, s.origin_g, s.origin_h, s.split_edges_g };
    }

    auto conflict_graph_of(const Instance & inst) -> ConflictGraph
    {
        return build_conflict_graph(simplify(split(inst)));
    }

    auto segments_cross(const Segment & a, const Segment & b) -> bool
    {
        return (a.g_pos < b.g_pos) != (a.h_pos < b.h_pos);
    }

    auto permutation_mis(const vector<Segment> & segments) -> vector<int>
    {
        vector<int> order(segments.size());
        for (int i = 0 ; i < int(order.size()) ; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&] (int a, int b) { return segments[a].g_pos < segments[b].g_pos; });

        // tails[l]: index into order of the chain of length l + 1 with the
        // smallest final h_pos
        vector<int> tails, parent(order.size(), -1);
        for (int i = 0 ; i < int(order.size()) ; ++i) {
            int h = segments[order[i]].h_pos;
            auto it = std::lower_bound(tails.begin(), tails.end(), h,
                    [&] (int t, int value) { return segments[order[t]].h_pos < value; });
            int len = int(it - tails.begin());
            parent[i] = len > 0 ? tails[len - 1] : -1;
            if (it == tails.end())
                tails.push_back(i);
            else
                *it = i;
        }

        vector<int> result;
        for (int i = tails.empty() ? -1 : tails.back() ; i != -1 ; i = parent[i])
            result.push_back(order[i]);
        std::reverse(result.begin(), result.end());
        return result;
    }

    auto segments_to_embedding(const ConflictGraph & cg, const vector<int> & chosen) -> Embedding
    {
        vector<Assignment> pairs;
        for (int s : chosen)
            pairs.push_back({ cg.origin_g[s], cg.origin_h[s] });
        return Embedding{ std::move(pairs) };
    }

    auto planned_trials(int conflict_bound, int k, const TrialBudget & budget) -> uint64_t
    {
        if (k <= 0)
            return 1;
        double exponent = double(conflict_bound + 1) * k;
        double log_term = std::log(1.0 / budget.delta);
        double wanted = std::ceil(std::exp2(exponent) * log_term);
        if (! (wanted < double(budget.max_trials)))
            return std::max<uint64_t>(1, budget.max_trials);
        return std::max<uint64_t>(1, uint64_t(wanted));
    }

    namespace
    {
        using Evaluate = std::function<optional<Embedding> (const vector<char> & green)>;

        /// Shared colouring loop. Only vertices with at least one conflict
        /// edge are coloured; the rest are always green, which loses nothing
        /// since a green vertex only hurts its conflict neighbours.
        auto separate(int n, const vector<vector<int>> & conflicts, int k, const TrialBudget & budget,
                const Evaluate & evaluate) -> SeparationDecision
        {
            SeparationDecision result;

            vector<int> relevant;
            for (int v = 0 ; v < n ; ++v) {
                result.conflict_bound = std::max(result.conflict_bound, int(conflicts[v].size()));
                if (! conflicts[v].empty())
                    relevant.push_back(v);
            }
            result.relevant_vertices = int(relevant.size());
            result.planned_trials = planned_trials(result.conflict_bound, k, budget);

            int r = int(relevant.size());
            bool exhaustive = budget.mode == SeparationMode::Exhaustive
                || (budget.mode == SeparationMode::Auto && r <= budget.exhaustive_threshold
                        && r < 63 && (uint64_t(1) << r) <= result.planned_trials);
            if (exhaustive && r >= 63)
                throw ParameterError{ "exhaustive separation over more than 62 coloured vertices" };

            vector<char> green(n, 1);
            auto attempt = [&] () -> bool {
                ++result.trials;
                if (auto emb = evaluate(green)) {
                    result.yes = true;
                    result.witness = Solution{ std::move(*emb), "" };
                    return true;
                }
                return false;
            };

            if (exhaustive) {
                result.exhaustive = true;
                result.planned_trials = uint64_t(1) << r;
                for (uint64_t mask = 0 ; mask < (uint64_t(1) << r) ; ++mask) {
                    // mask bit set = red; mask 0 is the all-green colouring
                    for (int i = 0 ; i < r ; ++i)
                        green[relevant[i]] = ! ((mask >> i) & 1);
                    if (attempt())
                        return result;
                }
                result.confidence = 1.0;
                return result;
            }

            std::mt19937_64 rng(budget.seed);
            std::bernoulli_distribution coin(0.5);
            for (uint64_t trial = 0 ; trial < result.planned_trials ; ++trial) {
                if (trial > 0)
                    for (int v : relevant)
                        green[v] = coin(rng);
                if (attempt())
                    return result;
            }

            double p = std::exp2(-double(result.conflict_bound + 1) * k);
            result.confidence = 1.0 - std::pow(1.0 - p, double(result.trials));
            return result;
        }

        auto finish(const Instance & inst, SeparationDecision decision, int k, const char * tag) -> SeparationDecision
        {
            if (decision.witness) {
                auto pairs = decision.witness->embedding.pairs();
                pairs.resize(k);
                decision.witness = Solution{ Embedding{ std::move(pairs) }, tag };
                if (auto check = check_embedding(inst, decision.witness->embedding, Variant::OLSE) ; ! check)
                    throw InternalError{ std::string(tag) + " produced an invalid witness: " + check.detail };
            }
            return decision;
        }

        auto trivial_decision(int k, int ceiling) -> optional<SeparationDecision>
        {
            if (k < 0)
                throw ParameterError{ "k must be nonnegative" };
            if (k == 0) {
                SeparationDecision d;
                d.yes = true;
                d.exhaustive = true;
                d.witness = Solution{ Embedding{}, "" };
                return d;
            }
            if (k > ceiling) {
                SeparationDecision d;
                d.exhaustive = true;
                return d;
            }
            return std::nullopt;
        }
    }

    auto solve_split_fpt(const Instance & inst, int k, const TrialBudget & budget) -> SeparationDecision
    {
        auto cg = conflict_graph_of(inst);

        int ceiling = std::min({ inst.n_g, inst.n_h, int(cg.segments.size()) });
        if (auto d = trivial_decision(k, ceiling))
            return finish(inst, *d, k, "split-fpt");

        int m = int(cg.segments.size());
        vector<vector<int>> conflicts(m);
        for (auto & [a, b] : cg.conflict_edges) {
            conflicts[a].push_back(b);
            conflicts[b].push_back(a);
        }

        vector<Segment> candidates;
        vector<int> candidate_ids;
        auto evaluate = [&] (const vector<char> & green) -> optional<Embedding> {
            candidates.clear();
            candidate_ids.clear();
            for (int s = 0 ; s < m ; ++s) {
                if (! green[s])
                    continue;
                bool isolated = std::none_of(conflicts[s].begin(), conflicts[s].end(),
                        [&] (int t) { return green[t]; });
                if (isolated) {
                    candidates.push_back(cg.segments[s]);
                    candidate_ids.push_back(s);
                }
            }
            if (int(candidates.size()) < k)
                return std::nullopt;
            auto mis = permutation_mis(candidates);
            if (int(mis.size()) < k)
                return std::nullopt;
            vector<int> chosen;
            for (int i : mis)
                chosen.push_back(candidate_ids[i]);
            return segments_to_embedding(cg, chosen);
        };

        return finish(inst, separate(m, conflicts, k, budget, evaluate), k, "split-fpt");
    }

    auto solve_random_sep_simple(const Instance & inst, int k, const TrialBudget & budget) -> SeparationDecision
    {
        if (! inst.edges_h.empty()) {
            auto & e = inst.edges_h.front();
            std::ostringstream msg;
            msg << "random separation needs edgeless H, found H-edge (" << e.a << "," << e.b << ")";
            throw PreconditionViolation{ msg.str() };
        }

        if (auto d = trivial_decision(k, std::min(inst.n_g, inst.n_h)))
            return finish(inst, *d, k, "random-sep");

        Adjacency adj(inst.n_g, inst.edges_g);
        vector<vector<int>> conflicts(inst.n_g);
        for (int u = 0 ; u < inst.n_g ; ++u)
            conflicts[u] = adj.neighbours(u);

        Instance green_part;
        green_part.n_g = inst.n_g;
        green_part.n_h = inst.n_h;
        green_part.lists.resize(inst.n_g);

        auto evaluate = [&] (const vector<char> & green) -> optional<Embedding> {
            for (int u = 0 ; u < inst.n_g ; ++u) {
                bool keep = green[u] && std::none_of(conflicts[u].begin(), conflicts[u].end(),
                        [&] (int w) { return green[w]; });
                if (keep)
                    green_part.lists[u] = inst.lists[u];
                else
                    green_part.lists[u].clear();
            }
            auto dp = solve_dp_no_edges(green_part);
            if (dp.solution.size() < k)
                return std::nullopt;
            return dp.solution.embedding;
        };

        return finish(inst, separate(inst.n_g, conflicts, k, budget, evaluate), k, "random-sep");
    }
}
