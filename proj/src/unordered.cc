/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/unordered.hh>
#include <olse/errors.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

using std::optional;
using std::pair;
using std::vector;

namespace olse
{
    SubsetFamily::SubsetFamily(const Instance & inst) :
        groups(inst.n_h),
        group_of(inst.n_g, -1)
    {
        for (int u = 0 ; u < inst.n_g ; ++u)
            if (! inst.lists[u].empty()) {
                group_of[u] = inst.lists[u].front();
                groups[group_of[u]].push_back(u);
            }
    }

    auto lse_rule_name(LseRule r) -> std::string_view
    {
        switch (r) {
            case LseRule::Isolated: return "isolated";
            case LseRule::Cycle:    return "cycle";
            case LseRule::Leaf:     return "leaf";
        }
        return "?";
    }

    namespace
    {
        auto require_lse_class(const Instance & inst) -> void
        {
            auto stats = degree_stats(inst);
            std::ostringstream msg;
            if (stats.delta_g > 1)
                msg << "LSE rules need Delta_G <= 1, found " << stats.delta_g;
            else if (stats.delta_h != 0)
                msg << "LSE rules need Delta_H = 0, found " << stats.delta_h;
            else if (stats.delta_l > 1)
                for (int u = 0 ; u < inst.n_g ; ++u)
                    if (inst.lists[u].size() > 1) {
                        msg << "LSE rules need Delta_L <= 1, list of G-vertex " << u << " has "
                            << inst.lists[u].size() << " entries";
                        break;
                    }
            if (! msg.str().empty())
                throw PreconditionViolation{ msg.str() };
        }

        struct LseState
        {
            const Instance & inst;
            SubsetFamily family;
            vector<int> partner;
            vector<char> alive;
            int alive_count = 0;
            vector<Assignment> chosen;
            vector<LseStep> steps;

            explicit LseState(const Instance & i) :
                inst(i),
                family(i),
                partner(i.n_g, -1),
                alive(i.n_g, 0)
            {
                for (auto & e : i.edges_g) {
                    partner[e.a] = e.b;
                    partner[e.b] = e.a;
                }
                for (int u = 0 ; u < i.n_g ; ++u)
                    if (family.group_of[u] != -1) {
                        alive[u] = 1;
                        ++alive_count;
                    }
            }

            auto neighbour(int u) const -> int
            {
                int w = partner[u];
                return (w != -1 && alive[w]) ? w : -1;
            }

            auto kill(int u) -> void
            {
                if (alive[u]) {
                    alive[u] = 0;
                    --alive_count;
                }
            }

            auto kill_group(int v) -> void
            {
                for (int u : family.groups[v])
                    kill(u);
            }

            auto alive_members(int v) const -> vector<int>
            {
                vector<int> result;
                for (int u : family.groups[v])
                    if (alive[u])
                        result.push_back(u);
                return result;
            }

            auto take(LseRule rule, const vector<int> & vertices, const vector<int> & groups_removed) -> void
            {
                int before = alive_count;
                for (int u : vertices) {
                    chosen.push_back({ u, family.group_of[u] });
                    // H is edgeless, so a chosen vertex excludes its G-neighbour
                    if (int w = neighbour(u) ; w != -1)
                        kill(w);
                }
                for (int v : groups_removed)
                    kill_group(v);
                for (int u : vertices)
                    kill(u);
                steps.push_back(LseStep{ rule, groups_removed, before, alive_count });
            }

            auto apply_isolated() -> bool
            {
                for (int v = 0 ; v < inst.n_h ; ++v)
                    for (int u : alive_members(v)) {
                        int w = neighbour(u);
                        if (w == -1 || family.group_of[w] == v) {
                            take(LseRule::Isolated, { u }, { v });
                            return true;
                        }
                    }
                return false;
            }

            struct GroupEdge
            {
                int to;
                int from_vertex;
                int to_vertex;
                int id;
            };

            auto group_graph() const -> vector<vector<GroupEdge>>
            {
                vector<vector<GroupEdge>> result(inst.n_h);
                int id = 0;
                for (int u = 0 ; u < inst.n_g ; ++u) {
                    int w = neighbour(u);
                    if (! alive[u] || w == -1 || w < u)
                        continue;
                    int gu = family.group_of[u], gw = family.group_of[w];
                    result[gu].push_back({ gw, u, w, id });
                    result[gw].push_back({ gu, w, u, id });
                    ++id;
                }
                for (auto & adj : result)
                    std::sort(adj.begin(), adj.end(), [] (const GroupEdge & a, const GroupEdge & b) {
                            return std::pair(a.to, a.id) < std::pair(b.to, b.id); });
                return result;
            }

            // A cycle of groups S_1..S_l as the vertices u_i in S_i whose edge
            // leads to S_{i+1}. Parallel edges count as a cycle of length two.
            auto find_cycle(const vector<vector<GroupEdge>> & graph) const -> optional<pair<vector<int>, vector<int>>>
            {
                int n = inst.n_h;
                vector<int> depth(n, -1), parent(n, -1);
                vector<GroupEdge> parent_edge(n);

                for (int root = 0 ; root < n ; ++root) {
                    if (depth[root] != -1 || graph[root].empty())
                        continue;

                    // iterative DFS: (node, next adjacency index)
                    vector<pair<int, std::size_t>> stack{ { root, 0 } };
                    depth[root] = 0;
                    while (! stack.empty()) {
                        auto & [x, idx] = stack.back();
                        if (idx == graph[x].size()) {
                            stack.pop_back();
                            continue;
                        }
                        auto e = graph[x][idx++];
                        if (parent[x] != -1 && e.id == parent_edge[x].id)
                            continue;
                        if (depth[e.to] == -1) {
                            depth[e.to] = depth[x] + 1;
                            parent[e.to] = x;
                            parent_edge[e.to] = e;
                            stack.push_back({ e.to, 0 });
                            continue;
                        }
                        if (depth[e.to] >= depth[x])
                            continue;

                        // back edge x -> ancestor e.to; the tree path runs e.to .. x
                        vector<int> path_groups;
                        for (int y = x ; y != e.to ; y = parent[y])
                            path_groups.push_back(y);
                        path_groups.push_back(e.to);
                        std::reverse(path_groups.begin(), path_groups.end());

                        vector<int> outgoing;
                        for (std::size_t i = 0 ; i + 1 < path_groups.size() ; ++i) {
                            auto & pe = parent_edge[path_groups[i + 1]];
                            // pe runs from path_groups[i] to path_groups[i+1]
                            outgoing.push_back(pe.from_vertex);
                        }
                        outgoing.push_back(e.from_vertex);
                        return pair{ path_groups, outgoing };
                    }
                }
                return std::nullopt;
            }

            auto apply_cycle() -> bool
            {
                auto cycle = find_cycle(group_graph());
                if (! cycle)
                    return false;
                take(LseRule::Cycle, cycle->second, cycle->first);
                return true;
            }

            auto apply_leaf() -> bool
            {
                auto graph = group_graph();
                for (int v = 0 ; v < inst.n_h ; ++v) {
                    if (graph[v].empty())
                        continue;
                    bool single = std::all_of(graph[v].begin(), graph[v].end(),
                            [&] (const GroupEdge & e) { return e.to == graph[v].front().to; });
                    if (! single)
                        continue;
                    auto members = alive_members(v);
                    if (members.size() != 1)
                        throw InternalError{ "LSE rules: leaf group with more than one vertex" };
                    take(LseRule::Leaf, members, { v });
                    return true;
                }
                return false;
            }
        };
    }

    auto solve_lse_rules(const Instance & inst) -> LseResult
    {
        require_lse_class(inst);

        LseState state(inst);
        while (state.alive_count > 0) {
            if (state.apply_isolated())
                continue;
            if (state.apply_cycle())
                continue;
            if (state.apply_leaf())
                continue;
            throw InternalError{ "LSE rules: no rule applies to a nonempty graph" };
        }

        return LseResult{ Solution{ Embedding{ std::move(state.chosen) }, "lse-rules" }, std::move(state.steps) };
    }

    auto MatchingGraph::weight(int x, int y) const -> int
    {
        for (auto & e : weighted_edges)
            if (e.x == x && e.y == y)
                return e.weight;
        return 0;
    }

    namespace
    {
        auto require_matching_class(const Instance & inst) -> void
        {
            auto stats = degree_stats(inst);
            if (stats.delta_g > 1 || stats.delta_h > 1) {
                std::ostringstream msg;
                msg << "matching reduction needs Delta_G <= 1 and Delta_H <= 1, found Delta_G = "
                    << stats.delta_g << ", Delta_H = " << stats.delta_h;
                throw PreconditionViolation{ msg.str() };
            }
        }

        auto make_nodes(int n, const EdgeList & edges, vector<int> & node_of) -> vector<MatchingNode>
        {
            vector<MatchingNode> nodes;
            node_of.assign(n, -1);

            EdgeList sorted;
            for (auto & e : edges)
                sorted.push_back(make_edge(e.a, e.b));
            std::sort(sorted.begin(), sorted.end());

            for (auto & e : sorted) {
                node_of[e.a] = node_of[e.b] = int(nodes.size());
                nodes.push_back({ NodeKind::Edge, e.a, e.b });
            }
            for (int v = 0 ; v < n ; ++v)
                if (node_of[v] == -1) {
                    node_of[v] = int(nodes.size());
                    nodes.push_back({ NodeKind::Vertex, v });
                }
            return nodes;
        }

        auto endpoints(const MatchingNode & n) -> vector<int>
        {
            if (n.kind == NodeKind::Edge)
                return { n.a, n.b };
            return { n.a };
        }

        auto in_list(const Instance & inst, int u, int v) -> bool
        {
            auto & l = inst.lists[u];
            return std::binary_search(l.begin(), l.end(), v);
        }

        // Orientation of a weight-2 edge: u->v, u'->v' if possible, else the
        // crossed one. Lexicographically smallest pair set wins.
        auto orient(const Instance & inst, const MatchingNode & x, const MatchingNode & y) -> optional<vector<Assignment>>
        {
            int u = x.a, up = x.b, v = std::min(y.a, y.b), vp = std::max(y.a, y.b);
            if (in_list(inst, u, v) && in_list(inst, up, vp))
                return vector<Assignment>{ { u, v }, { up, vp } };
            if (in_list(inst, u, vp) && in_list(inst, up, v))
                return vector<Assignment>{ { u, vp }, { up, v } };
            return std::nullopt;
        }
    }

    auto build_matching_graph(const Instance & inst) -> MatchingGraph
    {
        require_matching_class(inst);

        MatchingGraph result;
        vector<int> x_of, y_of;
        result.x_nodes = make_nodes(inst.n_g, inst.edges_g, x_of);
        result.y_nodes = make_nodes(inst.n_h, inst.edges_h, y_of);

        // Every list entry u -> v links the node holding u to the node holding
        // v. One edge per node pair; edge-to-edge pairs weigh 2 when both
        // endpoints can be mapped across consistently.
        std::map<pair<int, int>, int> weights;
        for (int u = 0 ; u < inst.n_g ; ++u)
            for (int v : inst.lists[u]) {
                int x = x_of[u], y = y_of[v];
                if (weights.count({ x, y }))
                    continue;
                auto & xn = result.x_nodes[x];
                auto & yn = result.y_nodes[y];
                int w = 1;
                if (xn.kind == NodeKind::Edge && yn.kind == NodeKind::Edge && orient(inst, xn, yn))
                    w = 2;
                weights[{ x, y }] = w;
            }

        for (auto & [xy, w] : weights)
            result.weighted_edges.push_back({ xy.first, xy.second, w });

        return result;
    }

    auto max_weight_matching(const MatchingGraph & mg) -> Matching
    {
        int nx = int(mg.x_nodes.size()), ny = int(mg.y_nodes.size());
        int n = std::max(nx, ny);
        Matching result;
        if (n == 0 || mg.weighted_edges.empty())
            return result;

        // minimise -weight on an n x n matrix, absent edges cost 0
        vector<vector<long long>> cost(n + 1, vector<long long>(n + 1, 0));
        for (auto & e : mg.weighted_edges)
            cost[e.x + 1][e.y + 1] = -e.weight;

        const long long inf = std::numeric_limits<long long>::max() / 4;
        vector<long long> u(n + 1, 0), v(n + 1, 0);
        vector<int> p(n + 1, 0), way(n + 1, 0);
        for (int i = 1 ; i <= n ; ++i) {
            p[0] = i;
            int j0 = 0;
            vector<long long> minv(n + 1, inf);
            vector<char> used(n + 1, 0);
            do {
                used[j0] = 1;
                int i0 = p[j0], j1 = 0;
                long long delta = inf;
                for (int j = 1 ; j <= n ; ++j)
                    if (! used[j]) {
                        long long cur = cost[i0][j] - u[i0] - v[j];
                        if (cur < minv[j]) {
                            minv[j] = cur;
                            way[j] = j0;
                        }
                        if (minv[j] < delta) {
                            delta = minv[j];
                            j1 = j;
                        }
                    }
                for (int j = 0 ; j <= n ; ++j)
                    if (used[j]) {
                        u[p[j]] += delta;
                        v[j] -= delta;
                    }
                    else
                        minv[j] -= delta;
                j0 = j1;
            } while (p[j0] != 0);
            do {
                int j1 = way[j0];
                p[j0] = p[j1];
                j0 = j1;
            } while (j0);
        }

        for (int j = 1 ; j <= n ; ++j) {
            int i = p[j];
            if (i >= 1 && i <= nx && j <= ny && cost[i][j] < 0) {
                result.pairs.push_back({ i - 1, j - 1 });
                result.weight += int(-cost[i][j]);
            }
        }
        std::sort(result.pairs.begin(), result.pairs.end());
        return result;
    }

    auto matching_to_solution(const MatchingGraph & mg, const Matching & matching, const Instance & inst) -> Solution
    {
        vector<Assignment> pairs;
        vector<char> x_used(mg.x_nodes.size(), 0), y_used(mg.y_nodes.size(), 0);

        for (auto & [x, y] : matching.pairs) {
            if (x < 0 || x >= int(mg.x_nodes.size()) || y < 0 || y >= int(mg.y_nodes.size()))
                throw InternalError{ "matching refers to a node outside the matching graph" };
            if (x_used[x] || y_used[y])
                throw InternalError{ "matching uses a node twice" };
            x_used[x] = y_used[y] = 1;

            int w = mg.weight(x, y);
            auto & xn = mg.x_nodes[x];
            auto & yn = mg.y_nodes[y];

            if (w == 2) {
                if (xn.kind != NodeKind::Edge || yn.kind != NodeKind::Edge)
                    throw InternalError{ "weight-2 edge between nodes not both of edge origin" };
                auto oriented = orient(inst, xn, yn);
                if (! oriented)
                    throw InternalError{ "weight-2 edge whose endpoints cannot be mapped consistently" };
                pairs.insert(pairs.end(), oriented->begin(), oriented->end());
            }
            else if (w == 1) {
                optional<Assignment> best;
                for (int g : endpoints(xn))
                    for (int h : endpoints(yn))
                        if (in_list(inst, g, h) && (! best || Assignment{ g, h } < *best))
                            best = Assignment{ g, h };
                if (! best)
                    throw InternalError{ "weight-1 edge without a list entry between its nodes" };
                pairs.push_back(*best);
            }
            else
                throw InternalError{ "matched pair is not an edge of the matching graph" };
        }

        return Solution{ Embedding{ std::move(pairs) }, "lise-matching" };
    }

    auto solve_lise_matching(const Instance & inst) -> Solution
    {
        auto mg = build_matching_graph(inst);
        auto m = max_weight_matching(mg);
        return matching_to_solution(mg, m, inst);
    }
}
