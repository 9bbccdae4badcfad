/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_UNORDERED_HH
#define OLSE_GUARD_UNORDERED_HH 1

#include <olse/instance.hh>

#include <string_view>
#include <vector>

namespace olse
{
    /**
     * The grouping used by the LSE rules: groups[v] holds the G-vertices whose
     * list is exactly {v}. Groups are disjoint because every list has at most
     * one entry. Vertices with an empty list belong to no group.
     */
    struct SubsetFamily
    {
        std::vector<std::vector<int>> groups;
        std::vector<int> group_of;

        explicit SubsetFamily(const Instance &);
    };

    enum class LseRule
    {
        Isolated,
        Cycle,
        Leaf
    };

    auto lse_rule_name(LseRule) -> std::string_view;

    struct LseStep
    {
        LseRule rule;
        std::vector<int> groups;
        int vertices_before;
        int vertices_after;
    };

    struct LseResult
    {
        Solution solution;
        std::vector<LseStep> steps;
    };

    /// Exact opt-LSE for Delta_G <= 1, Delta_H = 0, Delta_L <= 1 by the three
    /// reduction rules. Throws PreconditionViolation outside that class.
    auto solve_lse_rules(const Instance &) -> LseResult;

    enum class NodeKind
    {
        Edge,
        Vertex
    };

    /// A node of the bipartite matching graph: either an edge (a, b) of the
    /// source graph, or an isolated vertex a (b unused).
    struct MatchingNode
    {
        NodeKind kind;
        int a;
        int b = -1;

        auto operator== (const MatchingNode &) const -> bool = default;
    };

    struct WeightedEdge
    {
        int x;
        int y;
        int weight;

        auto operator== (const WeightedEdge &) const -> bool = default;
    };

    struct MatchingGraph
    {
        std::vector<MatchingNode> x_nodes;
        std::vector<MatchingNode> y_nodes;
        std::vector<WeightedEdge> weighted_edges;

        auto weight(int x, int y) const -> int;
    };

    /// Builds the weighted bipartite graph whose matchings are exactly the
    /// LISE embeddings, for Delta_G <= 1 and Delta_H <= 1.
    auto build_matching_graph(const Instance &) -> MatchingGraph;

    struct Matching
    {
        std::vector<std::pair<int, int>> pairs;
        int weight = 0;
    };

    /// Maximum-weight matching via shortest augmenting paths with potentials
    /// (the Hungarian method).
    auto max_weight_matching(const MatchingGraph &) -> Matching;

    /// Reads an LISE embedding of size w(M) off any matching M of the graph.
    /// Throws InternalError if a pair is not an edge or the tags disagree.
    auto matching_to_solution(const MatchingGraph &, const Matching &, const Instance &) -> Solution;

    /// build_matching_graph, max_weight_matching, matching_to_solution.
    auto solve_lise_matching(const Instance &) -> Solution;
}

#endif
