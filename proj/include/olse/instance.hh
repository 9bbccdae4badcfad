/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_INSTANCE_HH
#define OLSE_GUARD_INSTANCE_HH 1

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace olse
{
    /// An undirected edge. Constructed through make_edge() it is stored with
    /// a < b, but instances read from disk are validated rather than trusted.
    struct Edge
    {
        int a;
        int b;

        auto operator<=> (const Edge &) const = default;
    };

    using EdgeList = std::vector<Edge>;

    auto make_edge(int a, int b) -> Edge;

    /// A plain graph on vertices 0..n-1.
    struct SimpleGraph
    {
        int n = 0;
        EdgeList edges;
    };

    /**
     * Two linearly ordered graphs G and H plus the list map L.
     *
     * Vertices are identified by their position in the linear order, so
     * G-vertex i precedes G-vertex j iff i < j (likewise for H). lists[u]
     * is L(u), strictly ascending.
     */
    struct Instance
    {
        int n_g = 0;
        int n_h = 0;
        EdgeList edges_g;
        EdgeList edges_h;
        std::vector<std::vector<int>> lists;
        std::optional<int> k;

        auto operator== (const Instance &) const -> bool = default;
    };

    enum class Variant
    {
        OLSE,
        OLISE,
        LSE,
        LISE
    };

    auto is_ordered(Variant) -> bool;
    auto is_induced(Variant) -> bool;
    auto variant_name(Variant) -> std::string_view;
    auto parse_variant(std::string_view) -> std::optional<Variant>;

    struct Assignment
    {
        int g;
        int h;

        auto operator<=> (const Assignment &) const = default;
    };

    /// A partial map from G-vertices to H-vertices, kept sorted by G-vertex.
    /// Injectivity is a property checked by check_embedding(), not enforced
    /// here, so that broken certificates can still be represented.
    class Embedding
    {
        private:
            std::vector<Assignment> _pairs;

        public:
            Embedding() = default;
            explicit Embedding(std::vector<Assignment> pairs);

            auto pairs() const -> const std::vector<Assignment> &
            {
                return _pairs;
            }

            auto size() const -> int
            {
                return static_cast<int>(_pairs.size());
            }

            auto empty() const -> bool
            {
                return _pairs.empty();
            }

            auto operator== (const Embedding &) const -> bool = default;
    };

    struct Solution
    {
        Embedding embedding;
        std::string algorithm;

        auto size() const -> int
        {
            return embedding.size();
        }
    };

    /// Neighbour lists for a graph given as an edge list.
    class Adjacency
    {
        private:
            std::vector<std::vector<int>> _neighbours;

        public:
            Adjacency(int n, const EdgeList & edges);

            auto size() const -> int
            {
                return static_cast<int>(_neighbours.size());
            }

            auto adjacent(int a, int b) const -> bool;
            auto degree(int v) const -> int;
            auto neighbours(int v) const -> const std::vector<int> &;
            auto max_degree() const -> int;
    };

    /// Every violated Instance invariant, with the offending vertex or edge.
    auto validate_instance(const Instance &) -> std::vector<std::string>;

    enum class Condition
    {
        Satisfied,
        Injectivity,
        List,
        Order,
        Embedding,
        Induced
    };

    auto condition_name(Condition) -> std::string_view;

    struct EmbeddingCheck
    {
        Condition condition = Condition::Satisfied;
        std::string detail;

        auto ok() const -> bool
        {
            return condition == Condition::Satisfied;
        }

        explicit operator bool() const
        {
            return ok();
        }
    };

    /// Checks the list, order and embedding conditions of the chosen variant.
    /// Throws MalformedCertificate if the embedding names a nonexistent vertex.
    auto check_embedding(const Instance &, const Embedding &, Variant) -> EmbeddingCheck;

    struct DegreeStats
    {
        int delta_g = 0;
        int delta_h = 0;
        int delta_l = 0;

        auto operator== (const DegreeStats &) const -> bool = default;
    };

    auto degree_stats(const Instance &) -> DegreeStats;

    /// Exchanges the roles of G and H, inverting L. An embedding phi of the
    /// original is valid for OLISE/LISE iff its inverse is valid here.
    auto swap_roles(const Instance &) -> Instance;

    auto invert_embedding(const Embedding &) -> Embedding;
}

#endif
