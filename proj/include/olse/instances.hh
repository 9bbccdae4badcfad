/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_INSTANCES_HH
#define OLSE_GUARD_INSTANCES_HH 1

#include <olse/instance.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace olse
{
    /**
     * A k-Multi-Coloured Independent Set instance: k colour classes of N
     * vertices each, vertex s (0-based) belonging to class s / N. Edges must
     * join different classes.
     */
    struct McisInstance
    {
        int n_colors = 0;
        int class_size = 0;
        EdgeList edges;
    };

    /// Empty if the instance is well formed and properly coloured.
    auto validate_mcis(const McisInstance &) -> std::vector<std::string>;

    struct McisReduction
    {
        Instance instance;
        int target;
    };

    /// Block-major construction: G and H consist of k blocks of N sequences
    /// of kN vertices; H is edgeless and every list a singleton. The MCIS
    /// instance is a yes-instance iff an embedding of size k^2 N exists.
    /// Throws ParameterError on an invalid or improperly coloured input.
    auto reduce_mcis_to_olse(const McisInstance &) -> McisReduction;

    /// G itself against an edgeless H of the same size with L(u_i) = {v_i}.
    auto reduce_is_to_olse(const SimpleGraph &, std::optional<int> k = std::nullopt) -> Instance;

    struct ArcAnnotatedSequence
    {
        std::string chars;
        EdgeList arcs;
    };

    auto validate_arc_sequence(const ArcAnnotatedSequence &) -> std::vector<std::string>;

    /// G from s2, H from s1, lists by character equality. Throws
    /// PreconditionViolation if arcs of either sequence share an endpoint.
    auto encode_lapcs_as_olise(const ArcAnnotatedSequence & s1, const ArcAnnotatedSequence & s2) -> Instance;

    /// A graph on n vertices as one "b a^n b" block per vertex, with an arc
    /// per edge {i, j} joining the j-th 'a' of block i to the i-th 'a' of
    /// block j.
    auto clique_host_sequence(const SimpleGraph &) -> ArcAnnotatedSequence;

    /// The k-clique pattern: clique_host_sequence of the complete graph K_k.
    auto clique_pattern_sequence(int k) -> ArcAnnotatedSequence;

    struct GeneratorParams
    {
        int n_g = 0;
        int n_h = 0;
        int max_degree_g = 0;
        int max_degree_h = 0;
        int max_list = 1;
        int min_list = 0;
        double density_g = 0.5;
        double density_h = 0.5;
    };

    /// Random instance within the degree and width caps. Deterministic for a
    /// fixed seed. Throws ParameterError on inconsistent parameters.
    auto generate_random(const GeneratorParams &, std::uint64_t seed) -> Instance;

    /// Strict JSON reader; throws ParseError naming the field, position or
    /// violated invariant.
    auto parse_instance(std::string_view) -> Instance;

    /// Schema checks only: the result may violate Instance invariants, which
    /// validate_instance() then lists.
    auto read_instance_unchecked(std::string_view) -> Instance;

    /// Canonical JSON: sorted keys, edges as ascending pairs in ascending
    /// order, lists ascending.
    auto serialize_instance(const Instance &) -> std::string;

    auto serialize_solution(const Solution &, bool valid) -> std::string;

    /// Reads back the pairs of a solution document.
    auto parse_solution(std::string_view) -> Embedding;

    auto parse_mcis(std::string_view) -> McisInstance;
    auto parse_graph(std::string_view) -> SimpleGraph;

    struct LapcsSource
    {
        ArcAnnotatedSequence s1;
        ArcAnnotatedSequence s2;
    };

    auto parse_lapcs(std::string_view) -> LapcsSource;
}

#endif
