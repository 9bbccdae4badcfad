/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_SPLIT_HH
#define OLSE_GUARD_SPLIT_HH 1

#include <olse/instance.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace olse
{
    /// One list edge of the split instance, drawn between two parallel lines.
    struct Segment
    {
        int g_pos;
        int h_pos;

        auto operator<=> (const Segment &) const = default;
    };

    /// Pair of segment indices (first < second).
    struct SegmentPair
    {
        int first;
        int second;

        auto operator<=> (const SegmentPair &) const = default;
    };

    /**
     * The instance after every vertex of G and H has been split into one copy
     * per incident list edge. Each split vertex lies on exactly one segment,
     * so edges of G_split and H_split are recorded as pairs of segments.
     * Segments are indexed in ascending g_pos order.
     */
    struct SplitInstance
    {
        std::vector<Segment> segments;
        std::vector<int> origin_g;
        std::vector<int> origin_h;
        std::vector<SegmentPair> split_edges_g;
        std::vector<SegmentPair> split_edges_h;
    };

    auto split(const Instance &) -> SplitInstance;

    /// Removes H-edges that constrain nothing and G/H edge pairs that are
    /// already satisfied; afterwards split_edges_h is empty.
    auto simplify(const SplitInstance &) -> SplitInstance;

    /// Segments plus conflict edges. Independent sets of size k (non-crossing
    /// and conflict-free) are exactly the OLSE solutions of size k.
    struct ConflictGraph
    {
        std::vector<Segment> segments;
        std::vector<int> origin_g;
        std::vector<int> origin_h;
        std::vector<SegmentPair> conflict_edges;

        auto conflict_degrees() const -> std::vector<int>;
        auto max_conflict_degree() const -> int;
    };

    /// Throws PreconditionViolation if split_edges_h is not empty.
    auto build_conflict_graph(const SplitInstance &) -> ConflictGraph;

    /// split, simplify, build_conflict_graph.
    auto conflict_graph_of(const Instance &) -> ConflictGraph;

    auto segments_cross(const Segment &, const Segment &) -> bool;

    /// Maximum set of pairwise non-crossing segments, as indices into the
    /// input, in ascending g_pos order. Longest increasing subsequence,
    /// O(m log m).
    auto permutation_mis(const std::vector<Segment> &) -> std::vector<int>;

    /// Embedding in the original instance given by a set of segments.
    auto segments_to_embedding(const ConflictGraph &, const std::vector<int> & chosen) -> Embedding;

    enum class SeparationMode
    {
        Auto,
        Random,
        Exhaustive
    };

    /**
     * How hard the random-separation solvers try before answering no.
     *
     * Random mode runs ceil(2^((Delta + 1) k) ln(1/delta)) colourings, capped
     * at max_trials. Auto mode switches to enumerating every colouring of the
     * vertices that carry conflict edges when there are at most
     * exhaustive_threshold of them and that is no more work than the random
     * trials.
     */
    struct TrialBudget
    {
        std::uint64_t seed = 0x5eed;
        double delta = 0.01;
        std::uint64_t max_trials = 1'000'000;
        int exhaustive_threshold = 20;
        SeparationMode mode = SeparationMode::Auto;
    };

    struct SeparationDecision
    {
        bool yes = false;
        std::optional<Solution> witness;
        bool exhaustive = false;
        std::uint64_t trials = 0;
        std::uint64_t planned_trials = 0;
        int conflict_bound = 0;
        int relevant_vertices = 0;
        /// Lower bound on the probability that a yes-instance would have been
        /// recognised; 1 for exhaustive runs.
        double confidence = 1.0;
    };

    auto planned_trials(int conflict_bound, int k, const TrialBudget &) -> std::uint64_t;

    /// Random separation on the conflict graph for Delta_G, Delta_L bounded.
    /// No answers are one-sided; yes answers carry a validated witness.
    auto solve_split_fpt(const Instance &, int k, const TrialBudget &) -> SeparationDecision;

    /// Random separation on G directly when H is edgeless. Throws
    /// PreconditionViolation if H has an edge.
    auto solve_random_sep_simple(const Instance &, int k, const TrialBudget &) -> SeparationDecision;
}

#endif
