/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_EXACT_HH
#define OLSE_GUARD_EXACT_HH 1

#include <olse/instance.hh>

#include <vector>

namespace olse
{
    struct OracleOptions
    {
        int size_cap = 20;
        bool prune = true;
    };

    /**
     * Exhaustive search for a maximum embedding under any of the four
     * variants. Ordered variants extend order-preserving partial maps in
     * lexicographic (g, h) order; unordered variants search injective
     * partial maps. Throws SizeGuardExceeded if n_g or n_h exceeds the cap.
     */
    auto solve_oracle(const Instance &, Variant, const OracleOptions & = OracleOptions{}) -> Solution;

    /// t[i][j] is the largest subset of the first i G-vertices that embeds
    /// into the first j H-vertices.
    class DpTable
    {
        private:
            int _rows, _cols;
            std::vector<int> _cells;

        public:
            DpTable(int n_g, int n_h);

            auto rows() const -> int
            {
                return _rows;
            }

            auto cols() const -> int
            {
                return _cols;
            }

            auto cell_count() const -> std::size_t
            {
                return _cells.size();
            }

            auto at(int i, int j) const -> int
            {
                return _cells[std::size_t(i) * _cols + j];
            }

            auto at(int i, int j) -> int &
            {
                return _cells[std::size_t(i) * _cols + j];
            }
    };

    struct DpResult
    {
        Solution solution;
        DpTable table;
    };

    /// The LCS-style dynamic program for edgeless G (H edges are ignored).
    /// Throws PreconditionViolation naming a G-edge if G has one.
    auto solve_dp_no_edges(const Instance &) -> DpResult;

    /// Copy of the instance with both edge sets removed.
    auto strip_edges(const Instance &) -> Instance;
}

#endif
