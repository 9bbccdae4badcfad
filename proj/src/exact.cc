/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/exact.hh>
#include <olse/errors.hh>

#include <algorithm>
#include <sstream>

using std::vector;

namespace olse
{
    namespace
    {
        struct OracleSearch
        {
            const Instance & inst;
            bool ordered;
            bool induced;
            bool prune;
            Adjacency adj_g, adj_h;

            vector<Assignment> current, best;
            vector<char> used_h;

            OracleSearch(const Instance & i, Variant variant, bool p) :
                inst(i),
                ordered(is_ordered(variant)),
                induced(is_induced(variant)),
                prune(p),
                adj_g(i.n_g, i.edges_g),
                adj_h(i.n_h, i.edges_h),
                used_h(i.n_h, 0)
            {
            }

            auto compatible(int u, int v) const -> bool
            {
                for (auto & [g, h] : current) {
                    bool ge = adj_g.adjacent(u, g), he = adj_h.adjacent(v, h);
                    if (ge && ! he)
                        return false;
                    if (induced && he && ! ge)
                        return false;
                }
                return true;
            }

            auto upper_bound(int u) const -> int
            {
                int remaining = inst.n_g - u;
                if (ordered) {
                    int last_h = current.empty() ? -1 : current.back().h;
                    remaining = std::min(remaining, inst.n_h - 1 - last_h);
                }
                return int(current.size()) + remaining;
            }

            auto search(int u) -> void
            {
                if (current.size() > best.size())
                    best = current;

                if (u == inst.n_g)
                    return;

                if (prune && upper_bound(u) <= int(best.size()))
                    return;

                int last_h = current.empty() ? -1 : current.back().h;
                for (int v : inst.lists[u]) {
                    if (ordered && v <= last_h)
                        continue;
                    if (used_h[v] || ! compatible(u, v))
                        continue;

                    current.push_back({ u, v });
                    used_h[v] = 1;
                    search(u + 1);
                    used_h[v] = 0;
                    current.pop_back();
                }

                search(u + 1);
            }
        };
    }

    auto solve_oracle(const Instance & inst, Variant variant, const OracleOptions & options) -> Solution
    {
        if (inst.n_g > options.size_cap || inst.n_h > options.size_cap) {
            std::ostringstream msg;
            msg << "oracle refuses instance with n_g = " << inst.n_g << ", n_h = " << inst.n_h
                << " (cap " << options.size_cap << ")";
            throw SizeGuardExceeded{ msg.str() };
        }

        OracleSearch search(inst, variant, options.prune);
        search.search(0);
        return Solution{ Embedding{ std::move(search.best) }, "oracle" };
    }

    DpTable::DpTable(int n_g, int n_h) :
        _rows(n_g + 1),
        _cols(n_h + 1),
        _cells(std::size_t(n_g + 1) * (n_h + 1), 0)
    {
    }

    auto solve_dp_no_edges(const Instance & inst) -> DpResult
    {
        if (! inst.edges_g.empty()) {
            auto & e = inst.edges_g.front();
            std::ostringstream msg;
            msg << "dynamic program needs edgeless G, found G-edge (" << e.a << "," << e.b << ")";
            throw PreconditionViolation{ msg.str() };
        }

        DpTable t(inst.n_g, inst.n_h);

        // in_list row i: whether v_j is in L(u_i), rebuilt per row
        vector<char> in_list(inst.n_h, 0);
        for (int i = 1 ; i <= inst.n_g ; ++i) {
            for (int v : inst.lists[i - 1])
                in_list[v] = 1;
            for (int j = 1 ; j <= inst.n_h ; ++j) {
                if (in_list[j - 1])
                    t.at(i, j) = 1 + t.at(i - 1, j - 1);
                else
                    t.at(i, j) = std::max(t.at(i, j - 1), t.at(i - 1, j));
            }
            for (int v : inst.lists[i - 1])
                in_list[v] = 0;
        }

        vector<Assignment> pairs;
        int i = inst.n_g, j = inst.n_h;
        while (i > 0 && j > 0) {
            auto & list = inst.lists[i - 1];
            if (std::binary_search(list.begin(), list.end(), j - 1)) {
                pairs.push_back({ i - 1, j - 1 });
                --i;
                --j;
            }
            else if (t.at(i, j - 1) == t.at(i, j))
                --j;
            else
                --i;
        }

        return DpResult{ Solution{ Embedding{ std::move(pairs) }, "dp" }, std::move(t) };
    }

    auto strip_edges(const Instance & inst) -> Instance
    {
        Instance result = inst;
        result.edges_g.clear();
        result.edges_h.clear();
        return result;
    }
}
