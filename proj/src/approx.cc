/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/approx.hh>
#include <olse/exact.hh>

#include <algorithm>

using std::vector;

namespace olse
{
    auto greedy_independent(const vector<int> & vertices, const Adjacency & adjacency) -> vector<int>
    {
        vector<int> order = vertices;
        std::sort(order.begin(), order.end());

        vector<int> result;
        vector<char> removed(adjacency.size(), 0);
        for (int u : order) {
            if (removed[u])
                continue;
            result.push_back(u);
            removed[u] = 1;
            for (int w : adjacency.neighbours(u))
                removed[w] = 1;
        }
        return result;
    }

    namespace
    {
        auto restrict_to(const Embedding & emb, const vector<int> & keep_g) -> Embedding
        {
            vector<Assignment> pairs;
            for (auto & p : emb.pairs())
                if (std::binary_search(keep_g.begin(), keep_g.end(), p.g))
                    pairs.push_back(p);
            return Embedding{ std::move(pairs) };
        }

        auto independent_restriction(const Instance & inst) -> Embedding
        {
            auto relaxed = solve_dp_no_edges(strip_edges(inst)).solution.embedding;

            vector<int> s;
            for (auto & p : relaxed.pairs())
                s.push_back(p.g);

            auto independent = greedy_independent(s, Adjacency(inst.n_g, inst.edges_g));
            return restrict_to(relaxed, independent);
        }
    }

    auto approx_olse(const Instance & inst) -> Solution
    {
        return Solution{ independent_restriction(inst), "approx-olse" };
    }

    auto approx_olise(const Instance & inst) -> Solution
    {
        auto phi_i = independent_restriction(inst);

        vector<int> image;
        for (auto & p : phi_i.pairs())
            image.push_back(p.h);

        auto kept_h = greedy_independent(image, Adjacency(inst.n_h, inst.edges_h));
        std::sort(kept_h.begin(), kept_h.end());

        vector<Assignment> pairs;
        for (auto & p : phi_i.pairs())
            if (std::binary_search(kept_h.begin(), kept_h.end(), p.h))
                pairs.push_back(p);

        return Solution{ Embedding{ std::move(pairs) }, "approx-olise" };
    }
}
