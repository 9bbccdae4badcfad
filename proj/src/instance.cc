/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/instance.hh>
#include <olse/errors.hh>

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

using std::string;
using std::string_view;
using std::vector;

namespace olse
{
    auto make_edge(int a, int b) -> Edge
    {
        return a < b ? Edge{ a, b } : Edge{ b, a };
    }

    auto is_ordered(Variant v) -> bool
    {
        return v == Variant::OLSE || v == Variant::OLISE;
    }

    auto is_induced(Variant v) -> bool
    {
        return v == Variant::OLISE || v == Variant::LISE;
    }

    auto variant_name(Variant v) -> string_view
    {
        switch (v) {
            case Variant::OLSE:  return "olse";
            case Variant::OLISE: return "olise";
            case Variant::LSE:   return "lse";
            case Variant::LISE:  return "lise";
        }
        return "?";
    }

    auto parse_variant(string_view s) -> std::optional<Variant>
    {
        for (auto v : { Variant::OLSE, Variant::OLISE, Variant::LSE, Variant::LISE })
            if (variant_name(v) == s)
                return v;
        return std::nullopt;
    }

    Embedding::Embedding(vector<Assignment> pairs) :
        _pairs(std::move(pairs))
    {
        std::sort(_pairs.begin(), _pairs.end());
    }

    Adjacency::Adjacency(int n, const EdgeList & edges) :
        _neighbours(n)
    {
        for (auto & e : edges) {
            _neighbours.at(e.a).push_back(e.b);
            _neighbours.at(e.b).push_back(e.a);
        }
        for (auto & n : _neighbours) {
            std::sort(n.begin(), n.end());
            n.erase(std::unique(n.begin(), n.end()), n.end());
        }
    }

    auto Adjacency::adjacent(int a, int b) const -> bool
    {
        auto & n = _neighbours[a];
        return std::binary_search(n.begin(), n.end(), b);
    }

    auto Adjacency::degree(int v) const -> int
    {
        return static_cast<int>(_neighbours[v].size());
    }

    auto Adjacency::neighbours(int v) const -> const vector<int> &
    {
        return _neighbours[v];
    }

    auto Adjacency::max_degree() const -> int
    {
        int result = 0;
        for (auto & n : _neighbours)
            result = std::max(result, static_cast<int>(n.size()));
        return result;
    }

    namespace
    {
        auto validate_edges(const char * which, int n, const EdgeList & edges, vector<string> & out) -> void
        {
            std::set<Edge> seen;
            for (auto & e : edges) {
                std::ostringstream msg;
                if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
                    msg << which << ": edge (" << e.a << "," << e.b << ") endpoint out of range [0," << n << ")";
                    out.push_back(msg.str());
                }
                else if (e.a == e.b) {
                    msg << which << ": self-loop at vertex " << e.a;
                    out.push_back(msg.str());
                }
                else if (! seen.insert(make_edge(e.a, e.b)).second) {
                    msg << which << ": duplicate edge (" << e.a << "," << e.b << ")";
                    out.push_back(msg.str());
                }
            }
        }
    }

    auto validate_instance(const Instance & inst) -> vector<string>
    {
        vector<string> out;

        if (inst.n_g < 0)
            out.push_back("n_g is negative");
        if (inst.n_h < 0)
            out.push_back("n_h is negative");
        if (! out.empty())
            return out;

        validate_edges("edges_g", inst.n_g, inst.edges_g, out);
        validate_edges("edges_h", inst.n_h, inst.edges_h, out);

        if (static_cast<int>(inst.lists.size()) != inst.n_g) {
            std::ostringstream msg;
            msg << "lists: expected " << inst.n_g << " lists, found " << inst.lists.size();
            out.push_back(msg.str());
        }

        for (std::size_t u = 0 ; u < inst.lists.size() ; ++u) {
            auto & list = inst.lists[u];
            for (std::size_t i = 0 ; i < list.size() ; ++i) {
                if (list[i] < 0 || list[i] >= inst.n_h) {
                    std::ostringstream msg;
                    msg << "lists[" << u << "]: entry " << list[i] << " out of range [0," << inst.n_h << ")";
                    out.push_back(msg.str());
                }
                if (i > 0 && list[i] <= list[i - 1]) {
                    std::ostringstream msg;
                    if (list[i] == list[i - 1])
                        msg << "lists[" << u << "]: duplicate entry " << list[i];
                    else
                        msg << "lists[" << u << "]: list not ascending at position " << i;
                    out.push_back(msg.str());
                }
            }
        }

        if (inst.k) {
            if (*inst.k < 0 || *inst.k > std::min(inst.n_g, inst.n_h)) {
                std::ostringstream msg;
                msg << "k = " << *inst.k << " outside [0," << std::min(inst.n_g, inst.n_h) << "]";
                out.push_back(msg.str());
            }
        }

        return out;
    }

    auto condition_name(Condition c) -> string_view
    {
        switch (c) {
            case Condition::Satisfied:   return "satisfied";
            case Condition::Injectivity: return "injectivity";
            case Condition::List:        return "list";
            case Condition::Order:       return "order";
            case Condition::Embedding:   return "embedding";
            case Condition::Induced:     return "induced";
        }
        return "?";
    }

    auto check_embedding(const Instance & inst, const Embedding & emb, Variant variant) -> EmbeddingCheck
    {
        auto & pairs = emb.pairs();

        for (auto & [g, h] : pairs)
            if (g < 0 || g >= inst.n_g || h < 0 || h >= inst.n_h) {
                std::ostringstream msg;
                msg << "pair (" << g << "," << h << ") refers to a vertex outside G (" << inst.n_g
                    << ") or H (" << inst.n_h << ")";
                throw MalformedCertificate{ msg.str() };
            }

        auto fail = [] (Condition c, auto && ... parts) {
            std::ostringstream msg;
            (msg << ... << parts);
            return EmbeddingCheck{ c, msg.str() };
        };

        vector<char> used_h(inst.n_h, 0);
        for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
            if (i > 0 && pairs[i].g == pairs[i - 1].g)
                return fail(Condition::Injectivity, "G-vertex ", pairs[i].g, " mapped twice");
            if (used_h[pairs[i].h])
                return fail(Condition::Injectivity, "H-vertex ", pairs[i].h, " used twice");
            used_h[pairs[i].h] = 1;
        }

        for (auto & [g, h] : pairs) {
            auto & list = inst.lists[g];
            if (! std::binary_search(list.begin(), list.end(), h))
                return fail(Condition::List, "H-vertex ", h, " not in list of G-vertex ", g);
        }

        if (is_ordered(variant))
            for (std::size_t i = 1 ; i < pairs.size() ; ++i)
                if (pairs[i].h <= pairs[i - 1].h)
                    return fail(Condition::Order, "G-vertices ", pairs[i - 1].g, " < ", pairs[i].g,
                            " but images ", pairs[i - 1].h, " >= ", pairs[i].h);

        Adjacency adj_g(inst.n_g, inst.edges_g), adj_h(inst.n_h, inst.edges_h);
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            for (std::size_t j = i + 1 ; j < pairs.size() ; ++j) {
                bool ge = adj_g.adjacent(pairs[i].g, pairs[j].g);
                bool he = adj_h.adjacent(pairs[i].h, pairs[j].h);
                if (ge && ! he)
                    return fail(Condition::Embedding, "G-edge (", pairs[i].g, ",", pairs[j].g,
                            ") maps to non-edge (", pairs[i].h, ",", pairs[j].h, ")");
                if (is_induced(variant) && he && ! ge)
                    return fail(Condition::Induced, "H-edge (", pairs[i].h, ",", pairs[j].h,
                            ") between images of non-adjacent (", pairs[i].g, ",", pairs[j].g, ")");
            }

        return EmbeddingCheck{};
    }

    auto degree_stats(const Instance & inst) -> DegreeStats
    {
        DegreeStats result;
        result.delta_g = Adjacency(inst.n_g, inst.edges_g).max_degree();
        result.delta_h = Adjacency(inst.n_h, inst.edges_h).max_degree();
        for (auto & l : inst.lists)
            result.delta_l = std::max(result.delta_l, static_cast<int>(l.size()));
        return result;
    }

    auto swap_roles(const Instance & inst) -> Instance
    {
        Instance result;
        result.n_g = inst.n_h;
        result.n_h = inst.n_g;
        result.edges_g = inst.edges_h;
        result.edges_h = inst.edges_g;
        result.k = inst.k;
        result.lists.resize(inst.n_h);
        for (int u = 0 ; u < inst.n_g ; ++u)
            for (int v : inst.lists[u])
                result.lists[v].push_back(u);
        return result;
    }

    auto invert_embedding(const Embedding & emb) -> Embedding
    {
        vector<Assignment> pairs;
        for (auto & [g, h] : emb.pairs())
            pairs.push_back({ h, g });
        return Embedding{ std::move(pairs) };
    }
}
