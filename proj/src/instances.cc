/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/instances.hh>
#include <olse/errors.hh>

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::vector;

namespace olse
{
    namespace
    {
        auto join(const vector<string> & parts) -> string
        {
            string result;
            for (auto & p : parts) {
                if (! result.empty())
                    result += "; ";
                result += p;
            }
            return result;
        }

        auto check_edges(const char * which, int n, const EdgeList & edges, vector<string> & out) -> void
        {
            std::set<Edge> seen;
            for (auto & e : edges) {
                std::ostringstream msg;
                if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
                    msg << which << ": edge (" << e.a << "," << e.b << ") out of range [0," << n << ")";
                else if (e.a == e.b)
                    msg << which << ": self-loop at " << e.a;
                else if (! seen.insert(make_edge(e.a, e.b)).second)
                    msg << which << ": duplicate edge (" << e.a << "," << e.b << ")";
                if (! msg.str().empty())
                    out.push_back(msg.str());
            }
        }
    }

    auto validate_mcis(const McisInstance & m) -> vector<string>
    {
        vector<string> out;
        if (m.n_colors < 0 || m.class_size < 0) {
            out.push_back("n_colors and class_size must be nonnegative");
            return out;
        }
        int n = m.n_colors * m.class_size;
        check_edges("edges", n, m.edges, out);
        for (auto & e : m.edges)
            if (e.a >= 0 && e.a < n && e.b >= 0 && e.b < n && e.a != e.b && e.a / m.class_size == e.b / m.class_size) {
                std::ostringstream msg;
                msg << "edges: (" << e.a << "," << e.b << ") joins two vertices of colour class " << e.a / m.class_size;
                out.push_back(msg.str());
            }
        return out;
    }

    auto reduce_mcis_to_olse(const McisInstance & m) -> McisReduction
    {
        if (auto problems = validate_mcis(m) ; ! problems.empty())
            throw ParameterError{ "invalid MCIS instance: " + join(problems) };

        int k = m.n_colors, n_class = m.class_size, seq = k * n_class;
        std::set<Edge> source_edges;
        for (auto & e : m.edges)
            source_edges.insert(make_edge(e.a, e.b));

        // vertex u^j_{i,s}: block i, sequence j, position s (all 0-based)
        auto index = [&] (int i, int j, int s) { return (i * n_class + j) * seq + s; };

        Instance inst;
        inst.n_g = inst.n_h = k * n_class * seq;
        inst.lists.resize(inst.n_g);

        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < n_class ; ++j)
                for (int s = 0 ; s < seq ; ++s) {
                    inst.lists[index(i, j, s)] = { index(i, n_class - 1 - j, s) };

                    // position s of a sequence in block i stands for source
                    // vertex s; join it to the matching position of the
                    // sequence for s in a later block
                    int i2 = s / n_class, j2 = s % n_class;
                    int s2 = i * n_class + j;
                    if (i < i2 && source_edges.count(make_edge(s, s2)))
                        inst.edges_g.push_back(make_edge(index(i, j, s), index(i2, j2, s2)));
                }

        std::sort(inst.edges_g.begin(), inst.edges_g.end());
        int target = k * k * n_class;
        inst.k = target;
        return McisReduction{ std::move(inst), target };
    }

    auto reduce_is_to_olse(const SimpleGraph & graph, std::optional<int> k) -> Instance
    {
        Instance inst;
        inst.n_g = inst.n_h = graph.n;
        for (auto & e : graph.edges)
            inst.edges_g.push_back(make_edge(e.a, e.b));
        std::sort(inst.edges_g.begin(), inst.edges_g.end());
        inst.lists.resize(graph.n);
        for (int u = 0 ; u < graph.n ; ++u)
            inst.lists[u] = { u };
        inst.k = k;
        return inst;
    }

    auto validate_arc_sequence(const ArcAnnotatedSequence & s) -> vector<string>
    {
        vector<string> out;
        int n = int(s.chars.size());
        check_edges("arcs", n, s.arcs, out);
        vector<int> used(n, 0);
        for (auto & e : s.arcs)
            if (e.a >= 0 && e.a < n && e.b >= 0 && e.b < n && e.a != e.b)
                for (int p : { e.a, e.b })
                    if (used[p]++ == 1) {
                        std::ostringstream msg;
                        msg << "arcs: position " << p << " is the endpoint of two arcs";
                        out.push_back(msg.str());
                    }
        return out;
    }

    auto encode_lapcs_as_olise(const ArcAnnotatedSequence & s1, const ArcAnnotatedSequence & s2) -> Instance
    {
        for (auto * s : { &s1, &s2 })
            if (auto problems = validate_arc_sequence(*s) ; ! problems.empty())
                throw PreconditionViolation{ string(s == &s1 ? "s1" : "s2") + ": " + join(problems) };

        Instance inst;
        inst.n_g = int(s2.chars.size());
        inst.n_h = int(s1.chars.size());
        for (auto & e : s2.arcs)
            inst.edges_g.push_back(make_edge(e.a, e.b));
        for (auto & e : s1.arcs)
            inst.edges_h.push_back(make_edge(e.a, e.b));
        std::sort(inst.edges_g.begin(), inst.edges_g.end());
        std::sort(inst.edges_h.begin(), inst.edges_h.end());

        inst.lists.resize(inst.n_g);
        for (int u = 0 ; u < inst.n_g ; ++u)
            for (int v = 0 ; v < inst.n_h ; ++v)
                if (s2.chars[u] == s1.chars[v])
                    inst.lists[u].push_back(v);
        return inst;
    }

    auto clique_host_sequence(const SimpleGraph & graph) -> ArcAnnotatedSequence
    {
        int n = graph.n, block = n + 2;
        ArcAnnotatedSequence result;
        for (int i = 0 ; i < n ; ++i)
            result.chars += "b" + string(n, 'a') + "b";

        // the a at offset j of block i is reserved for the edge to j
        auto slot = [&] (int i, int j) { return i * block + 1 + j; };
        for (auto & e : graph.edges)
            result.arcs.push_back(make_edge(slot(e.a, e.b), slot(e.b, e.a)));
        std::sort(result.arcs.begin(), result.arcs.end());
        return result;
    }

    auto clique_pattern_sequence(int k) -> ArcAnnotatedSequence
    {
        SimpleGraph complete{ k, {} };
        for (int i = 0 ; i < k ; ++i)
            for (int j = i + 1 ; j < k ; ++j)
                complete.edges.push_back({ i, j });
        return clique_host_sequence(complete);
    }

    namespace
    {
        auto random_edges(int n, int cap, double density, std::mt19937_64 & rng) -> EdgeList
        {
            EdgeList candidates;
            if (cap > 0 && density > 0.0)
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        candidates.push_back({ a, b });
            std::shuffle(candidates.begin(), candidates.end(), rng);

            std::bernoulli_distribution keep(density);
            vector<int> degree(n, 0);
            EdgeList result;
            for (auto & e : candidates)
                if (degree[e.a] < cap && degree[e.b] < cap && keep(rng)) {
                    ++degree[e.a];
                    ++degree[e.b];
                    result.push_back(e);
                }
            std::sort(result.begin(), result.end());
            return result;
        }
    }

    auto generate_random(const GeneratorParams & p, std::uint64_t seed) -> Instance
    {
        vector<string> problems;
        if (p.n_g < 0 || p.n_h < 0)
            problems.push_back("vertex counts must be nonnegative");
        if (p.max_degree_g < 0 || p.max_degree_h < 0)
            problems.push_back("degree caps must be nonnegative");
        if (p.min_list < 0 || p.max_list < 0)
            problems.push_back("list sizes must be nonnegative");
        if (p.min_list > p.max_list)
            problems.push_back("min_list exceeds max_list");
        if (p.n_g > 0 && p.min_list > p.n_h)
            problems.push_back("min_list exceeds n_h");
        if (! (p.density_g >= 0.0 && p.density_g <= 1.0) || ! (p.density_h >= 0.0 && p.density_h <= 1.0))
            problems.push_back("densities must lie in [0,1]");
        if (! problems.empty())
            throw ParameterError{ "generator: " + join(problems) };

        std::mt19937_64 rng(seed);
        Instance inst;
        inst.n_g = p.n_g;
        inst.n_h = p.n_h;
        inst.edges_g = random_edges(p.n_g, p.max_degree_g, p.density_g, rng);
        inst.edges_h = random_edges(p.n_h, p.max_degree_h, p.density_h, rng);

        int widest = std::min(p.max_list, p.n_h);
        std::uniform_int_distribution<int> list_size(std::min(p.min_list, widest), widest);
        vector<int> pool(p.n_h);
        inst.lists.resize(p.n_g);
        for (auto & list : inst.lists) {
            int size = list_size(rng);
            std::iota(pool.begin(), pool.end(), 0);
            for (int i = 0 ; i < size ; ++i) {
                std::uniform_int_distribution<int> pick(i, p.n_h - 1);
                std::swap(pool[i], pool[pick(rng)]);
            }
            list.assign(pool.begin(), pool.begin() + size);
            std::sort(list.begin(), list.end());
        }
        return inst;
    }

    namespace
    {
        auto parse_document(string_view text) -> json
        {
            try {
                return json::parse(text.begin(), text.end());
            }
            catch (const json::parse_error & e) {
                throw ParseError{ string("malformed JSON: ") + e.what() };
            }
        }

        auto require_object(const json & j, const char * what, std::initializer_list<const char *> allowed) -> void
        {
            if (! j.is_object())
                throw ParseError{ string(what) + ": expected a JSON object" };
            for (auto & [key, value] : j.items())
                if (std::find_if(allowed.begin(), allowed.end(), [&] (const char * a) { return key == a; }) == allowed.end())
                    throw ParseError{ string(what) + ": unknown field '" + key + "'" };
        }

        auto field(const json & j, const char * name) -> const json &
        {
            if (! j.contains(name))
                throw ParseError{ string("missing field '") + name + "'" };
            return j.at(name);
        }

        auto as_int(const json & j, const string & where) -> int
        {
            if (! j.is_number_integer())
                throw ParseError{ where + ": expected an integer" };
            return j.get<int>();
        }

        auto as_edges(const json & j, const string & where) -> EdgeList
        {
            if (! j.is_array())
                throw ParseError{ where + ": expected an array of pairs" };
            EdgeList result;
            for (std::size_t i = 0 ; i < j.size() ; ++i) {
                auto here = where + "[" + std::to_string(i) + "]";
                if (! j[i].is_array() || j[i].size() != 2)
                    throw ParseError{ here + ": expected a pair [a, b]" };
                result.push_back(make_edge(as_int(j[i][0], here), as_int(j[i][1], here)));
            }
            return result;
        }

        auto as_string(const json & j, const string & where) -> string
        {
            if (! j.is_string())
                throw ParseError{ where + ": expected a string" };
            return j.get<string>();
        }

        auto edges_json(const EdgeList & edges) -> json
        {
            EdgeList sorted;
            for (auto & e : edges)
                sorted.push_back(make_edge(e.a, e.b));
            std::sort(sorted.begin(), sorted.end());
            json result = json::array();
            for (auto & e : sorted)
                result.push_back({ e.a, e.b });
            return result;
        }
    }

    auto read_instance_unchecked(string_view text) -> Instance
    {
        auto doc = parse_document(text);
        require_object(doc, "instance", { "n_g", "n_h", "edges_g", "edges_h", "lists", "k" });

        Instance inst;
        inst.n_g = as_int(field(doc, "n_g"), "n_g");
        inst.n_h = as_int(field(doc, "n_h"), "n_h");
        inst.edges_g = as_edges(field(doc, "edges_g"), "edges_g");
        inst.edges_h = as_edges(field(doc, "edges_h"), "edges_h");

        auto & lists = field(doc, "lists");
        if (! lists.is_array())
            throw ParseError{ "lists: expected an array of arrays" };
        for (std::size_t u = 0 ; u < lists.size() ; ++u) {
            auto here = "lists[" + std::to_string(u) + "]";
            if (! lists[u].is_array())
                throw ParseError{ here + ": expected an array" };
            vector<int> list;
            for (auto & v : lists[u])
                list.push_back(as_int(v, here));
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            inst.lists.push_back(std::move(list));
        }

        if (doc.contains("k") && ! doc.at("k").is_null())
            inst.k = as_int(doc.at("k"), "k");
        return inst;
    }

    auto parse_instance(string_view text) -> Instance
    {
        auto inst = read_instance_unchecked(text);
        if (auto problems = validate_instance(inst) ; ! problems.empty())
            throw ParseError{ "invalid instance: " + join(problems) };

        std::sort(inst.edges_g.begin(), inst.edges_g.end());
        std::sort(inst.edges_h.begin(), inst.edges_h.end());
        return inst;
    }

    auto serialize_instance(const Instance & inst) -> string
    {
        json doc;
        doc["n_g"] = inst.n_g;
        doc["n_h"] = inst.n_h;
        doc["edges_g"] = edges_json(inst.edges_g);
        doc["edges_h"] = edges_json(inst.edges_h);
        json lists = json::array();
        for (auto & l : inst.lists) {
            auto sorted = l;
            std::sort(sorted.begin(), sorted.end());
            lists.push_back(sorted);
        }
        doc["lists"] = lists;
        if (inst.k)
            doc["k"] = *inst.k;
        return doc.dump();
    }

    auto serialize_solution(const Solution & sol, bool valid) -> string
    {
        json doc;
        doc["size"] = sol.size();
        json pairs = json::array();
        for (auto & [g, h] : sol.embedding.pairs())
            pairs.push_back({ g, h });
        doc["pairs"] = pairs;
        doc["algorithm"] = sol.algorithm;
        doc["valid"] = valid;
        return doc.dump();
    }

    auto parse_solution(string_view text) -> Embedding
    {
        auto doc = parse_document(text);
        if (! doc.is_object())
            throw ParseError{ "solution: expected a JSON object" };
        auto & pairs = field(doc, "pairs");
        if (! pairs.is_array())
            throw ParseError{ "pairs: expected an array of pairs" };
        vector<Assignment> result;
        for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
            auto here = "pairs[" + std::to_string(i) + "]";
            if (! pairs[i].is_array() || pairs[i].size() != 2)
                throw ParseError{ here + ": expected a pair [g, h]" };
            result.push_back({ as_int(pairs[i][0], here), as_int(pairs[i][1], here) });
        }
        return Embedding{ std::move(result) };
    }

    auto parse_mcis(string_view text) -> McisInstance
    {
        auto doc = parse_document(text);
        require_object(doc, "mcis", { "n_colors", "class_size", "edges" });
        McisInstance m;
        m.n_colors = as_int(field(doc, "n_colors"), "n_colors");
        m.class_size = as_int(field(doc, "class_size"), "class_size");
        m.edges = as_edges(field(doc, "edges"), "edges");
        if (auto problems = validate_mcis(m) ; ! problems.empty())
            throw ParseError{ "invalid MCIS instance: " + join(problems) };
        return m;
    }

    auto parse_graph(string_view text) -> SimpleGraph
    {
        auto doc = parse_document(text);
        require_object(doc, "graph", { "n", "edges", "k" });
        SimpleGraph g;
        g.n = as_int(field(doc, "n"), "n");
        if (g.n < 0)
            throw ParseError{ "n: must be nonnegative" };
        g.edges = as_edges(field(doc, "edges"), "edges");
        vector<string> problems;
        check_edges("edges", g.n, g.edges, problems);
        if (! problems.empty())
            throw ParseError{ "invalid graph: " + join(problems) };
        return g;
    }

    auto parse_lapcs(string_view text) -> LapcsSource
    {
        auto doc = parse_document(text);
        require_object(doc, "lapcs", { "s1", "s2" });
        LapcsSource result;
        for (auto [name, target] : { std::pair{ "s1", &result.s1 }, std::pair{ "s2", &result.s2 } }) {
            auto & s = field(doc, name);
            require_object(s, name, { "chars", "arcs" });
            target->chars = as_string(field(s, "chars"), string(name) + ".chars");
            target->arcs = as_edges(field(s, "arcs"), string(name) + ".arcs");
            if (auto problems = validate_arc_sequence(*target) ; ! problems.empty())
                throw ParseError{ string(name) + ": " + join(problems) };
        }
        return result;
    }
}
