/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/cli.hh>
#include <olse/approx.hh>
#include <olse/errors.hh>
#include <olse/exact.hh>
#include <olse/instances.hh>
#include <olse/split.hh>
#include <olse/unordered.hh>
#include <olse/vertex_cover.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;

namespace olse::cli
{
    namespace
    {
        /// Raised for incompatible flag combinations that CLI11 cannot see.
        class UsageError : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        auto read_file(const string & path) -> string
        {
            if (path == "-") {
                std::ostringstream buffer;
                buffer << std::cin.rdbuf();
                return buffer.str();
            }
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw UsageError{ "cannot read '" + path + "'" };
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto pairs_json(const Embedding & e) -> json
        {
            json result = json::array();
            for (auto & [g, h] : e.pairs())
                result.push_back({ g, h });
            return result;
        }

        auto optional_json(const optional<int> & v) -> json
        {
            return v ? json(*v) : json(nullptr);
        }

        struct SolveOptions
        {
            string input;
            string variant = "olse";
            string algo;
            optional<int> k;
            std::uint64_t seed = TrialBudget{}.seed;
            double delta = TrialBudget{}.delta;
            std::uint64_t max_trials = TrialBudget{}.max_trials;
            SeparationMode mode = SeparationMode::Auto;
        };

        /// What a solver produced before the report is assembled.
        struct Outcome
        {
            optional<Solution> solution;
            optional<bool> decided;
            optional<SeparationDecision> separation;
            optional<VcDecision> cover;
        };

        auto require_variant(const string & algo, Variant v, std::initializer_list<Variant> allowed) -> void
        {
            for (auto a : allowed)
                if (a == v)
                    return;
            throw UsageError{ "algorithm " + algo + " does not solve variant " + string(variant_name(v)) };
        }

        auto require_k(const SolveOptions & o) -> int
        {
            if (! o.k)
                throw UsageError{ "algorithm " + o.algo + " is a decision procedure and needs --k" };
            return *o.k;
        }

        auto run_solver(const Instance & inst, Variant variant, const SolveOptions & o) -> Outcome
        {
            Outcome outcome;
            auto stats = degree_stats(inst);
            TrialBudget budget;
            budget.seed = o.seed;
            budget.delta = o.delta;
            budget.max_trials = o.max_trials;
            budget.mode = o.mode;

            if (o.algo == "oracle")
                outcome.solution = solve_oracle(inst, variant);
            else if (o.algo == "dp") {
                require_variant(o.algo, variant, { Variant::OLSE, Variant::OLISE });
                if (variant == Variant::OLISE && stats.delta_h > 0)
                    throw PreconditionViolation{ "dp solves olise only when H is edgeless" };
                outcome.solution = solve_dp_no_edges(inst).solution;
            }
            else if (o.algo == "approx") {
                require_variant(o.algo, variant, { Variant::OLSE, Variant::OLISE });
                outcome.solution = variant == Variant::OLSE ? approx_olse(inst) : approx_olise(inst);
            }
            else if (o.algo == "lse-rules") {
                require_variant(o.algo, variant, { Variant::LSE });
                outcome.solution = solve_lse_rules(inst).solution;
            }
            else if (o.algo == "lise-matching") {
                require_variant(o.algo, variant, { Variant::LISE });
                outcome.solution = solve_lise_matching(inst);
            }
            else if (o.algo == "split-fpt") {
                require_variant(o.algo, variant, { Variant::OLSE });
                outcome.separation = solve_split_fpt(inst, require_k(o), budget);
            }
            else if (o.algo == "random-sep") {
                require_variant(o.algo, variant, { Variant::OLSE, Variant::OLISE });
                int k = require_k(o);
                if (variant == Variant::OLSE)
                    outcome.separation = solve_random_sep_simple(inst, k, budget);
                else {
                    if (stats.delta_g > 0)
                        throw PreconditionViolation{ "random-sep solves olise only when G is edgeless" };
                    auto d = solve_random_sep_simple(swap_roles(inst), k, budget);
                    if (d.witness)
                        d.witness->embedding = invert_embedding(d.witness->embedding);
                    outcome.separation = d;
                }
            }
            else if (o.algo == "vc-fpt") {
                require_variant(o.algo, variant, { Variant::OLSE });
                outcome.cover = o.k ? solve_vc_fpt(inst, *o.k) : solve_vc_max(inst);
            }
            else
                throw UsageError{ "unknown algorithm '" + o.algo + "'" };

            if (outcome.separation) {
                outcome.decided = outcome.separation->yes;
                outcome.solution = outcome.separation->witness;
            }
            if (outcome.cover) {
                if (o.k)
                    outcome.decided = outcome.cover->yes;
                outcome.solution = outcome.cover->witness;
            }
            return outcome;
        }

        auto cmd_solve(const SolveOptions & o, std::ostream & out) -> int
        {
            auto variant = parse_variant(o.variant);
            if (! variant)
                throw UsageError{ "unknown variant '" + o.variant + "'" };

            auto inst = parse_instance(read_file(o.input));
            SolveOptions options = o;
            if (! options.k)
                options.k = inst.k;

            auto start = std::chrono::steady_clock::now();
            auto outcome = run_solver(inst, *variant, options);
            auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

            bool valid = true;
            if (outcome.solution) {
                if (auto check = check_embedding(inst, outcome.solution->embedding, *variant) ; ! check)
                    throw InternalError{ options.algo + " produced an invalid witness (" +
                        string(condition_name(check.condition)) + "): " + check.detail };
            }

            // optimisation solvers answer a --k question by comparing sizes;
            // approx can only certify yes
            string decision;
            if (outcome.decided)
                decision = *outcome.decided ? "yes" : "no";
            else if (! options.k)
                decision = "solved";
            else if (outcome.solution->size() >= *options.k)
                decision = "yes";
            else
                decision = options.algo == "approx" ? "unknown" : "no";

            auto stats = degree_stats(inst);
            json report;
            report["instance"] = {
                { "n_g", inst.n_g }, { "n_h", inst.n_h },
                { "delta_g", stats.delta_g }, { "delta_h", stats.delta_h }, { "delta_l", stats.delta_l } };
            report["algorithm"] = options.algo;
            report["variant"] = string(variant_name(*variant));
            report["k"] = optional_json(options.k);
            report["decision"] = decision;
            report["size"] = outcome.solution ? json(outcome.solution->size()) : json(nullptr);
            report["pairs"] = outcome.solution ? pairs_json(outcome.solution->embedding) : json(nullptr);
            report["valid"] = valid;
            report["wall_time_ms"] = elapsed;

            if (outcome.separation) {
                auto & s = *outcome.separation;
                report["trials"] = {
                    { "performed", s.trials }, { "planned", s.planned_trials }, { "exhaustive", s.exhaustive },
                    { "relevant_vertices", s.relevant_vertices }, { "conflict_bound", s.conflict_bound },
                    { "confidence", s.confidence } };
                report["seed"] = options.seed;
            }
            else {
                report["trials"] = nullptr;
                report["seed"] = nullptr;
            }

            if (outcome.cover) {
                report["vertex_cover"] = outcome.cover->cover;
                report["guesses_examined"] = outcome.cover->guesses_examined;
                report["guess_bound"] = outcome.cover->guess_bound;
            }

            out << report.dump() << '\n';
            return decision == "yes" || decision == "solved" ? exit_yes : exit_no;
        }

        auto cmd_generate(const GeneratorParams & params, std::uint64_t seed, const optional<int> & k, std::ostream & out) -> int
        {
            auto inst = generate_random(params, seed);
            inst.k = k;
            if (auto problems = validate_instance(inst) ; ! problems.empty())
                throw ParameterError{ "generated instance is invalid: " + problems.front() };
            out << serialize_instance(inst) << '\n';
            return exit_yes;
        }

        auto cmd_reduce(const string & source, const string & input, const optional<int> & k, std::ostream & out) -> int
        {
            auto text = read_file(input);
            Instance inst;
            if (source == "mcis")
                inst = reduce_mcis_to_olse(parse_mcis(text)).instance;
            else if (source == "is") {
                auto graph = parse_graph(text);
                auto target = k;
                if (! target) {
                    auto doc = json::parse(text);
                    if (doc.contains("k"))
                        target = doc.at("k").get<int>();
                }
                inst = reduce_is_to_olse(graph, target);
            }
            else {
                auto [s1, s2] = parse_lapcs(text);
                inst = encode_lapcs_as_olise(s1, s2);
                inst.k = k;
            }

            if (auto problems = validate_instance(inst) ; ! problems.empty())
                throw ParameterError{ "reduction produced an invalid instance: " + problems.front() };
            out << serialize_instance(inst) << '\n';
            return exit_yes;
        }

        auto cmd_validate(const string & instance_path, const optional<string> & solution_path,
                const string & variant_text, std::ostream & out) -> int
        {
            auto variant = parse_variant(variant_text);
            if (! variant)
                throw UsageError{ "unknown variant '" + variant_text + "'" };

            auto text = read_file(instance_path);
            Instance inst;
            std::vector<string> violations;
            try {
                inst = read_instance_unchecked(text);
                violations = validate_instance(inst);
            }
            catch (const ParseError & e) {
                violations.push_back(e.what());
            }

            json report;
            report["instance_violations"] = violations;
            bool valid = violations.empty();

            if (solution_path) {
                json certificate;
                if (! valid)
                    certificate = { { "checked", false } };
                else {
                    auto embedding = parse_solution(read_file(*solution_path));
                    EmbeddingCheck check;
                    try {
                        check = check_embedding(inst, embedding, *variant);
                    }
                    catch (const MalformedCertificate & e) {
                        check = { Condition::Injectivity, e.what() };
                    }
                    certificate = {
                        { "checked", true }, { "variant", string(variant_name(*variant)) },
                        { "size", embedding.size() }, { "condition", string(condition_name(check.condition)) },
                        { "detail", check.detail } };
                    valid = valid && check.ok();
                    if (check.ok() && inst.k && embedding.size() < *inst.k) {
                        certificate["detail"] = "embedding is smaller than k";
                        valid = false;
                    }
                }
                report["solution"] = certificate;
            }

            report["valid"] = valid;
            out << report.dump() << '\n';
            return valid ? exit_yes : exit_no;
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Ordered list subgraph embedding solvers" };
        app.require_subcommand(1);

        SolveOptions solve;
        auto solve_cmd = app.add_subcommand("solve", "Solve an instance with a chosen algorithm");
        solve_cmd->add_option("--input", solve.input, "Instance JSON file, or - for standard input")->required();
        solve_cmd->add_option("--variant", solve.variant, "olse, olise, lse or lise")
            ->check(CLI::IsMember({ "olse", "olise", "lse", "lise" }));
        solve_cmd->add_option("--algo", solve.algo, "Solver")->required()
            ->check(CLI::IsMember({ "oracle", "dp", "approx", "lse-rules", "lise-matching", "split-fpt", "random-sep", "vc-fpt" }));
        solve_cmd->add_option("--k", solve.k, "Target solution size (defaults to the instance's k)");
        solve_cmd->add_option("--seed", solve.seed, "Seed for randomised solvers");
        solve_cmd->add_option("--delta", solve.delta, "Allowed failure probability of random separation")
            ->check(CLI::Range(1e-12, 1.0));
        solve_cmd->add_option("--max-trials", solve.max_trials, "Cap on random separation trials");
        std::map<string, SeparationMode> modes{
            { "auto", SeparationMode::Auto }, { "random", SeparationMode::Random }, { "exhaustive", SeparationMode::Exhaustive } };
        solve_cmd->add_option("--mode", solve.mode, "Random separation mode: auto, random or exhaustive")
            ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

        GeneratorParams params;
        std::uint64_t gen_seed = 0;
        optional<int> gen_k;
        auto generate_cmd = app.add_subcommand("generate", "Emit a random instance");
        generate_cmd->add_option("--n-g", params.n_g, "Vertices of G")->required();
        generate_cmd->add_option("--n-h", params.n_h, "Vertices of H")->required();
        generate_cmd->add_option("--max-degree-g", params.max_degree_g, "Degree cap for G");
        generate_cmd->add_option("--max-degree-h", params.max_degree_h, "Degree cap for H");
        generate_cmd->add_option("--max-list", params.max_list, "Largest list size");
        generate_cmd->add_option("--min-list", params.min_list, "Smallest list size");
        generate_cmd->add_option("--density-g", params.density_g, "Edge acceptance probability for G");
        generate_cmd->add_option("--density-h", params.density_h, "Edge acceptance probability for H");
        generate_cmd->add_option("--seed", gen_seed, "Generator seed");
        generate_cmd->add_option("--k", gen_k, "Target size to record in the instance");

        string reduce_source, reduce_input;
        optional<int> reduce_k;
        auto reduce_cmd = app.add_subcommand("reduce", "Reduce a source problem to an instance");
        reduce_cmd->add_option("source", reduce_source, "mcis, is or lapcs")->required()
            ->check(CLI::IsMember({ "mcis", "is", "lapcs" }));
        reduce_cmd->add_option("--input", reduce_input, "Source problem JSON file")->required();
        reduce_cmd->add_option("--k", reduce_k, "Target size to record (is, lapcs)");

        string validate_instance_path, validate_variant = "olse";
        optional<string> validate_solution_path;
        auto validate_cmd = app.add_subcommand("validate", "Check an instance and optionally a solution");
        validate_cmd->add_option("--instance", validate_instance_path, "Instance JSON file")->required();
        validate_cmd->add_option("--solution", validate_solution_path, "Solution JSON file");
        validate_cmd->add_option("--variant", validate_variant, "Variant the solution is checked against")
            ->check(CLI::IsMember({ "olse", "olise", "lse", "lise" }));

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_yes : exit_usage;
        }

        try {
            if (solve_cmd->parsed())
                return cmd_solve(solve, out);
            if (generate_cmd->parsed())
                return cmd_generate(params, gen_seed, gen_k, out);
            if (reduce_cmd->parsed())
                return cmd_reduce(reduce_source, reduce_input, reduce_k, out);
            return cmd_validate(validate_instance_path, validate_solution_path, validate_variant, out);
        }
        catch (const InternalError & e) {
            err << "olse: internal error: " << e.what() << '\n';
            return exit_internal;
        }
        catch (const MalformedCertificate & e) {
            err << "olse: internal error: " << e.what() << '\n';
            return exit_internal;
        }
        catch (const json::exception & e) {
            err << "olse: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::runtime_error & e) {
            err << "olse: " << e.what() << '\n';
            return exit_usage;
        }
    }
}
