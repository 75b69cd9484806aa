#include <burn/bounds.hpp>
#include <burn/catalog.hpp>
#include <burn/engine.hpp>
#include <burn/error.hpp>
#include <burn/generators.hpp>
#include <burn/ilt.hpp>
#include <burn/oracle.hpp>
#include <burn/solver.hpp>
#include <burn/suite.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <random>
#include <sstream>

namespace burn::suite {
namespace {

    using Clock = std::chrono::steady_clock;

    struct Witness {
        Graph graph;
        BurningSequence sequence;
    };

    struct Context {
        const SuiteOptions & options;
        std::optional<std::vector<Graph>> catalog_graphs;
        std::map<int, std::vector<Witness>> witnesses;

        const std::vector<Graph> & catalog()
        {
            if (!catalog_graphs)
                catalog_graphs = catalog::load_or_build(options.catalog_max_n, options.catalog_cache);
            return *catalog_graphs;
        }
    };

    constexpr SolverOptions search_only{.allow_closed_form = false, .parallel = false};

    /// Runs fn(i) for i in [0, count) over OpenMP threads; results by index.
    template <typename T, typename Fn>
    std::vector<T> parallel_map(std::size_t count, Fn fn)
    {
        std::vector<T> out(count);
        std::exception_ptr failure;
        const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            try {
                out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
            }
            catch (...) {
#pragma omp critical(burn_suite_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        return out;
    }

    std::string edges_of(const Graph & g)
    {
        std::ostringstream os;
        os << "n=" << g.order() << " {";
        bool first = true;
        for (auto [u, v] : g.edges()) {
            os << (first ? "" : " ") << u << '-' << v;
            first = false;
        }
        os << '}';
        return os.str();
    }

    /// Solves, checks the witness by simulation and records it.
    struct Solved {
        std::size_t b = 0;
        bool witness_ok = false;
        BurningSequence witness;
    };

    Solved solve_checked(const Graph & g, const SolverOptions & opts = search_only)
    {
        auto r = burning_number(g, all_pairs_distances_serial(g), opts);
        return {r.burning_number, r.witness.size() == r.burning_number && simulate(g, r.witness).valid(), r.witness};
    }

    struct Tally {
        std::size_t checked = 0;
        std::size_t failed = 0;
        std::string first_failure;

        void record(bool ok, const std::string & what)
        {
            ++checked;
            if (!ok && failed++ == 0)
                first_failure = what;
        }

        [[nodiscard]] std::string summary(const std::string & noun) const
        {
            std::ostringstream os;
            os << checked - failed << '/' << checked << ' ' << noun;
            if (failed)
                os << "; first failure: " << first_failure;
            return os.str();
        }
    };

    /// Closed-form family sweep shared by criteria 1-3.
    CriterionResult family_sweep(Context & ctx, int id, Graph (*make)(std::size_t), std::size_t lo, std::size_t hi,
                                 std::size_t (*expected)(std::size_t), const char * label)
    {
        CriterionResult r{id, label};
        Tally t;
        for (std::size_t n = lo; n <= hi; ++n) {
            auto g = make(n);
            auto s = solve_checked(g);
            auto closed = closed_form(g, all_pairs_distances_serial(g));
            const bool ok = s.b == expected(n) && s.witness_ok && closed && closed->burning_number == s.b &&
                            simulate(g, closed->witness).valid();
            t.record(ok, "n=" + std::to_string(n) + " got " + std::to_string(s.b) + " want " +
                             std::to_string(expected(n)));
            ctx.witnesses[id].push_back({g, s.witness});
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("orders match");
        return r;
    }

    CriterionResult paths(Context & ctx)
    {
        const auto start = Clock::now();
        auto r = family_sweep(ctx, 1, gen::path, 1, 25, ceil_sqrt, "path closed form");
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs >= 10.0) {
            r.passed = false;
            r.detail += "; took " + std::to_string(secs) + " s, limit 10 s";
        }
        return r;
    }

    CriterionResult cycles(Context & ctx)
    {
        return family_sweep(ctx, 2, gen::cycle, 3, 25, ceil_sqrt, "cycle closed form");
    }

    CriterionResult cliques(Context & ctx)
    {
        return family_sweep(ctx, 3, gen::complete, 2, 12, [](std::size_t) -> std::size_t { return 2; },
                            "complete graphs");
    }

    CriterionResult unions(Context & ctx)
    {
        CriterionResult r{4, "disjoint union of edges"};
        Tally t;
        for (std::size_t copies = 1; copies <= 5; ++copies) {
            std::vector<Graph> parts(copies, gen::path(2));
            auto g = disjoint_union(parts);
            auto s = solve_checked(g);
            t.record(s.b == copies + 1 && s.witness_ok,
                     "t=" + std::to_string(copies) + " got " + std::to_string(s.b));
            ctx.witnesses[4].push_back({g, s.witness});
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("unions match");
        return r;
    }

    CriterionResult wheel_pair(Context & ctx)
    {
        CriterionResult r{5, "wheel and cycle"};
        auto c5 = gen::cycle(5);
        auto w5 = gen::wheel(5);
        auto sc = solve_checked(c5);
        auto sw = solve_checked(w5);
        ctx.witnesses[5] = {{c5, sc.witness}, {w5, sw.witness}};
        r.passed = sc.b == 3 && sw.b == 2 && sc.witness_ok && sw.witness_ok;
        r.detail = "b(C_5)=" + std::to_string(sc.b) + " b(W_5)=" + std::to_string(sw.b);
        return r;
    }

    CriterionResult spiders(Context & ctx)
    {
        CriterionResult r{6, "spider tightness"};
        Tally t;
        for (auto [s, len] : {std::pair<std::size_t, std::size_t>{3, 2}, {3, 3}, {4, 3}}) {
            auto g = gen::spider(s, len);
            auto sol = solve_checked(g);
            t.record(sol.b == len + 1 && sol.witness_ok, "SP(" + std::to_string(s) + "," + std::to_string(len) +
                                                             ") got " + std::to_string(sol.b));
            ctx.witnesses[6].push_back({g, sol.witness});
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("spiders match");
        return r;
    }

    CriterionResult two_characterization(Context & ctx)
    {
        CriterionResult r{7, "b = 2 characterization"};
        const auto & graphs = ctx.catalog();
        auto solved = parallel_map<Solved>(graphs.size(), [&](std::size_t i) { return solve_checked(graphs[i]); });
        Tally t;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto & g = graphs[i];
            const auto n = g.order();
            const auto delta = g.max_degree();
            const bool predicted = n >= 2 && (delta + 1 == n || delta + 2 == n);
            t.record(solved[i].witness_ok && (solved[i].b == 2) == predicted,
                     edges_of(g) + " b=" + std::to_string(solved[i].b));
            ctx.witnesses[7].push_back({g, solved[i].witness});
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("catalog graphs agree");
        return r;
    }

    std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_n, bool connected)
    {
        std::mt19937_64 rng(seed);
        std::vector<Graph> out;
        for (std::size_t i = 0; i < count; ++i) {
            const auto n = 2 + rng() % (max_n - 1);
            const double p = 0.1 + 0.6 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            const auto s = rng();
            out.push_back(connected ? gen::random_connected(n, p, s) : gen::gnp_random(n, p, s));
        }
        return out;
    }

    CriterionResult oracle_equivalence(Context & ctx)
    {
        CriterionResult r{8, "brute force vs exact solver"};
        auto graphs = ctx.catalog();
        auto extra = random_graphs(ctx.options.seed ^ 0x08, 200, 12, false);
        graphs.insert(graphs.end(), extra.begin(), extra.end());
        auto agree = parallel_map<int>(graphs.size(), [&](std::size_t i) {
            auto s = solve_checked(graphs[i]);
            return s.witness_ok && s.b == oracle::brute_force_burning_number(graphs[i]) ? 1 : 0;
        });
        Tally t;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            t.record(agree[i] == 1, edges_of(graphs[i]));
        r.passed = t.failed == 0;
        r.detail = t.summary("graphs agree");
        return r;
    }

    CriterionResult checker_equivalence(Context & ctx)
    {
        CriterionResult r{9, "simulation vs characterization"};
        std::mt19937_64 rng(ctx.options.seed ^ 0x09);
        Tally t;
        std::size_t valid_count = 0;
        auto check = [&](const Graph & g, const DistanceMatrix & dm, const BurningSequence & seq) {
            const bool sim = simulate(g, seq).valid();
            const bool chr = is_valid_characterization(g, dm, seq).valid;
            const bool ref = oracle::burns(g, seq.sources);
            valid_count += sim ? 1 : 0;
            t.record(sim == chr && sim == ref, edges_of(g) + " seq " + format_sequence(seq));
        };

        for (const auto & g : random_graphs(ctx.options.seed ^ 0x99, 400, 12, false)) {
            const auto dm = all_pairs_distances_serial(g);
            const auto n = g.order();

            auto witness = burning_number(g, dm, search_only).witness;
            check(g, dm, witness);

            // Mutations of an optimal witness: swap two positions, replace one source.
            if (witness.size() >= 2) {
                auto swapped = witness;
                std::swap(swapped.sources[0], swapped.sources[1 + rng() % (witness.size() - 1)]);
                check(g, dm, swapped);
            }
            {
                auto replaced = witness;
                const auto pos = rng() % witness.size();
                const auto v = static_cast<NodeId>(rng() % n);
                if (std::find(replaced.sources.begin(), replaced.sources.end(), v) == replaced.sources.end()) {
                    replaced.sources[pos] = v;
                    check(g, dm, replaced);
                }
            }

            // Uniform random sequence of random length.
            std::vector<NodeId> perm(n);
            for (NodeId v = 0; v < n; ++v)
                perm[v] = v;
            std::shuffle(perm.begin(), perm.end(), rng);
            perm.resize(1 + rng() % std::min<std::size_t>(n, 6));
            check(g, dm, BurningSequence{perm});
        }
        r.passed = t.failed == 0 && t.checked >= 1000;
        r.detail = t.summary("pairs agree") + " (" + std::to_string(valid_count) + " valid)";
        return r;
    }

    CriterionResult bound_sandwich(Context & ctx)
    {
        CriterionResult r{10, "bound sandwich"};
        auto graphs = ctx.catalog();
        auto extra = random_graphs(ctx.options.seed ^ 0x10, 200, 16, true);
        graphs.insert(graphs.end(), extra.begin(), extra.end());
        auto failures = parallel_map<std::string>(graphs.size(), [&](std::size_t i) -> std::string {
            const auto & g = graphs[i];
            const auto dm = all_pairs_distances_serial(g);
            auto rep = bounds_report(g, dm, {.with_exact = true});
            const auto b = *rep.exact;
            for (const auto & lo : rep.lower)
                if (lo.value && *lo.value > b)
                    return lo.name + " lower " + std::to_string(*lo.value) + " > b=" + std::to_string(b);
            for (const auto & hi : rep.upper)
                if (hi.value && *hi.value < b)
                    return hi.name + " upper " + std::to_string(*hi.value) + " < b=" + std::to_string(b);
            for (const char * name : {"radius", "max_degree", "order", "domination_m"})
                if (std::none_of(rep.upper.begin(), rep.upper.end(),
                                 [&](const NamedBound & nb) { return nb.name == name && nb.value; }) &&
                    g.order() >= 2)
                    return std::string("missing upper bound ") + name;
            if (b >= 2 && !gamb_check(g, dm, b))
                return "b < gamma_{b-1}";
            return {};
        });
        Tally t;
        for (std::size_t i = 0; i < graphs.size(); ++i)
            t.record(failures[i].empty(), edges_of(graphs[i]) + ": " + failures[i]);
        r.passed = t.failed == 0;
        r.detail = t.summary("graphs sandwiched");
        return r;
    }

    CriterionResult nordhaus(Context & ctx)
    {
        CriterionResult r{11, "Nordhaus-Gaddum"};
        std::vector<Graph> graphs;
        for (const auto & g : ctx.catalog())
            if (g.order() >= 2)
                graphs.push_back(g);
        auto reports = parallel_map<NordhausGaddumReport>(
            graphs.size(), [&](std::size_t i) { return nordhaus_gaddum(graphs[i], all_pairs_distances_serial(graphs[i])); });
        Tally t;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const auto & rep = reports[i];
            t.record(rep.sum >= 4 && rep.sum <= rep.n + 2 && (rep.n < 6 || rep.product <= 2 * rep.n) &&
                         rep.all_passed(),
                     edges_of(graphs[i]) + " sum=" + std::to_string(rep.sum) + " product=" + std::to_string(rep.product));
        }
        for (std::size_t n = 2; n <= 10; ++n) {
            auto g = gen::complete(n);
            auto rep = nordhaus_gaddum(g, all_pairs_distances_serial(g));
            t.record(rep.sum == n + 2 && rep.product == 2 * n,
                     "K_" + std::to_string(n) + " sum=" + std::to_string(rep.sum));
        }
        for (std::size_t n : {8, 9, 16}) {
            auto g = gen::cycle(n);
            auto rep = nordhaus_gaddum(g, all_pairs_distances_serial(g));
            t.record(rep.sum == ceil_sqrt(n) + 3, "C_" + std::to_string(n) + " sum=" + std::to_string(rep.sum));
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("comparisons hold");
        return r;
    }

    CriterionResult ilt(Context &)
    {
        CriterionResult r{12, "ILT prediction"};
        Tally t;
        const std::pair<const char *, Graph> seeds[] = {{"P_3", gen::path(3)},   {"P_4", gen::path(4)},
                                                       {"K_3", gen::complete(3)}, {"C_4", gen::cycle(4)},
                                                       {"star(4)", gen::star(4)}};
        for (const auto & [name, g0] : seeds) {
            const auto start = Clock::now();
            auto v = ilt_verify(g0, 2);
            const double secs = std::chrono::duration<double>(Clock::now() - start).count();
            std::ostringstream os;
            os << name << " predicted " << v.prediction.predicted << " exact";
            for (const auto & row : v.rows)
                os << ' ' << row.exact;
            os << " in " << secs << " s";
            t.record(v.all_match && v.constant && v.rows.back().order <= 24 && secs < 60.0, os.str());
        }
        auto p9 = gen::path(9);
        auto pred = ilt_predict(p9, all_pairs_distances_serial(p9));
        t.record(pred.predicted == 4, "P_9 predicted " + std::to_string(pred.predicted));
        r.passed = t.failed == 0;
        r.detail = t.summary("ILT cases match");
        return r;
    }

    CriterionResult round_trip(Context & ctx)
    {
        CriterionResult r{13, "partition round trip"};
        using Runner = CriterionResult (*)(Context &);
        const Runner producers[] = {paths, cycles, cliques, unions, wheel_pair, spiders, two_characterization};
        for (int id = 1; id <= 7; ++id)
            if (!ctx.witnesses.count(id))
                producers[id - 1](ctx);

        std::vector<const Witness *> all;
        for (int id = 1; id <= 7; ++id)
            for (const auto & w : ctx.witnesses[id])
                all.push_back(&w);
        auto ok = parallel_map<int>(all.size(), [&](std::size_t i) {
            const auto & w = *all[i];
            const auto dm = all_pairs_distances_serial(w.graph);
            auto back = partition_to_sequence(w.graph, dm, sequence_to_partition(w.graph, dm, w.sequence));
            return back.size() == w.sequence.size() && simulate(w.graph, back).valid() ? 1 : 0;
        });
        Tally t;
        for (std::size_t i = 0; i < all.size(); ++i)
            t.record(ok[i] == 1, edges_of(all[i]->graph) + " seq " + format_sequence(all[i]->sequence));
        r.passed = t.failed == 0 && t.checked > 0;
        r.detail = t.summary("witnesses round-trip");
        return r;
    }

    CriterionResult spanning(Context &)
    {
        CriterionResult r{14, "spanning-tree identity"};
        Tally t;
        const std::pair<const char *, Graph> cases[] = {
            {"C_4", gen::cycle(4)}, {"C_5", gen::cycle(5)}, {"K_4", gen::complete(4)}, {"W_5", gen::wheel(5)}};
        for (const auto & [name, g] : cases) {
            const auto dm = all_pairs_distances_serial(g);
            const auto b = burning_number(g, dm, search_only).burning_number;
            const auto via = burning_number_via_spanning_trees(g, dm);
            t.record(b == via, std::string(name) + " b=" + std::to_string(b) + " trees=" + std::to_string(via));
        }
        r.passed = t.failed == 0;
        r.detail = t.summary("graphs agree");
        return r;
    }

    CriterionResult conjectures(Context & ctx)
    {
        CriterionResult r{15, "conjecture reports"};
        const auto & graphs = ctx.catalog();
        struct Row {
            bool sqrt_holds = true;
            bool product_applicable = false;
            bool product_holds = true;
        };
        auto rows = parallel_map<Row>(graphs.size(), [&](std::size_t i) {
            const auto & g = graphs[i];
            const auto dm = all_pairs_distances_serial(g);
            Row row;
            row.sqrt_holds = conjecture_check(g, dm).holds;
            if (g.order() >= 2) {
                auto ng = nordhaus_gaddum(g, dm);
                if (const auto * c = ng.find("conjecture_product_le_n_plus_4"); c && c->applicable) {
                    row.product_applicable = true;
                    row.product_holds = c->passed;
                }
            }
            return row;
        });
        std::size_t sqrt_violations = 0, product_checked = 0, product_violations = 0;
        for (const auto & row : rows) {
            sqrt_violations += row.sqrt_holds ? 0 : 1;
            product_checked += row.product_applicable ? 1 : 0;
            product_violations += row.product_holds ? 0 : 1;
        }
        r.passed = sqrt_violations == 0;
        r.detail = "b <= ceil(sqrt n) violations: " + std::to_string(sqrt_violations) + "/" +
                   std::to_string(graphs.size()) + "; product <= n+4 violations (reported): " +
                   std::to_string(product_violations) + "/" + std::to_string(product_checked);
        return r;
    }

    CriterionResult run(int id, Context & ctx)
    {
        using Runner = CriterionResult (*)(Context &);
        static constexpr Runner runners[criterion_count] = {
            paths,   cycles,      cliques, unions,     wheel_pair, spiders,  two_characterization, oracle_equivalence,
            checker_equivalence, bound_sandwich, nordhaus, ilt, round_trip, spanning, conjectures};
        if (id < 1 || id > criterion_count)
            throw BurnError(ErrorCode::invalid_parameter, "no criterion " + std::to_string(id));
        const auto start = Clock::now();
        CriterionResult r;
        try {
            r = runners[id - 1](ctx);
        }
        catch (const std::exception & e) {
            r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
        }
        r.id = id;
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (ctx.options.on_result)
            ctx.options.on_result(r);
        return r;
    }

} // namespace

std::vector<CriterionResult> run_all(const SuiteOptions & options)
{
    Context ctx{options, {}, {}};
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id)
        out.push_back(run(id, ctx));
    return out;
}

CriterionResult run_one(int id, const SuiteOptions & options)
{
    Context ctx{options, {}, {}};
    return run(id, ctx);
}

} // namespace burn::suite
