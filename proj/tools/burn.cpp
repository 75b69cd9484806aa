// burn: command-line front end for the graph burning library.

#include <burn/bounds.hpp>
#include <burn/edge_list.hpp>
#include <burn/engine.hpp>
#include <burn/error.hpp>
#include <burn/generators.hpp>
#include <burn/ilt.hpp>
#include <burn/solver.hpp>
#include <burn/suite.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

using json = nlohmann::json;
using namespace burn;

namespace {

enum Exit : int { ok = 0, suite_failed = 1, input_error = 2, resource_limit = 3, internal_error = 4 };

struct GraphSource {
    std::string file;
    std::string gen;

    void add_to(CLI::App * cmd)
    {
        cmd->add_option("file", file, "edge-list file");
        cmd->add_option("--gen", gen, "generator spec, e.g. path:9, spider:3x2, gnp:10:0.4:7");
    }

    [[nodiscard]] std::string descriptor() const { return gen.empty() ? "file:" + file : "gen:" + gen; }

    [[nodiscard]] Graph load() const
    {
        if (file.empty() == gen.empty())
            throw BurnError(ErrorCode::invalid_parameter, "give exactly one of FILE or --gen");
        return gen.empty() ? read_edge_list_file(file) : parse_generator_spec(gen);
    }
};

std::optional<std::size_t> node_cap()
{
    const char * raw = std::getenv("BURN_MAX_NODES");
    if (!raw || !*raw)
        return std::nullopt;
    char * end = nullptr;
    const auto v = std::strtoull(raw, &end, 10);
    if (*end != '\0')
        throw BurnError(ErrorCode::invalid_parameter, std::string("BURN_MAX_NODES is not a number: ") + raw);
    return static_cast<std::size_t>(v);
}

void enforce_cap(std::size_t order)
{
    if (auto cap = node_cap(); cap && order > *cap)
        throw BurnError(ErrorCode::limit_exceeded, std::to_string(order) + " nodes exceeds BURN_MAX_NODES=" +
                                                       std::to_string(*cap));
}

std::vector<NodeId> parse_ids(const std::string & text)
{
    return parse_sequence(text).sources;
}

struct Report {
    std::string command;
    std::string input;
    json result;
    std::optional<std::uint64_t> seed;
};

class Runner {
public:
    explicit Runner(bool as_json) : as_json_(as_json), start_(std::chrono::steady_clock::now()) {}

    void emit(const Report & r, const std::string & text) const
    {
        if (!as_json_) {
            std::cout << text;
            return;
        }
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        json out = {{"command", r.command},
                    {"input", r.input},
                    {"result", r.result},
                    {"elapsed_ms", ms},
                    {"seed", r.seed ? json(*r.seed) : json(nullptr)}};
        std::cout << out.dump(2) << '\n';
    }

private:
    bool as_json_;
    std::chrono::steady_clock::time_point start_;
};

std::string opt_str(const std::optional<std::size_t> & v)
{
    return v ? std::to_string(*v) : "n/a";
}

int cmd_exact(const GraphSource & src, bool no_closed_form, const Runner & out)
{
    auto g = src.load();
    enforce_cap(g.order());
    auto r = burning_number(g, all_pairs_distances(g), {.allow_closed_form = !no_closed_form});
    json result = {{"n", g.order()},
                   {"m", g.size()},
                   {"burning_number", r.burning_number},
                   {"witness", r.witness.sources},
                   {"method", to_string(r.method)},
                   {"nodes_explored", r.nodes_explored}};
    std::ostringstream text;
    text << "b = " << r.burning_number << '\n'
         << "witness: " << format_sequence(r.witness) << '\n'
         << "method: " << to_string(r.method) << '\n'
         << "nodes explored: " << r.nodes_explored << '\n';
    out.emit({"exact", src.descriptor(), result, {}}, text.str());
    return ok;
}

int cmd_verify(const GraphSource & src, const std::string & sequence, const Runner & out)
{
    auto g = src.load();
    enforce_cap(g.order());
    auto seq = parse_sequence(sequence);
    auto sim = simulate(g, seq);
    auto chr = is_valid_characterization(g, all_pairs_distances(g), seq);

    json result = {{"sequence", seq.sources},
                   {"valid", sim.valid()},
                   {"simulation",
                    {{"valid", sim.valid()},
                     {"invalid_at", sim.invalid_at ? json(*sim.invalid_at) : json(nullptr)},
                     {"burn_round", sim.schedule.burn_round}}},
                   {"characterization",
                    {{"valid", chr.valid},
                     {"uncovered", chr.uncovered ? json(*chr.uncovered) : json(nullptr)},
                     {"violating_pair", chr.violating_pair ? json({chr.violating_pair->first, chr.violating_pair->second})
                                                           : json(nullptr)}}},
                   {"agree", sim.valid() == chr.valid}};
    for (auto & r : result["simulation"]["burn_round"])
        if (r.get<std::uint32_t>() == unburned)
            r = nullptr;

    std::ostringstream text;
    text << (sim.valid() ? "valid" : "invalid") << '\n';
    text << "simulation: " << (sim.valid() ? "valid" : "invalid at round " + std::to_string(*sim.invalid_at)) << '\n';
    text << "characterization: " << (chr.valid ? "valid" : "invalid");
    if (chr.uncovered)
        text << ", uncovered node " << *chr.uncovered;
    if (chr.violating_pair)
        text << ", distance violated by (" << chr.violating_pair->first << ',' << chr.violating_pair->second << ')';
    text << '\n';
    out.emit({"verify", src.descriptor(), result, {}}, text.str());
    if (sim.valid() != chr.valid) {
        std::cerr << "error: checkers disagree\n";
        return internal_error;
    }
    return ok;
}

int cmd_bounds(const GraphSource & src, bool exact, const std::string & ham_path, const Runner & out)
{
    auto g = src.load();
    enforce_cap(g.order());
    BoundsOptions opts{.with_exact = exact};
    if (!ham_path.empty())
        opts.hamiltonian_path = parse_ids(ham_path);
    auto rep = bounds_report(g, all_pairs_distances(g), opts);

    std::ostringstream text;
    text << "n = " << rep.n << (rep.connected ? " (connected)" : " (disconnected)") << '\n';
    for (const auto & b : rep.lower)
        text << "lower " << std::left << std::setw(14) << b.name << opt_str(b.value) << '\n';
    for (const auto & b : rep.upper)
        text << "upper " << std::left << std::setw(14) << b.name << opt_str(b.value) << '\n';
    for (auto [k, gk] : rep.gamma)
        text << "gamma_" << k << " = " << gk << '\n';
    if (rep.exact)
        text << "b = " << *rep.exact << (rep.sandwich_holds() ? "" : "  (bounds violated)") << '\n';
    out.emit({"bounds", src.descriptor(), rep, {}}, text.str());
    return rep.sandwich_holds() ? ok : internal_error;
}

int cmd_gamma(const GraphSource & src, std::uint32_t k, const Runner & out)
{
    auto g = src.load();
    enforce_cap(g.order());
    const auto value = gamma_k(g, all_pairs_distances(g), k);
    out.emit({"gamma", src.descriptor(), {{"k", k}, {"gamma", value}}, {}},
             "gamma_" + std::to_string(k) + " = " + std::to_string(value) + '\n');
    return ok;
}

std::string ng_text(const NordhausGaddumReport & r)
{
    std::ostringstream text;
    text << "b = " << r.b << ", b(complement) = " << r.b_complement << '\n'
         << "sum " << r.sum << ", product " << r.product << '\n';
    for (const auto & c : r.checks) {
        text << "  " << std::left << std::setw(34) << c.name;
        if (!c.applicable)
            text << "n/a";
        else
            text << (c.passed ? "pass" : "FAIL") << (c.asserted ? "" : " (conjecture, reported)");
        text << '\n';
    }
    text << (r.all_passed() ? "all checks pass" : "checks failed") << '\n';
    return text.str();
}

int cmd_ng(const GraphSource & src, std::size_t n, std::size_t samples, std::uint64_t seed, const Runner & out)
{
    if (!src.file.empty() || !src.gen.empty()) {
        auto g = src.load();
        enforce_cap(g.order());
        auto rep = nordhaus_gaddum(g, all_pairs_distances(g));
        out.emit({"ng", src.descriptor(), rep, {}}, ng_text(rep));
        return rep.all_passed() ? ok : internal_error;
    }

    if (n < 2 || samples == 0)
        throw BurnError(ErrorCode::invalid_parameter, "sampling needs --n >= 2 and --samples >= 1");
    enforce_cap(n);
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> seeds(samples);
    for (auto & s : seeds)
        s = rng();

    std::vector<NordhausGaddumReport> reports(samples);
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            auto g = gen::gnp_random(n, 0.5, seeds[static_cast<std::size_t>(i)]);
            reports[static_cast<std::size_t>(i)] = nordhaus_gaddum(g, all_pairs_distances_serial(g));
        }
        catch (...) {
#pragma omp critical(burn_ng_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::size_t min_sum = SIZE_MAX, max_sum = 0, min_product = SIZE_MAX, max_product = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally; // name -> (applicable, passed)
    bool all = true;
    for (const auto & r : reports) {
        min_sum = std::min(min_sum, r.sum);
        max_sum = std::max(max_sum, r.sum);
        min_product = std::min(min_product, r.product);
        max_product = std::max(max_product, r.product);
        all = all && r.all_passed();
        for (const auto & c : r.checks)
            if (c.applicable) {
                ++tally[c.name].first;
                tally[c.name].second += c.passed ? 1 : 0;
            }
    }
    json checks = json::object();
    std::ostringstream text;
    text << "G(" << n << ", 1/2), " << samples << " samples\n"
         << "sum in [" << min_sum << ", " << max_sum << "], product in [" << min_product << ", " << max_product << "]\n";
    for (const auto & [name, t] : tally) {
        checks[name] = {{"applicable", t.first}, {"passed", t.second}};
        text << "  " << std::left << std::setw(34) << name << t.second << '/' << t.first << '\n';
    }
    json result = {{"n", n},       {"samples", samples},         {"min_sum", min_sum}, {"max_sum", max_sum},
                   {"min_product", min_product}, {"max_product", max_product}, {"checks", checks},
                   {"all_passed", all}};
    out.emit({"ng", "sample:gnp:" + std::to_string(n) + ":0.5", result, seed}, text.str());
    return all ? ok : internal_error;
}

int cmd_ilt(const std::string & g0_spec, std::size_t t, const Runner & out)
{
    auto g0 = parse_generator_spec(g0_spec);
    if (t == 0)
        throw BurnError(ErrorCode::invalid_parameter, "--t must be at least 1");
    if (t < 63)
        enforce_cap(g0.order() << t);
    auto v = ilt_verify(g0, t);

    std::ostringstream text;
    text << "b(G_0) = " << v.prediction.b0 << ", predicted " << v.prediction.predicted << '\n';
    for (const auto & row : v.rows)
        text << "t=" << row.t << " n=" << row.order << " exact " << row.exact << (row.match ? " match" : " MISMATCH")
             << '\n';
    text << (v.all_match ? "all match" : "mismatch") << (v.constant ? ", constant in t" : ", not constant") << '\n';
    out.emit({"ilt", "gen:" + g0_spec, v, {}}, text.str());
    return v.all_match && v.constant ? ok : internal_error;
}

int cmd_gen(const std::string & spec, const std::string & output)
{
    auto g = parse_generator_spec(spec);
    enforce_cap(g.order());
    if (output.empty() || output == "-") {
        write_edge_list(std::cout, g);
        return ok;
    }
    std::ofstream file(output);
    if (!file)
        throw BurnError(ErrorCode::parse_error, "cannot write " + output);
    write_edge_list(file, g);
    return ok;
}

int cmd_suite(std::uint64_t seed, const std::string & catalog, int only, bool as_json)
{
    suite::SuiteOptions opts;
    opts.seed = seed;
    if (!catalog.empty())
        opts.catalog_cache = catalog;
    if (!as_json)
        opts.on_result = [](const suite::CriterionResult & r) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << std::setw(2) << r.id << "  " << r.name << ": " << r.detail
                      << " [" << std::fixed << std::setprecision(2) << r.seconds << " s]\n"
                      << std::defaultfloat << std::flush;
        };
    std::vector<suite::CriterionResult> results;
    if (only > 0)
        results.push_back(suite::run_one(only, opts));
    else
        results = suite::run_all(opts);

    const auto passed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto & r) { return r.passed; }));
    if (as_json) {
        json rows = json::array();
        for (const auto & r : results)
            rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        Runner(true).emit({"suite", "builtin", {{"criteria", rows}, {"passed", passed}, {"total", results.size()}}, seed},
                          "");
    }
    else
        std::cout << passed << '/' << results.size() << " criteria passed\n";
    return passed == results.size() ? ok : suite_failed;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::limit_exceeded:
        return resource_limit;
    case ErrorCode::internal:
        return internal_error;
    default:
        return input_error;
    }
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Graph burning: exact burning numbers, bounds, ILT checks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    GraphSource exact_src, verify_src, bounds_src, gamma_src, ng_src;
    bool no_closed_form = false, with_exact = false;
    std::string sequence, ham_path, g0 = "path:4", gen_spec, gen_out, catalog;
    std::uint32_t k = 1;
    std::size_t n = 10, samples = 100, t = 2;
    std::uint64_t seed = suite::SuiteOptions{}.seed;
    int only = 0;

    auto * exact = app.add_subcommand("exact", "exact burning number with a witness sequence");
    exact_src.add_to(exact);
    exact->add_flag("--no-closed-form", no_closed_form, "always run the search");

    auto * verify = app.add_subcommand("verify", "check a burning sequence with both checkers");
    verify_src.add_to(verify);
    verify->add_option("--sequence", sequence, "comma-separated node ids")->required();

    auto * bounds = app.add_subcommand("bounds", "lower and upper bounds, optionally with the exact value");
    bounds_src.add_to(bounds);
    bounds->add_flag("--exact", with_exact, "also solve exactly");
    bounds->add_option("--ham-path", ham_path, "Hamiltonian path as comma-separated ids");

    auto * gamma = app.add_subcommand("gamma", "k-distance domination number");
    gamma_src.add_to(gamma);
    gamma->add_option("--k", k, "distance")->required()->check(CLI::PositiveNumber);

    auto * ng = app.add_subcommand("ng", "graph versus complement comparison");
    ng_src.add_to(ng);
    ng->add_option("--n", n, "order of sampled G(n, 1/2) graphs");
    ng->add_option("--samples", samples, "number of samples");
    ng->add_option("--seed", seed, "sampling seed");

    auto * ilt = app.add_subcommand("ilt", "ILT iteration: predicted against exact");
    ilt->add_option("--g0", g0, "generator spec of the initial graph");
    ilt->add_option("--t", t, "number of steps");

    auto * suite_cmd = app.add_subcommand("suite", "run the reproduction criteria");
    suite_cmd->add_option("--seed", seed, "seed for random instances");
    suite_cmd->add_option("--catalog", catalog, "catalog cache file");
    suite_cmd->add_option("--only", only, "run one criterion")->check(CLI::Range(1, suite::criterion_count));

    auto * gen = app.add_subcommand("gen", "write a generated graph as an edge list");
    gen->add_option("spec", gen_spec, "generator spec")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return input_error;
    }

    try {
        const Runner out(as_json);
        if (*exact)
            return cmd_exact(exact_src, no_closed_form, out);
        if (*verify)
            return cmd_verify(verify_src, sequence, out);
        if (*bounds)
            return cmd_bounds(bounds_src, with_exact, ham_path, out);
        if (*gamma)
            return cmd_gamma(gamma_src, k, out);
        if (*ng)
            return cmd_ng(ng_src, n, samples, seed, out);
        if (*ilt)
            return cmd_ilt(g0, t, out);
        if (*suite_cmd)
            return cmd_suite(seed, catalog, only, as_json);
        if (*gen)
            return cmd_gen(gen_spec, gen_out);
    }
    catch (const BurnError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return internal_error;
    }
    return input_error;
}
