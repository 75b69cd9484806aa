#include <burn/error.hpp>
#include <burn/ilt.hpp>
#include <burn/solver.hpp>

#include <algorithm>
#include <exception>

namespace burn {

IltStep ilt_step(const Graph & g)
{
    const auto n = static_cast<NodeId>(g.order());
    auto edges = g.edges();
    IltStep step{Graph::from_edge_list(1, {}), {}};
    step.clone.resize(n);
    for (NodeId x = 0; x < n; ++x) {
        const NodeId twin = x + n;
        step.clone[x] = twin;
        edges.emplace_back(x, twin);
        for (auto w : g.neighbors(x))
            edges.emplace_back(w, twin);
    }
    step.graph = Graph::from_edge_list(2 * std::size_t{n}, edges);
    return step;
}

IltTrace ilt_iterate(const Graph & g0, std::size_t t, std::size_t max_nodes)
{
    if (!is_connected(g0))
        throw BurnError(ErrorCode::disconnected, "ILT needs a connected initial graph");
    if (t >= 63 || (g0.order() << t) > max_nodes || ((g0.order() << t) >> t) != g0.order())
        throw BurnError(ErrorCode::limit_exceeded, "G_" + std::to_string(t) + " would exceed " +
                                                       std::to_string(max_nodes) + " nodes");
    IltTrace trace{g0, {}};
    for (std::size_t s = 0; s < t; ++s)
        trace.steps.push_back(ilt_step(trace.at(s)));
    return trace;
}

IltPrediction ilt_predict(const Graph & g0, const DistanceMatrix & dm, std::size_t limit)
{
    if (!dm.connected())
        throw BurnError(ErrorCode::disconnected, "ILT needs a connected initial graph");
    auto optimal = enumerate_optimal_sequences(g0, dm, limit);
    if (optimal.limit_exceeded)
        throw BurnError(ErrorCode::limit_exceeded, "more than " + std::to_string(limit) + " optimal sequences");

    IltPrediction p;
    p.b0 = optimal.burning_number;
    p.optimal_sequences = optimal.sequences.size();
    const auto k = p.b0;
    for (const auto & seq : optimal.sequences) {
        const auto & round = simulate(g0, seq).schedule.burn_round;
        const auto last = seq[k - 1];
        auto nbrs = g0.neighbors(last);
        if (std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId w) { return round[w] < k; })) {
            p.early_neighbour_witness = seq;
            break;
        }
    }
    p.predicted = p.early_neighbour_witness ? k : k + 1;
    return p;
}

IltVerification ilt_verify(const Graph & g0, std::size_t t_max)
{
    IltVerification v;
    v.prediction = ilt_predict(g0, all_pairs_distances(g0));
    auto trace = ilt_iterate(g0, t_max);

    v.rows.resize(t_max);
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(t_max);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const auto t = static_cast<std::size_t>(i) + 1;
            const auto & gt = trace.at(t);
            auto & row = v.rows[static_cast<std::size_t>(i)];
            row.t = t;
            row.order = gt.order();
            row.exact = burning_number(gt, all_pairs_distances_serial(gt), {.allow_closed_form = false, .parallel = false})
                            .burning_number;
            row.predicted = v.prediction.predicted;
            row.match = row.exact == row.predicted;
        }
        catch (...) {
#pragma omp critical(burn_ilt_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    v.all_match = std::all_of(v.rows.begin(), v.rows.end(), [](const IltRow & r) { return r.match; });
    v.constant = std::all_of(v.rows.begin(), v.rows.end(),
                             [&](const IltRow & r) { return r.exact == v.rows.front().exact; });
    return v;
}

void to_json(nlohmann::json & j, const IltPrediction & p)
{
    j = {{"b0", p.b0},
         {"predicted", p.predicted},
         {"optimal_sequences", p.optimal_sequences},
         {"early_neighbour_witness",
          p.early_neighbour_witness ? nlohmann::json(p.early_neighbour_witness->sources) : nlohmann::json(nullptr)}};
}

void to_json(nlohmann::json & j, const IltVerification & v)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto & r : v.rows)
        rows.push_back({{"t", r.t}, {"order", r.order}, {"exact", r.exact}, {"predicted", r.predicted}, {"match", r.match}});
    j = {{"prediction", v.prediction}, {"rows", rows}, {"all_match", v.all_match}, {"constant", v.constant}};
}

} // namespace burn
