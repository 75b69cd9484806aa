#include <burn/bounds.hpp>
#include <burn/error.hpp>
#include <burn/solver.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>

namespace burn {
namespace {

    /// balls[r][v] = N_r[v] for r in [0, max_radius].
    class BallTable {
    public:
        BallTable(const DistanceMatrix & dm, std::uint32_t max_radius) : balls_(max_radius + 1)
        {
            const auto n = dm.order();
            for (auto & layer : balls_)
                layer.assign(n, NodeSet(n));
            for (NodeId v = 0; v < n; ++v) {
                auto row = dm.row(v);
                for (NodeId u = 0; u < n; ++u)
                    if (row[u] <= max_radius)
                        for (auto r = row[u]; r <= max_radius; ++r)
                            balls_[r][v].insert(u);
            }
            max_size_.resize(balls_.size(), 0);
            for (std::size_t r = 0; r < balls_.size(); ++r)
                for (const auto & b : balls_[r])
                    max_size_[r] = std::max(max_size_[r], b.count());
        }

        [[nodiscard]] const NodeSet & ball(std::uint32_t r, NodeId v) const noexcept { return balls_[r][v]; }
        [[nodiscard]] std::size_t max_size(std::uint32_t r) const noexcept { return max_size_[r]; }

    private:
        std::vector<std::vector<NodeSet>> balls_;
        std::vector<std::size_t> max_size_;
    };

    struct Option {
        std::size_t position;
        NodeId centre;
        std::size_t gain;
    };

    /// Search for centres c_p, one per position p (radius k-1-p), covering V.
    /// Branches on the uncovered node with fewest (position, centre) options;
    /// a failed sibling option is forbidden in the remaining siblings' subtrees.
    class CoverSearch {
    public:
        CoverSearch(const DistanceMatrix & dm, std::size_t k) :
            n_(dm.order()), k_(k), balls_(dm, static_cast<std::uint32_t>(k - 1)), forbidden_(k, NodeSet(n_)),
            centre_(k, unreachable)
        {
        }

        [[nodiscard]] std::uint32_t radius(std::size_t position) const noexcept
        {
            return static_cast<std::uint32_t>(k_ - 1 - position);
        }

        /// Root options in search order; sibling i is searched with options 0..i-1 forbidden.
        std::vector<Option> root_options() const { return options_for(NodeSet(n_)); }

        /// Serial search from the root.
        bool run(std::uint64_t & explored)
        {
            NodeSet covered(n_);
            return dfs(covered, n_, explored, nullptr, 0);
        }

        /// Search only the subtree under root option `index`, forbidding the earlier siblings.
        /// Gives up early once `best` drops below `index`.
        bool run_branch(const std::vector<Option> & roots, std::size_t index, std::uint64_t & explored,
                        const std::atomic<std::size_t> * best)
        {
            for (std::size_t i = 0; i < index; ++i)
                forbidden_[roots[i].position].insert(roots[i].centre);
            NodeSet covered(n_);
            ++explored;
            return take(covered, n_, roots[index], explored, best, index);
        }

        /// Centres of used positions, in position order.
        [[nodiscard]] std::vector<NodeId> centres() const
        {
            std::vector<NodeId> out;
            for (auto c : centre_)
                if (c != unreachable)
                    out.push_back(c);
            return out;
        }

    private:
        std::vector<Option> options_for(const NodeSet & covered) const
        {
            // Most constrained uncovered node.
            std::optional<NodeId> target;
            std::size_t fewest = std::numeric_limits<std::size_t>::max();
            for (NodeId u = 0; u < n_; ++u) {
                if (covered.contains(u))
                    continue;
                std::size_t options = 0;
                for (std::size_t p = 0; p < k_; ++p)
                    if (centre_[p] == unreachable)
                        options += balls_.ball(radius(p), u).count_outside(forbidden_[p]);
                if (options < fewest) {
                    fewest = options;
                    target = u;
                }
            }
            std::vector<Option> out;
            if (!target)
                return out;
            for (std::size_t p = 0; p < k_; ++p) {
                if (centre_[p] != unreachable)
                    continue;
                auto first = out.size();
                // N_r[u] is exactly the set of centres whose radius-r ball reaches u.
                balls_.ball(radius(p), *target).for_each([&](NodeId c) {
                    if (!forbidden_[p].contains(c))
                        out.push_back({p, c, balls_.ball(radius(p), c).count_outside(covered)});
                });
                std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                                 [](const Option & a, const Option & b) { return a.gain > b.gain; });
            }
            return out;
        }

        std::size_t remaining_capacity() const noexcept
        {
            std::size_t cap = 0;
            for (std::size_t p = 0; p < k_; ++p)
                if (centre_[p] == unreachable)
                    cap += balls_.max_size(radius(p));
            return cap;
        }

        bool take(const NodeSet & covered, std::size_t uncovered, const Option & opt, std::uint64_t & explored,
                  const std::atomic<std::size_t> * best, std::size_t branch)
        {
            NodeSet next = covered;
            next |= balls_.ball(radius(opt.position), opt.centre);
            centre_[opt.position] = opt.centre;
            if (dfs(next, uncovered - opt.gain, explored, best, branch))
                return true;
            centre_[opt.position] = unreachable;
            return false;
        }

        bool dfs(const NodeSet & covered, std::size_t uncovered, std::uint64_t & explored,
                 const std::atomic<std::size_t> * best, std::size_t branch)
        {
            ++explored;
            if (uncovered == 0)
                return true;
            if (best && (explored & 0x3FF) == 0 && best->load(std::memory_order_relaxed) < branch)
                return false;
            if (remaining_capacity() < uncovered)
                return false;

            auto options = options_for(covered);
            std::vector<Option> tried;
            bool found = false;
            for (const auto & opt : options) {
                if (take(covered, uncovered, opt, explored, best, branch)) {
                    found = true;
                    break;
                }
                forbidden_[opt.position].insert(opt.centre);
                tried.push_back(opt);
            }
            for (const auto & opt : tried)
                forbidden_[opt.position].erase(opt.centre);
            return found;
        }

        std::size_t n_;
        std::size_t k_;
        BallTable balls_;
        std::vector<NodeSet> forbidden_;
        std::vector<NodeId> centre_; // unreachable: position unused
    };

    BurningSequence checked_witness(const Graph & g, const DistanceMatrix & dm, std::span<const NodeId> centres,
                                    std::size_t k)
    {
        auto seq = sequence_from_centres(g, centres);
        if (seq.size() > k || !is_valid_characterization(g, dm, seq).valid)
            throw BurnError(ErrorCode::internal, "cover conversion produced an invalid sequence");
        return seq;
    }

    /// Smallest k whose k largest-possible balls (radii k-1..0) reach n nodes in total.
    std::size_t counting_lower_bound(const DistanceMatrix & dm)
    {
        const auto n = dm.order();
        std::size_t total = 0;
        for (std::uint32_t k = 1;; ++k) {
            std::size_t biggest = 0;
            for (NodeId v = 0; v < n; ++v) {
                std::size_t size = 0;
                for (auto d : dm.row(v))
                    size += d <= k - 1 ? 1 : 0;
                biggest = std::max(biggest, size);
            }
            total += biggest;
            if (total >= n)
                return k;
        }
    }

    std::size_t lower_bound(const Graph & g, const DistanceMatrix & dm)
    {
        auto m = metrics(g, dm);
        std::size_t lb = g.order() >= 2 ? 2 : 1;
        // Every component needs its own source, and contains an isometric
        // shortest path of diameter + 1 nodes.
        lb = std::max(lb, m.components.size());
        for (const auto & c : m.components)
            lb = std::max(lb, ceil_sqrt(std::size_t{c.diameter} + 1));
        return std::max(lb, counting_lower_bound(dm));
    }

} // namespace

std::string_view to_string(SolveMethod method) noexcept
{
    switch (method) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::closed_form: return "closed-form";
    case SolveMethod::heuristic_upper: return "heuristic-upper";
    }
    return "unknown";
}

DecideResult decide_serial(const Graph & g, const DistanceMatrix & dm, std::size_t k)
{
    DecideResult result;
    if (k == 0)
        return result;
    CoverSearch search(dm, k);
    if (search.run(result.nodes_explored))
        result.witness = checked_witness(g, dm, search.centres(), k);
    return result;
}

DecideResult decide(const Graph & g, const DistanceMatrix & dm, std::size_t k)
{
    DecideResult result;
    if (k == 0)
        return result;

    const auto roots = CoverSearch(dm, k).root_options();
    const auto count = static_cast<std::ptrdiff_t>(roots.size());
    if (count < 2 || g.order() < 24)
        return decide_serial(g, dm, k);

    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best{none};
    std::vector<std::vector<NodeId>> found(roots.size());
    // Branches past the winner may stop at arbitrary points; only branches up
    // to it are counted so the total does not depend on scheduling.
    std::vector<std::uint64_t> explored(roots.size(), 0);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        auto index = static_cast<std::size_t>(i);
        if (best.load() < index)
            continue;
        try {
            CoverSearch search(dm, k);
            if (search.run_branch(roots, index, explored[index], &best)) {
                found[index] = search.centres();
                auto current = best.load();
                while (index < current && !best.compare_exchange_weak(current, index)) {
                }
            }
        }
        catch (...) {
#pragma omp critical(burn_decide_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    const auto last = std::min(best.load(), roots.size() - 1);
    result.nodes_explored = 1;
    for (std::size_t i = 0; i <= last; ++i)
        result.nodes_explored += explored[i];
    if (best.load() != none)
        result.witness = checked_witness(g, dm, found[best.load()], k);
    return result;
}

BurningSequence path_witness(std::size_t n)
{
    if (n == 0)
        throw BurnError(ErrorCode::empty_graph, "path of order 0");
    const auto k = ceil_sqrt(n);
    // 1-based positions v_1..v_n map to ids 0..n-1.
    auto at = [](std::size_t position) { return static_cast<NodeId>(position - 1); };
    BurningSequence seq;
    seq.sources.resize(k);
    for (std::size_t i = 0; i + 2 <= k; ++i)
        seq.sources[k - i - 1] = at(n - i * i - i);
    const auto j = k - 1;
    seq.sources[0] = n >= j * j + k ? at(n - j * j - j) : at(1);
    return seq;
}

std::optional<SolveResult> closed_form(const Graph & g, const DistanceMatrix & dm)
{
    const auto n = g.order();
    SolveResult r;
    r.method = SolveMethod::closed_form;
    switch (g.family()) {
    case GraphFamily::none:
        return std::nullopt;
    case GraphFamily::path:
        r.burning_number = ceil_sqrt(n);
        r.witness = path_witness(n);
        break;
    case GraphFamily::cycle:
        // Balls in the cycle contain the path balls along the Hamiltonian path 0..n-1.
        r.burning_number = ceil_sqrt(n);
        r.witness = sequence_from_centres(g, path_witness(n).sources);
        break;
    case GraphFamily::complete:
        r.burning_number = std::min<std::size_t>(n, 2);
        r.witness.sources = n == 1 ? std::vector<NodeId>{0} : std::vector<NodeId>{0, 1};
        break;
    }
    if (r.witness.size() != r.burning_number || !is_valid_characterization(g, dm, r.witness).valid)
        throw BurnError(ErrorCode::internal, "closed-form witness failed validation");
    return r;
}

SolveResult greedy_upper_bound(const Graph & g, const DistanceMatrix & dm)
{
    const auto n = g.order();
    for (auto k = counting_lower_bound(dm);; ++k) {
        NodeSet covered(n);
        std::vector<NodeId> centres;
        for (std::size_t p = 0; p < k && !covered.is_full(); ++p) {
            const auto r = static_cast<std::uint32_t>(k - 1 - p);
            NodeId pick = 0;
            std::size_t best_gain = 0;
            for (NodeId x = 0; x < n; ++x) {
                std::size_t gain = 0;
                auto row = dm.row(x);
                for (NodeId v = 0; v < n; ++v)
                    gain += (row[v] <= r && !covered.contains(v)) ? 1 : 0;
                if (gain > best_gain) {
                    best_gain = gain;
                    pick = x;
                }
            }
            centres.push_back(pick);
            covered |= ball(g, dm, pick, r);
        }
        if (covered.is_full()) {
            SolveResult result;
            result.witness = checked_witness(g, dm, centres, k);
            result.burning_number = result.witness.size();
            result.method = SolveMethod::heuristic_upper;
            return result;
        }
    }
}

SolveResult burning_number(const Graph & g, const DistanceMatrix & dm, const SolverOptions & options)
{
    if (options.allow_closed_form)
        if (auto cf = closed_form(g, dm))
            return *cf;

    auto upper = greedy_upper_bound(g, dm);
    SolveResult result;
    result.method = SolveMethod::exact;
    for (auto k = lower_bound(g, dm); k < upper.burning_number; ++k) {
        auto d = options.parallel ? decide(g, dm, k) : decide_serial(g, dm, k);
        result.nodes_explored += d.nodes_explored;
        if (d.witness) {
            result.burning_number = k;
            result.witness = std::move(*d.witness);
            if (result.witness.size() != k)
                throw BurnError(ErrorCode::internal, "witness shorter than the smallest feasible k");
            return result;
        }
    }
    result.burning_number = upper.burning_number;
    result.witness = std::move(upper.witness);
    return result;
}

OptimalSequences enumerate_optimal_sequences(const Graph & g, const DistanceMatrix & dm, std::size_t limit)
{
    OptimalSequences out;
    const auto k = burning_number(g, dm).burning_number;
    out.burning_number = k;
    const auto n = g.order();
    BallTable balls(dm, static_cast<std::uint32_t>(k - 1));

    // suffix_cap[p] = sum of the largest balls available to positions p..k-1
    std::vector<std::size_t> suffix_cap(k + 1, 0);
    for (std::size_t p = k; p-- > 0;)
        suffix_cap[p] = suffix_cap[p + 1] + balls.max_size(static_cast<std::uint32_t>(k - 1 - p));

    BurningSequence seq;
    std::vector<bool> used(n, false);
    bool stop = false;

    auto recurse = [&](auto && self, std::size_t p, const NodeSet & covered) -> void {
        if (stop)
            return;
        if (p == k) {
            if (!covered.is_full())
                return;
            if (!simulate(g, seq).valid())
                throw BurnError(ErrorCode::internal, "covering sequence " + format_sequence(seq) + " failed simulation");
            if (out.sequences.size() == limit) {
                out.limit_exceeded = true;
                stop = true;
                return;
            }
            out.sequences.push_back(seq);
            return;
        }
        if (n - covered.count() > suffix_cap[p])
            return;
        for (NodeId x = 0; x < n && !stop; ++x) {
            if (used[x])
                continue;
            bool far_enough = true;
            for (std::size_t i = 0; i < p && far_enough; ++i)
                far_enough = dm(seq[i], x) >= p - i;
            if (!far_enough)
                continue;
            NodeSet next = covered;
            next |= balls.ball(static_cast<std::uint32_t>(k - 1 - p), x);
            used[x] = true;
            seq.sources.push_back(x);
            self(self, p + 1, next);
            seq.sources.pop_back();
            used[x] = false;
        }
    };
    recurse(recurse, 0, NodeSet(n));
    return out;
}

std::size_t burning_number_via_spanning_trees(const Graph & g, const DistanceMatrix & dm, std::size_t tree_limit)
{
    (void)dm;
    auto trees = enumerate_spanning_trees(g, tree_limit);
    auto values = burning_numbers(trees, SolverOptions{.allow_closed_form = false, .parallel = false});
    return *std::min_element(values.begin(), values.end());
}

std::vector<std::size_t> burning_numbers(std::span<const Graph> graphs, const SolverOptions & options)
{
    std::vector<std::size_t> out(graphs.size(), 0);
    std::exception_ptr failure;
    auto inner = options;
    inner.parallel = false;
    const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const auto & g = graphs[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = burning_number(g, all_pairs_distances_serial(g), inner).burning_number;
        }
        catch (...) {
#pragma omp critical(burn_batch_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace burn
