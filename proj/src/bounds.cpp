#include <burn/bounds.hpp>
#include <burn/error.hpp>
#include <burn/solver.hpp>

#include <algorithm>
#include <limits>

namespace burn {
namespace {

    /// Minimum set cover of V by the radius-k balls; branch on the uncovered node
    /// with the fewest unforbidden covering centres, bound by ceil(U / largest ball).
    class DominationSearch {
    public:
        DominationSearch(const Graph & g, const DistanceMatrix & dm, std::uint32_t k) : n_(g.order()), forbidden_(n_)
        {
            balls_.reserve(n_);
            for (NodeId v = 0; v < n_; ++v) {
                balls_.push_back(ball(g, dm, v, k));
                largest_ = std::max(largest_, balls_.back().count());
            }
        }

        std::size_t solve()
        {
            best_ = greedy();
            NodeSet covered(n_);
            dfs(covered, 0);
            return best_;
        }

    private:
        std::size_t greedy() const
        {
            NodeSet covered(n_);
            std::size_t used = 0;
            while (!covered.is_full()) {
                NodeId pick = 0;
                std::size_t gain = 0;
                for (NodeId v = 0; v < n_; ++v)
                    if (auto gv = balls_[v].count_outside(covered); gv > gain) {
                        gain = gv;
                        pick = v;
                    }
                covered |= balls_[pick];
                ++used;
            }
            return used;
        }

        void dfs(const NodeSet & covered, std::size_t chosen)
        {
            const auto uncovered = n_ - covered.count();
            if (uncovered == 0) {
                best_ = std::min(best_, chosen);
                return;
            }
            if (chosen + (uncovered + largest_ - 1) / largest_ >= best_)
                return;

            std::optional<NodeId> target;
            std::size_t fewest = std::numeric_limits<std::size_t>::max();
            for (NodeId u = 0; u < n_; ++u)
                if (!covered.contains(u))
                    // balls are symmetric: centres covering u are exactly N_k[u]
                    if (auto c = balls_[u].count_outside(forbidden_); c < fewest) {
                        fewest = c;
                        target = u;
                    }
            if (fewest == 0)
                return;

            std::vector<std::pair<std::size_t, NodeId>> options;
            balls_[*target].for_each([&](NodeId c) {
                if (!forbidden_.contains(c))
                    options.emplace_back(balls_[c].count_outside(covered), c);
            });
            std::stable_sort(options.begin(), options.end(), [](auto & a, auto & b) { return a.first > b.first; });

            std::vector<NodeId> tried;
            for (auto [gain, c] : options) {
                NodeSet next = covered;
                next |= balls_[c];
                dfs(next, chosen + 1);
                forbidden_.insert(c);
                tried.push_back(c);
            }
            for (auto c : tried)
                forbidden_.erase(c);
        }

        std::size_t n_;
        std::vector<NodeSet> balls_;
        std::size_t largest_ = 1;
        NodeSet forbidden_;
        std::size_t best_ = 0;
    };

    NgCheck check(std::string name, bool applicable, bool passed, bool asserted = true)
    {
        return NgCheck{std::move(name), applicable, applicable ? passed : true, asserted};
    }

} // namespace

std::size_t gamma_k(const Graph & g, const DistanceMatrix & dm, std::uint32_t k)
{
    if (k == 0)
        throw BurnError(ErrorCode::invalid_parameter, "gamma_k needs k >= 1");
    return DominationSearch(g, dm, k).solve();
}

std::optional<std::size_t> diameter_lower_bound(const GraphMetrics & m)
{
    if (!m.diameter)
        return std::nullopt;
    return ceil_sqrt(std::size_t{*m.diameter} + 1);
}

std::optional<std::size_t> radius_upper_bound(const GraphMetrics & m)
{
    if (!m.radius)
        return std::nullopt;
    return std::size_t{*m.radius} + 1;
}

std::size_t max_degree_upper_bound(const Graph & g)
{
    const auto n = g.order();
    const auto delta = g.max_degree();
    if (n >= 2 && delta == n - 1)
        return 2;
    return n - delta;
}

std::optional<std::size_t> order_upper_bound(const Graph & g, const GraphMetrics & m)
{
    if (!m.connected)
        return std::nullopt;
    return 2 * ceil_sqrt(g.order()) - 1;
}

bool is_hamiltonian_path(const Graph & g, std::span<const NodeId> path)
{
    if (path.size() != g.order())
        return false;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.order() || seen[path[i]])
            return false;
        seen[path[i]] = true;
        if (i > 0 && !g.adjacent(path[i - 1], path[i]))
            return false;
    }
    return true;
}

bool NordhausGaddumReport::all_passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const NgCheck & c) { return !c.asserted || c.passed; });
}

const NgCheck * NordhausGaddumReport::find(const std::string & name) const noexcept
{
    for (const auto & c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::optional<std::size_t> BoundsReport::best_lower() const noexcept
{
    std::optional<std::size_t> best;
    for (const auto & b : lower)
        if (b.value)
            best = std::max(best.value_or(0), *b.value);
    return best;
}

std::optional<std::size_t> BoundsReport::best_upper() const noexcept
{
    std::optional<std::size_t> best;
    for (const auto & b : upper)
        if (b.value)
            best = std::min(best.value_or(std::numeric_limits<std::size_t>::max()), *b.value);
    return best;
}

bool BoundsReport::sandwich_holds() const noexcept
{
    auto lo = best_lower();
    auto hi = best_upper();
    if (exact)
        return (!lo || *lo <= *exact) && (!hi || *exact <= *hi);
    return !lo || !hi || *lo <= *hi;
}

BoundsReport bounds_report(const Graph & g, const DistanceMatrix & dm, const BoundsOptions & options)
{
    const auto m = metrics(g, dm);
    const auto n = g.order();
    BoundsReport r;
    r.n = n;
    r.connected = m.connected;

    if (m.connected && n >= 2) {
        // gamma_k = 1 exactly when k >= radius.
        for (std::uint32_t k = 1; k < n; ++k)
            r.gamma[k] = k >= *m.radius ? 1 : gamma_k(g, dm, k);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (auto [k, gk] : r.gamma)
            best = std::min(best, gk + k);
        r.m_star = best;
    }

    std::optional<std::size_t> dom_lower, dom_upper;
    if (r.m_star) {
        dom_lower = (*r.m_star + 2) / 2; // ceil((m + 1) / 2)
        dom_upper = *r.m_star;
    }
    r.lower = {{"diameter", diameter_lower_bound(m)}, {"domination_m", dom_lower}};
    r.upper = {{"radius", radius_upper_bound(m)},
               {"max_degree", max_degree_upper_bound(g)},
               {"domination_m", dom_upper},
               {"order", order_upper_bound(g, m)}};
    if (options.hamiltonian_path) {
        std::optional<std::size_t> value;
        if (is_hamiltonian_path(g, *options.hamiltonian_path))
            value = ceil_sqrt(n);
        r.upper.push_back({"hamiltonian", value});
    }

    if (options.with_exact || options.with_ng)
        r.exact = burning_number(g, dm).burning_number;
    if (options.with_ng && n >= 2)
        r.ng_checks = nordhaus_gaddum(g, dm);
    return r;
}

ConjectureCheck conjecture_check(const Graph & g, const DistanceMatrix & dm)
{
    if (!dm.connected())
        throw BurnError(ErrorCode::disconnected, "conjecture check needs a connected graph");
    ConjectureCheck c;
    c.exact = burning_number(g, dm).burning_number;
    c.bound = ceil_sqrt(g.order());
    c.holds = c.exact <= c.bound;
    return c;
}

NordhausGaddumReport nordhaus_gaddum(const Graph & g, const DistanceMatrix & dm)
{
    const auto n = g.order();
    if (n < 2)
        throw BurnError(ErrorCode::invalid_parameter, "Nordhaus-Gaddum comparison needs n >= 2");
    auto gc = complement(g);
    auto dmc = all_pairs_distances(gc);

    NordhausGaddumReport r;
    r.n = n;
    r.b = burning_number(g, dm).burning_number;
    r.b_complement = burning_number(gc, dmc).burning_number;
    r.sum = r.b + r.b_complement;
    r.product = r.b * r.b_complement;
    r.connected = dm.connected();
    r.complement_connected = dmc.connected();

    const bool both = r.connected && r.complement_connected;
    const auto root = ceil_sqrt(n);
    r.checks = {
        check("sum_ge_4", true, r.sum >= 4),
        check("sum_le_n_plus_2", true, r.sum <= n + 2),
        check("product_le_2n", n >= 6, r.product <= 2 * n),
        check("sum_le_3_ceil_sqrt_n_minus_1", both && n >= 6, r.sum <= 3 * root - 1),
        check("product_le_n_plus_6", both && n >= 6, r.product <= n + 6),
        check("conjecture_product_le_n_plus_4", both, r.product <= n + 4, false),
    };
    return r;
}

bool gamb_check(const Graph & g, const DistanceMatrix & dm, std::size_t b)
{
    if (b < 2)
        throw BurnError(ErrorCode::invalid_parameter, "gamma bound needs b >= 2");
    return b >= gamma_k(g, dm, static_cast<std::uint32_t>(b - 1));
}

void to_json(nlohmann::json & j, const NamedBound & b)
{
    j = b.value ? nlohmann::json(*b.value) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json & j, const NgCheck & c)
{
    j = {{"applicable", c.applicable}, {"passed", c.passed}, {"asserted", c.asserted}};
}

void to_json(nlohmann::json & j, const NordhausGaddumReport & r)
{
    nlohmann::json checks = nlohmann::json::object();
    for (const auto & c : r.checks)
        checks[c.name] = c;
    j = {{"n", r.n},
         {"b", r.b},
         {"b_complement", r.b_complement},
         {"sum", r.sum},
         {"product", r.product},
         {"connected", r.connected},
         {"complement_connected", r.complement_connected},
         {"checks", checks},
         {"all_passed", r.all_passed()}};
}

void to_json(nlohmann::json & j, const BoundsReport & r)
{
    nlohmann::json lower = nlohmann::json::object(), upper = nlohmann::json::object(), gamma = nlohmann::json::object();
    for (const auto & b : r.lower)
        lower[b.name] = b;
    for (const auto & b : r.upper)
        upper[b.name] = b;
    for (auto [k, gk] : r.gamma)
        gamma[std::to_string(k)] = gk;
    j = {{"n", r.n},
         {"connected", r.connected},
         {"lower", lower},
         {"upper", upper},
         {"gamma", gamma},
         {"m_star", r.m_star ? nlohmann::json(*r.m_star) : nlohmann::json(nullptr)},
         {"exact", r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr)},
         {"ng_checks", r.ng_checks ? nlohmann::json(*r.ng_checks) : nlohmann::json(nullptr)}};
}

} // namespace burn
