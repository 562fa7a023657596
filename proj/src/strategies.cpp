#include "coolnum/strategies.hpp"

#include "coolnum/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <deque>

namespace coolnum {

namespace {

int param(const std::map<std::string, int> & params, const std::string & key, int minimum, Family family)
{
    auto it = params.find(key);
    if (it == params.end())
        throw InvalidArgument(to_string(family) + ": missing parameter " + key);
    if (it->second < minimum)
        throw InvalidArgument(to_string(family) + ": " + key + " must be >= " + std::to_string(minimum) + ", got "
            + std::to_string(it->second));
    return it->second;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Smallest k with 2^k >= x, for x >= 1.
int ceil_log2(int x) { return static_cast<int>(std::bit_width(static_cast<unsigned>(x - 1))); }

int floor_log2(int x) { return static_cast<int>(std::bit_width(static_cast<unsigned>(x))) - 1; }

ClosedForm exact(Family f, std::map<std::string, int> params, int value)
{
    return {f, std::move(params), FormKind::exact, value, value};
}

std::vector<NodeId> simplicial_order(int n)
{
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int row = 1; row <= n; ++row)
        for (int col = 1; col <= n; ++col)
            order.push_back(grid_id(n, {row, col}));
    std::sort(order.begin(), order.end(),
        [n](NodeId a, NodeId b) { return simplicial_cmp(grid_coord(n, a), grid_coord(n, b)) < 0; });
    return order;
}

/// Uncooled node that propagation reaches next, smallest id; else smallest uncooled id.
NodeId frontier_first(const Graph & g, const NodeSet & cooled)
{
    NodeId fallback = -1;
    for (NodeId v = 0; v < g.order(); ++v) {
        if (cooled.contains(v))
            continue;
        if (fallback < 0)
            fallback = v;
        for (NodeId w : g.neighbors(v))
            if (cooled.contains(w))
                return v;
    }
    return fallback;
}

struct SpiderStep {
    int leg;
    bool far_end;
};

class SpiderPolicy : public SourcePolicy {
public:
    SpiderPolicy(int r, std::vector<SpiderStep> schedule) : r_(r), schedule_(std::move(schedule)) {}

    NodeId choose(const Graph & g, const NodeSet & cooled, int round) override
    {
        const auto step = static_cast<std::size_t>(round - 1);
        if (step < schedule_.size()) {
            const auto [leg, far_end] = schedule_[step];
            for (int k = 1; k <= r_; ++k) {
                const NodeId v = spider_node(r_, leg, far_end ? r_ + 1 - k : k);
                if (! cooled.contains(v))
                    return v;
            }
        }
        return frontier_first(g, cooled);
    }

private:
    int r_;
    std::vector<SpiderStep> schedule_;
};

} // namespace

std::string to_string(Family family)
{
    switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::caterpillar: return "caterpillar";
    case Family::spider: return "spider";
    case Family::grid: return "grid";
    case Family::ilt_path: return "ilt_path";
    }
    return "?";
}

std::string to_string(FormKind kind)
{
    switch (kind) {
    case FormKind::exact: return "exact";
    case FormKind::lower_bound: return "lower_bound";
    case FormKind::window: return "window";
    }
    return "?";
}

Family parse_family(const std::string & name)
{
    for (auto f : {Family::path, Family::cycle, Family::caterpillar, Family::spider, Family::grid, Family::ilt_path})
        if (to_string(f) == name)
            return f;
    throw InvalidArgument("unknown family \"" + name + "\"");
}

ClosedForm closed_form(Family family, const std::map<std::string, int> & params)
{
    switch (family) {
    case Family::path: {
        const int n = param(params, "n", 1, family);
        return exact(family, {{"n", n}}, ceil_div(n + 1, 2));
    }
    case Family::cycle: {
        const int n = param(params, "n", 3, family);
        return exact(family, {{"n", n}}, ceil_div(n + 2, 3));
    }
    case Family::caterpillar: {
        const int d = param(params, "d", 3, family);
        return exact(family, {{"d", d}}, d);
    }
    case Family::spider: {
        const int m = param(params, "m", 1, family);
        const int r = param(params, "r", 1, family);
        if (m < ceil_log2(r + 1)) {
            int sum = 0;
            for (int i = 1; i <= m; ++i)
                sum += (r + 1) >> i;
            return {family, {{"m", m}, {"r", r}}, FormKind::lower_bound, 2 * sum, std::nullopt};
        }
        return exact(family, {{"m", m}, {"r", r}}, 2 * r + 1);
    }
    case Family::grid:
        return grid_cl_window(param(params, "n", 2, family));
    case Family::ilt_path: {
        const int n = param(params, "n", 3, family);
        const int t = param(params, "t", 1, family);
        const int base = ceil_div(2 * n, 3);
        return exact(family, {{"n", n}, {"t", t}}, (t == 1 && n % 3 == 2) ? base : base + 1);
    }
    }
    throw InvalidArgument("unknown family");
}

std::string closed_form_to_json(const ClosedForm & form)
{
    nlohmann::ordered_json doc;
    doc["family"] = to_string(form.family);
    doc["params"] = form.params;
    doc["kind"] = to_string(form.kind);
    doc["lo"] = form.lo;
    doc["hi"] = form.hi ? nlohmann::ordered_json(*form.hi) : nlohmann::ordered_json(nullptr);
    return doc.dump();
}

std::strong_ordering simplicial_cmp(GridCoord u, GridCoord v) noexcept
{
    if (auto c = (u.row + u.col) <=> (v.row + v.col); c != 0)
        return c;
    return u.row <=> v.row;
}

SimplicialPolicy::SimplicialPolicy(int n) : order_(simplicial_order(n)) {}

NodeId SimplicialPolicy::choose(const Graph &, const NodeSet & cooled, int)
{
    while (cursor_ < order_.size() && cooled.contains(order_[cursor_]))
        ++cursor_;
    return cursor_ < order_.size() ? order_[cursor_] : -1;
}

CoolingTrace grid_simplicial_strategy(int n)
{
    const Graph g = gen_grid(n);
    SimplicialPolicy policy(n);
    return run_cooling(g, policy);
}

ClosedForm grid_cl_window(int n)
{
    if (n < 2)
        throw InvalidArgument("grid window is defined for n >= 2, got " + std::to_string(n));
    const int lo = 2 * n - 2 * floor_log2(n + 3);
    return {Family::grid, {{"n", n}}, FormKind::window, lo, lo + 2};
}

std::vector<NodeId> diametral_path(const Graph & g)
{
    const int d = diameter(g);

    auto farthest = [&](NodeId from) {
        auto dist = bfs_distances(g, from);
        return static_cast<NodeId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    };
    NodeId a = farthest(farthest(0));
    if (eccentricity(g, a) != d) {
        // Double sweep is only a heuristic off trees; take the smallest node of maximum eccentricity.
        for (a = 0; eccentricity(g, a) != d; ++a) {}
    }
    auto dist = bfs_distances(g, a);
    NodeId b = static_cast<NodeId>(std::find(dist.begin(), dist.end(), d) - dist.begin());

    std::vector<NodeId> path{b};
    while (path.back() != a) {
        const NodeId u = path.back();
        for (NodeId w : g.neighbors(u))
            if (dist[w] == dist[u] - 1) {
                path.push_back(w);
                break;
            }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<NodeId> path_diameter_strategy(const Graph & g)
{
    const auto path = diametral_path(g);
    const int d = static_cast<int>(path.size()) - 1;
    const int length = ceil_div(d + 2, 2);
    std::vector<NodeId> seq;
    for (int i = 1; i <= length && 2 * i - 2 <= d; ++i)
        seq.push_back(path[2 * i - 2]);
    return seq;
}

std::vector<NodeId> caterpillar_strategy(int d)
{
    if (d < 3)
        throw InvalidArgument("caterpillar: d must be >= 3, got " + std::to_string(d));
    std::vector<NodeId> seq{caterpillar_spine(1)};
    for (int i = 2; i <= d - 1; ++i)
        seq.push_back(caterpillar_pendant(d, i));
    return seq;
}

SpiderShape detect_spider(const Graph & g)
{
    const int n = g.order();
    const int legs = n > 0 ? g.degree(0) : 0;
    if (n < 2 || legs < 1 || (n - 1) % legs != 0)
        throw StrategyMismatch("graph is not a spider with equal legs rooted at node 0");
    const int r = (n - 1) / legs;
    if (g != gen_spider(legs, r))
        throw StrategyMismatch("graph is not laid out as a spider with " + std::to_string(legs) + " legs of length "
            + std::to_string(r));
    return {legs, r};
}

SpiderRun spider_strategy(int m, int r)
{
    if (m < 1 || r < 1)
        throw InvalidArgument("spider strategy needs m >= 1 and r >= 1");
    const int m_used = std::min(m, ceil_log2(r + 1));

    std::vector<SpiderStep> schedule;
    // Before the head cools: far ends of legs 1..m', shortest subphase first.
    for (int i = 1; i <= m_used; ++i)
        for (int k = 0; k < ((r + 1) >> (m_used + 1 - i)); ++k)
            schedule.push_back({i - 1, true});
    // After: nodes next to the head on legs untouched so far.
    for (int i = 1; i <= m_used; ++i)
        for (int k = 0; k < ((r + 1) >> i); ++k)
            schedule.push_back({m_used + i - 1, false});

    const Graph g = gen_spider(2 * m, r);
    SpiderPolicy policy(r, std::move(schedule));
    return {run_cooling(g, policy), closed_form(Family::spider, {{"m", m}, {"r", r}})};
}

SpiderRun spider_strategy(const Graph & g)
{
    const auto shape = detect_spider(g);
    if (shape.legs % 2 != 0)
        throw StrategyMismatch("spider strategy needs an even number of legs, got " + std::to_string(shape.legs));
    return spider_strategy(shape.legs / 2, shape.r);
}

std::vector<NodeId> ilt_path_strategy(const IltGraph & g)
{
    const int n = g.base_n;
    if (n < 3)
        throw InvalidArgument("ILT path strategy needs n >= 3, got " + std::to_string(n));
    if (g.iterations < 1)
        throw StrategyMismatch("ILT path strategy needs at least one ILT iteration");
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (g.graph.adjacent(u, v) != (v == u + 1))
                throw StrategyMismatch("base graph is not the path 0-1-...-" + std::to_string(n - 1));

    const int length = ceil_div(2 * n, 3);
    std::vector<NodeId> seq;
    for (int i = 1; i <= length; ++i)
        seq.push_back(g.last_clone_of(i + (i - 1) / 2 - 1));
    return seq;
}

std::vector<NodeId> ilt_path_strategy(int n, int t)
{
    if (n < 3)
        throw InvalidArgument("ILT path strategy needs n >= 3, got " + std::to_string(n));
    return ilt_path_strategy(ilt_t(gen_path(n), t));
}

std::vector<NodeId> ilt_lift_sequence(std::span<const NodeId> sequence, const IltGraph & from, const IltGraph & to)
{
    if (from.iterations < 2)
        throw InvalidArgument("lifting needs a source graph with at least two ILT iterations");
    if (to.iterations != 2 || to.base_n != from.base_n)
        throw InvalidArgument("lift target must be ILT_2 of the same base graph");

    std::vector<NodeId> out;
    NodeId previous_origin = -1;
    for (NodeId u : sequence) {
        const NodeId x = from.origin.at(static_cast<std::size_t>(u));
        const auto & clones = to.last_clones[x];
        if (clones.size() < 2)
            throw Error("internal: node " + std::to_string(x) + " has fewer than two final-iteration clones");
        out.push_back(x == previous_origin ? clones[1] : clones[0]);
        previous_origin = x;
    }
    return out;
}

} // namespace coolnum
