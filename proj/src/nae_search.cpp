#include "ramsey/arrow.hpp"
#include "ramsey/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

namespace ramsey {

namespace {

using Clock = std::chrono::steady_clock;
using Edges = std::vector<std::vector<std::int32_t>>;

enum class Outcome { solution, exhausted, budget, cancelled };

// Branching order: highest edge degree first, ties by variable index.
std::vector<std::int32_t> branching_order(const std::vector<std::vector<std::int32_t>>& var_edges)
{
    std::vector<std::int32_t> order(var_edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        return var_edges[static_cast<std::size_t>(a)].size() > var_edges[static_cast<std::size_t>(b)].size();
    });
    return order;
}

struct Shared {
    const Edges& edges;
    std::vector<std::vector<std::int32_t>> var_edges;
    std::vector<std::int32_t> order;
    int k;
    SearchLimits limits;
    Clock::time_point deadline;
};

class Solver {
public:
    explicit Solver(const Shared& s)
        : s_(s),
          domain_(s.var_edges.size(), s.k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.k) - 1),
          value_(s.var_edges.size(), -1),
          assigned_(s.edges.size(), 0),
          counts_(s.edges.size() * static_cast<std::size_t>(s.k), 0)
    {
    }

    // Stop early once another task has found a solution at a lower frontier index.
    void set_cancel(const std::atomic<std::size_t>* first_hit, std::size_t my_index)
    {
        first_hit_ = first_hit;
        my_index_ = my_index;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<Color>& solution() const noexcept { return solution_; }

    Outcome search(std::size_t pos, int max_used)
    {
        if (pos == s_.order.size()) {
            solution_ = value_;
            return Outcome::solution;
        }
        const std::int32_t v = s_.order[pos];
        const int top = std::min(s_.k - 1, max_used + 1);
        for (int c = 0; c <= top; ++c) {
            if (!(domain_[static_cast<std::size_t>(v)] >> c & 1))
                continue;
            if (const Outcome o = tick(); o != Outcome::exhausted)
                return o;
            const std::size_t mark = trail_.size();
            if (assign(v, c)) {
                const Outcome o = search(pos + 1, std::max(max_used, c));
                if (o != Outcome::exhausted) {
                    unassign(v, c, mark);
                    return o;
                }
            }
            unassign(v, c, mark);
        }
        return Outcome::exhausted;
    }

    // Prefixes of the branching order reachable in `depth` steps, in DFS order.
    void frontier(std::size_t pos, int max_used, std::size_t depth, std::vector<Color>& prefix,
                  std::vector<std::vector<Color>>& out)
    {
        if (pos == s_.order.size() || depth == 0) {
            out.push_back(prefix);
            return;
        }
        const std::int32_t v = s_.order[pos];
        const int top = std::min(s_.k - 1, max_used + 1);
        for (int c = 0; c <= top; ++c) {
            if (!(domain_[static_cast<std::size_t>(v)] >> c & 1))
                continue;
            ++nodes_;
            const std::size_t mark = trail_.size();
            if (assign(v, c)) {
                prefix.push_back(c);
                frontier(pos + 1, std::max(max_used, c), depth - 1, prefix, out);
                prefix.pop_back();
            }
            unassign(v, c, mark);
        }
    }

    // Re-applies a frontier prefix and searches below it.
    Outcome search_below(const std::vector<Color>& prefix)
    {
        int max_used = -1;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!assign(s_.order[i], prefix[i]))
                throw Error("internal: frontier prefix does not replay");
            max_used = std::max(max_used, prefix[i]);
        }
        return search(prefix.size(), max_used);
    }

private:
    Outcome tick()
    {
        ++nodes_;
        if (nodes_ > s_.limits.max_nodes)
            return Outcome::budget;
        if ((nodes_ & 1023) == 0) {
            if (Clock::now() > s_.deadline)
                return Outcome::budget;
            if (first_hit_ && first_hit_->load(std::memory_order_relaxed) < my_index_)
                return Outcome::cancelled;
        }
        return Outcome::exhausted;
    }

    bool assign(std::int32_t v, int c)
    {
        const auto k = static_cast<std::size_t>(s_.k);
        value_[static_cast<std::size_t>(v)] = c;
        const auto& incident = s_.var_edges[static_cast<std::size_t>(v)];
        for (std::int32_t e : incident) {
            ++assigned_[static_cast<std::size_t>(e)];
            ++counts_[static_cast<std::size_t>(e) * k + static_cast<std::size_t>(c)];
        }
        for (std::int32_t e : incident) {
            const auto& edge = s_.edges[static_cast<std::size_t>(e)];
            const std::int32_t a = assigned_[static_cast<std::size_t>(e)];
            if (counts_[static_cast<std::size_t>(e) * k + static_cast<std::size_t>(c)] != a)
                continue;  // already two colors on this edge
            const auto size = static_cast<std::int32_t>(edge.size());
            if (a == size)
                return false;
            if (a == size - 1) {
                // The last free variable must avoid c.
                for (std::int32_t u : edge) {
                    if (value_[static_cast<std::size_t>(u)] >= 0)
                        continue;
                    std::uint64_t& d = domain_[static_cast<std::size_t>(u)];
                    if (d >> c & 1) {
                        trail_.emplace_back(u, d);
                        d &= ~(std::uint64_t{1} << c);
                        if (d == 0)
                            return false;
                    }
                    break;
                }
            }
        }
        return true;
    }

    void unassign(std::int32_t v, int c, std::size_t mark)
    {
        const auto k = static_cast<std::size_t>(s_.k);
        for (std::int32_t e : s_.var_edges[static_cast<std::size_t>(v)]) {
            --assigned_[static_cast<std::size_t>(e)];
            --counts_[static_cast<std::size_t>(e) * k + static_cast<std::size_t>(c)];
        }
        while (trail_.size() > mark) {
            domain_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
            trail_.pop_back();
        }
        value_[static_cast<std::size_t>(v)] = -1;
    }

    const Shared& s_;
    std::vector<std::uint64_t> domain_;
    std::vector<Color> value_;
    std::vector<std::int32_t> assigned_;
    std::vector<std::int32_t> counts_;
    std::vector<std::pair<std::int32_t, std::uint64_t>> trail_;
    std::vector<Color> solution_;
    std::uint64_t nodes_ = 0;
    const std::atomic<std::size_t>* first_hit_ = nullptr;
    std::size_t my_index_ = 0;
};

NaeResult to_result(Outcome o, std::uint64_t nodes, std::vector<Color> solution)
{
    NaeResult r;
    r.nodes = nodes;
    switch (o) {
    case Outcome::solution:
        r.status = SearchStatus::solution;
        r.assignment = std::move(solution);
        break;
    case Outcome::exhausted: r.status = SearchStatus::exhausted; break;
    case Outcome::budget:
    case Outcome::cancelled: r.status = SearchStatus::budget; break;
    }
    return r;
}

NaeResult solve_parallel(const Shared& shared)
{
    const auto threads = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
    const std::size_t target = 8 * threads;

    std::vector<std::vector<Color>> prefixes;
    std::uint64_t frontier_nodes = 0;
    for (std::size_t depth = 1;; ++depth) {
        Solver seed(shared);
        std::vector<Color> prefix;
        prefixes.clear();
        seed.frontier(0, -1, depth, prefix, prefixes);
        frontier_nodes = seed.nodes();
        if (prefixes.size() >= target || depth >= shared.order.size() || depth >= 24)
            break;
    }
    if (prefixes.empty())
        return to_result(Outcome::exhausted, frontier_nodes, {});

    const std::size_t f = prefixes.size();
    std::vector<Outcome> outcomes(f, Outcome::cancelled);
    std::vector<std::uint64_t> nodes(f, 0);
    std::vector<std::vector<Color>> solutions(f);
    std::atomic<std::size_t> first_hit{f};

#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(f); ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (first_hit.load(std::memory_order_relaxed) < u)
            continue;
        Solver solver(shared);
        solver.set_cancel(&first_hit, u);
        outcomes[u] = solver.search_below(prefixes[u]);
        nodes[u] = solver.nodes();
        if (outcomes[u] == Outcome::solution) {
            solutions[u] = solver.solution();
            std::size_t cur = first_hit.load(std::memory_order_relaxed);
            while (u < cur && !first_hit.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
            }
        }
    }

    std::uint64_t total = frontier_nodes;
    for (std::size_t i = 0; i < f; ++i) {
        total += nodes[i];
        if (outcomes[i] != Outcome::exhausted)
            return to_result(outcomes[i], total, std::move(solutions[i]));
    }
    return to_result(Outcome::exhausted, total, {});
}

} // namespace

NaeResult solve_nae(const std::vector<std::vector<std::int32_t>>& edges, std::size_t variables, int k,
                    const SearchLimits& limits, Exec exec)
{
    if (k < 1 || k > 64)
        throw DomainError("number of colors must be in [1, 64], got " + std::to_string(k));

    Shared shared{edges, std::vector<std::vector<std::int32_t>>(variables), {}, k, limits,
                  Clock::now() + limits.max_time};
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::int32_t v : edges[e]) {
            if (v < 0 || static_cast<std::size_t>(v) >= variables)
                throw DomainError("edge refers to an unknown variable");
            shared.var_edges[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(e));
        }
    shared.order = branching_order(shared.var_edges);
    if (std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.empty(); }))
        return NaeResult{};  // an empty edge is monochromatic under every coloring

    if (use_parallel(exec) && variables > 0)
        return solve_parallel(shared);

    Solver solver(shared);
    const Outcome o = solver.search(0, -1);
    return to_result(o, solver.nodes(), solver.solution());
}

} // namespace ramsey
