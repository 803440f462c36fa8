#include "ramsey/arrow.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>

namespace ramsey {

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

ArrowHypergraph build_arrow_hypergraph(const PlaneTree& host, const PlaneTree& target, const PlaneTree& pattern)
{
    ArrowHypergraph hg;
    hg.variables = make_copy_set(host, pattern);
    for (const CopyRef& h_copy : enumerate_copies(host, target)) {
        std::vector<std::int32_t> edge;
        for (const CopyRef& inner : copies_within(host, h_copy, pattern))
            edge.push_back(static_cast<std::int32_t>(*hg.variables->index_of(inner)));
        if (edge.size() <= 1)
            hg.has_vacuous_edge = true;
        hg.edges.push_back(std::move(edge));
    }
    std::sort(hg.edges.begin(), hg.edges.end());
    hg.edges.erase(std::unique(hg.edges.begin(), hg.edges.end()), hg.edges.end());
    return hg;
}

ArrowVerdict check_arrow(const ArrowQuery& q)
{
    if (q.k < 1)
        throw DomainError("number of colors must be at least 1, got " + std::to_string(q.k));
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    };

    ArrowVerdict out;
    const ArrowHypergraph hg = build_arrow_hypergraph(q.host, q.target, q.pattern);
    if (hg.has_vacuous_edge) {
        // That H-copy is monochromatic under every coloring.
        out.verdict = Verdict::holds;
        out.millis = elapsed();
        return out;
    }

    SearchLimits limits = q.limits;
    limits.max_time -= std::chrono::milliseconds(elapsed());
    NaeResult r = solve_nae(hg.edges, hg.variable_count(), q.k, limits, q.exec);
    out.nodes = r.nodes;
    switch (r.status) {
    case SearchStatus::solution:
        out.verdict = Verdict::fails;
        out.witness.emplace(hg.variables, q.k, std::move(r.assignment));
        break;
    case SearchStatus::exhausted: out.verdict = Verdict::holds; break;
    case SearchStatus::budget: out.verdict = Verdict::unknown; break;
    }
    out.millis = elapsed();
    return out;
}

bool is_bad_coloring(const Coloring& chi, const PlaneTree& h) { return !find_mono_copy(chi, h).has_value(); }

MinHeightResult min_arrow_height(const PlaneTree& h, const PlaneTree& p, int k, const SearchLimits& limits,
                                 int max_height, Exec exec)
{
    if (k < 1)
        throw DomainError("number of colors must be at least 1, got " + std::to_string(k));
    MinHeightResult out;
    for (int d = h.height(); d <= max_height; ++d) {
        ArrowVerdict v;
        try {
            v = check_arrow({perfect_tree(d), h, p, k, limits, exec});
        } catch (const ResourceError&) {
            break;
        }
        const Verdict verdict = v.verdict;
        out.scan.push_back({d, std::move(v)});
        if (verdict == Verdict::holds)
            out.height = d;
        if (verdict != Verdict::fails)
            break;
    }
    return out;
}

} // namespace ramsey
