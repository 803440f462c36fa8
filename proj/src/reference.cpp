#include "ramsey/reference.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

namespace ramsey::reference {

namespace {

std::int32_t climb_lca(const PlaneTree& t, std::int32_t a, std::int32_t b)
{
    std::set<std::int32_t> above_a;
    for (std::int32_t v = a; v >= 0; v = t.node(v).parent)
        above_a.insert(v);
    std::int32_t v = b;
    while (!above_a.count(v))
        v = t.node(v).parent;
    return v;
}

void emit(const std::map<std::int32_t, std::vector<std::int32_t>>& children, std::int32_t v, std::string& out)
{
    const auto it = children.find(v);
    if (it == children.end() || it->second.empty())
        return;
    out += '(';
    for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (i > 0)
            out += ',';
        emit(children, it->second[i], out);
    }
    out += ')';
}

bool next_combination(std::vector<LeafIndex>& c, LeafIndex n)
{
    const auto r = static_cast<LeafIndex>(c.size());
    for (LeafIndex i = r - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - r + i) {
            ++c[static_cast<std::size_t>(i)];
            for (LeafIndex j = i + 1; j < r; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::string induced_form(const PlaneTree& t, const std::vector<LeafIndex>& leaves)
{
    std::set<std::int32_t> closed;
    for (LeafIndex x : leaves)
        closed.insert(t.leaf_node(x));
    for (LeafIndex a : leaves)
        for (LeafIndex b : leaves)
            if (a < b)
                closed.insert(climb_lca(t, t.leaf_node(a), t.leaf_node(b)));

    // Contract: attach each vertex to its nearest proper ancestor in the closure.
    std::map<std::int32_t, std::vector<std::int32_t>> children;
    std::int32_t root = -1;
    for (std::int32_t v : closed) {  // ascending preorder ids, so children come out left to right
        std::int32_t p = t.node(v).parent;
        while (p >= 0 && !closed.count(p))
            p = t.node(p).parent;
        if (p < 0)
            root = v;
        else
            children[p].push_back(v);
    }
    std::string out;
    emit(children, root, out);
    return out;
}

std::vector<CopyRef> copies_by_subsets(const PlaneTree& t, const PlaneTree& p)
{
    std::vector<CopyRef> out;
    const auto n = static_cast<LeafIndex>(t.leaf_count());
    const auto r = static_cast<LeafIndex>(p.leaf_count());
    if (r > n)
        return out;
    const std::string want = canonical_form(p);
    std::vector<LeafIndex> c(static_cast<std::size_t>(r));
    for (LeafIndex i = 0; i < r; ++i)
        c[static_cast<std::size_t>(i)] = i;
    do {
        if (induced_form(t, c) == want)
            out.push_back(CopyRef{c});
    } while (next_combination(c, n));
    return out;
}

bool rooted_triple(const PlaneTree& t, LeafIndex a, LeafIndex b, LeafIndex c)
{
    if (a == b || a == c || b == c)
        return false;
    const std::int32_t ab = climb_lca(t, t.leaf_node(a), t.leaf_node(b));
    const std::int32_t ac = climb_lca(t, t.leaf_node(a), t.leaf_node(c));
    if (ab == ac)
        return false;
    // ab strictly below ac: ac is a proper ancestor of ab.
    for (std::int32_t v = t.node(ab).parent; v >= 0; v = t.node(v).parent)
        if (v == ac)
            return true;
    return false;
}

std::optional<Color> mono_color_by_scan(const Coloring& chi, const CopyRef& s)
{
    std::optional<Color> shared;
    for (std::size_t i = 0; i < chi.copies().size(); ++i) {
        const CopyRef& c = chi.copies()[i];
        if (!std::includes(s.leaves.begin(), s.leaves.end(), c.leaves.begin(), c.leaves.end()))
            continue;
        if (!shared)
            shared = chi.colors()[i];
        else if (*shared != chi.colors()[i])
            return std::nullopt;
    }
    return shared ? *shared : kVacuousColor;
}

bool has_mono_copy(const Coloring& chi, const PlaneTree& h)
{
    for (const CopyRef& s : copies_by_subsets(chi.host(), h))
        if (mono_color_by_scan(chi, s))
            return true;
    return false;
}

ExhaustiveResult exhaustive_arrow(const PlaneTree& host, const PlaneTree& target, const PlaneTree& pattern, int k,
                                  Exec exec)
{
    if (k < 1)
        throw DomainError("number of colors must be at least 1");
    const std::vector<CopyRef> vars = copies_by_subsets(host, pattern);
    std::vector<std::vector<std::size_t>> inner;
    for (const CopyRef& h : copies_by_subsets(host, target)) {
        std::vector<std::size_t> e;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (std::includes(h.leaves.begin(), h.leaves.end(), vars[i].leaves.begin(), vars[i].leaves.end()))
                e.push_back(i);
        inner.push_back(std::move(e));
    }

    const std::size_t n = vars.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(k);
        if (total > (std::uint64_t{1} << 36))
            throw ResourceError("exhaustive enumeration over more than 2^36 colorings");
    }

    // Coloring number x gives variable 0 the most significant base-k digit,
    // so numeric order is lexicographic order.
    auto decode = [&](std::uint64_t x) {
        std::vector<Color> colors(n);
        for (std::size_t i = n; i-- > 0;) {
            colors[i] = static_cast<Color>(x % static_cast<std::uint64_t>(k));
            x /= static_cast<std::uint64_t>(k);
        }
        return colors;
    };
    auto is_bad = [&](const std::vector<Color>& colors) {
        for (const auto& e : inner) {
            bool same = true;
            for (std::size_t i = 1; i < e.size() && same; ++i)
                same = colors[e[i]] == colors[e[0]];
            if (same)
                return false;
        }
        return true;
    };

    std::uint64_t first = total;
    if (use_parallel(exec)) {
        std::atomic<std::uint64_t> best{total};
#pragma omp parallel for schedule(dynamic, 256)
        for (std::int64_t x = 0; x < static_cast<std::int64_t>(total); ++x) {
            const auto u = static_cast<std::uint64_t>(x);
            if (u >= best.load(std::memory_order_relaxed))
                continue;
            if (is_bad(decode(u))) {
                std::uint64_t cur = best.load(std::memory_order_relaxed);
                while (u < cur && !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
                }
            }
        }
        first = best.load();
    } else {
        std::vector<Color> colors(n, 0);
        for (std::uint64_t x = 0; x < total; ++x) {
            if (is_bad(colors)) {
                first = x;
                break;
            }
            for (std::size_t i = n; i-- > 0;) {
                if (++colors[i] < k)
                    break;
                colors[i] = 0;
            }
        }
    }

    ExhaustiveResult out;
    out.colorings = total;
    out.holds = first == total;
    if (!out.holds)
        out.first_bad = decode(first);
    return out;
}

} // namespace ramsey::reference
