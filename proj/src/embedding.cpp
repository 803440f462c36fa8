#include "ramsey/embedding.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace ramsey {

namespace {

void build_induced(const PlaneTree& t, std::int32_t v, std::span<const LeafIndex> s, std::vector<bool>& shape)
{
    for (;;) {
        if (s.size() == 1) {
            shape.push_back(false);
            return;
        }
        const auto& nd = t.node(v);
        const LeafIndex split = t.node(nd.right).lo;
        const auto mid = std::partition_point(s.begin(), s.end(), [split](LeafIndex x) { return x < split; });
        if (mid == s.begin()) {
            v = nd.right;
        } else if (mid == s.end()) {
            v = nd.left;
        } else {
            shape.push_back(true);
            const auto k = static_cast<std::size_t>(mid - s.begin());
            build_induced(t, nd.left, s.first(k), shape);
            build_induced(t, nd.right, s.subspan(k), shape);
            return;
        }
    }
}

// Copies of a pattern subtree below a host node, as a flat array with one row
// of `width` leaf indices per copy.
struct CopyRows {
    std::size_t width = 0;
    std::vector<LeafIndex> flat;

    std::size_t rows() const { return width == 0 ? 0 : flat.size() / width; }
};

class Enumerator {
public:
    Enumerator(const PlaneTree& t, const PlaneTree& p) : t_(t), p_(p) {}

    const CopyRows& copies(std::int32_t v, std::int32_t q)
    {
        const auto key = static_cast<std::int64_t>(v) * static_cast<std::int64_t>(p_.node_count()) + q;
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        CopyRows out;
        const auto& hn = t_.node(v);
        const auto& pn = p_.node(q);
        out.width = static_cast<std::size_t>(pn.leaf_count());
        if (pn.is_leaf()) {
            for (LeafIndex i = hn.lo; i < hn.hi; ++i)
                out.flat.push_back(i);
        } else if (!hn.is_leaf() && hn.leaf_count() >= pn.leaf_count()) {
            for (std::int32_t child : {hn.left, hn.right}) {
                const CopyRows& sub = copies(child, q);
                out.flat.insert(out.flat.end(), sub.flat.begin(), sub.flat.end());
            }
            const CopyRows& lhs = copies(hn.left, pn.left);
            const CopyRows& rhs = copies(hn.right, pn.right);
            for (std::size_t a = 0; a < lhs.rows(); ++a)
                for (std::size_t b = 0; b < rhs.rows(); ++b) {
                    auto la = lhs.flat.begin() + static_cast<std::ptrdiff_t>(a * lhs.width);
                    auto rb = rhs.flat.begin() + static_cast<std::ptrdiff_t>(b * rhs.width);
                    out.flat.insert(out.flat.end(), la, la + static_cast<std::ptrdiff_t>(lhs.width));
                    out.flat.insert(out.flat.end(), rb, rb + static_cast<std::ptrdiff_t>(rhs.width));
                }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    const PlaneTree& t_;
    const PlaneTree& p_;
    std::unordered_map<std::int64_t, CopyRows> memo_;
};

} // namespace

std::string to_string(const CopyRef& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(s.leaves[i]);
    }
    out += ']';
    return out;
}

CopyRef parse_copy_ref(std::string_view text)
{
    CopyRef s;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError("leaf set must start with '['", pos);
    ++pos;
    skip();
    if (pos < text.size() && text[pos] == ']')
        throw ParseError("leaf set must be nonempty", pos);
    for (;;) {
        skip();
        LeafIndex value = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || value < 0)
            throw ParseError("expected a non-negative leaf index", pos);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (!s.leaves.empty() && value <= s.leaves.back())
            throw ParseError("leaf indices must be strictly increasing", pos);
        s.leaves.push_back(value);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        }
        throw ParseError("expected ',' or ']' in leaf set", pos);
    }
    skip();
    if (pos != text.size())
        throw ParseError("unexpected trailing characters after leaf set", pos);
    return s;
}

void validate_copy_ref(const PlaneTree& t, const CopyRef& s)
{
    if (s.leaves.empty())
        throw DomainError("leaf set is empty");
    for (std::size_t i = 0; i < s.leaves.size(); ++i) {
        const LeafIndex x = s.leaves[i];
        if (x < 0 || static_cast<std::size_t>(x) >= t.leaf_count())
            throw DomainError("leaf index " + std::to_string(x) + " out of range for a tree with " +
                              std::to_string(t.leaf_count()) + " leaves");
        if (i > 0 && x <= s.leaves[i - 1])
            throw DomainError("leaf set " + to_string(s) + " is not strictly increasing");
    }
}

PlaneTree induced_shape(const PlaneTree& t, std::span<const LeafIndex> s)
{
    std::vector<bool> shape;
    shape.reserve(2 * s.size());
    build_induced(t, 0, s, shape);
    return PlaneTree::from_shape(std::move(shape));
}

PlaneTree induced_subtree(const PlaneTree& t, const CopyRef& s)
{
    validate_copy_ref(t, s);
    std::vector<bool> shape;
    shape.reserve(2 * s.size());
    build_induced(t, 0, s.leaves, shape);
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (LeafIndex x : s.leaves)
        labels.push_back(t.leaf_name(x));
    return PlaneTree::from_shape(std::move(shape), std::move(labels));
}

bool is_copy(const PlaneTree& t, const CopyRef& s, const PlaneTree& p)
{
    validate_copy_ref(t, s);
    if (s.size() != p.leaf_count())
        return false;
    return iso(induced_shape(t, s.leaves), p);
}

std::vector<CopyRef> enumerate_copies(const PlaneTree& t, const PlaneTree& p)
{
    if (p.leaf_count() > t.leaf_count())
        return {};
    const BigInt total = count_copies(t, p);
    if (total > max_copies())
        throw ResourceError("host has " + total.str() + " copies of the pattern, limit is " +
                            std::to_string(max_copies()));

    Enumerator en(t, p);
    const CopyRows& rows = en.copies(0, 0);
    std::vector<CopyRef> out(rows.rows());
    for (std::size_t r = 0; r < out.size(); ++r) {
        auto first = rows.flat.begin() + static_cast<std::ptrdiff_t>(r * rows.width);
        out[r].leaves.assign(first, first + static_cast<std::ptrdiff_t>(rows.width));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CopyRef> copies_within(const PlaneTree& t, const CopyRef& region, const PlaneTree& p)
{
    validate_copy_ref(t, region);
    std::vector<CopyRef> local = enumerate_copies(induced_shape(t, region.leaves), p);
    for (CopyRef& c : local)
        for (LeafIndex& x : c.leaves)
            x = region.leaves[static_cast<std::size_t>(x)];
    return local;
}

BigInt count_copies(const PlaneTree& t, const PlaneTree& p)
{
    if (p.leaf_count() > t.leaf_count())
        return 0;
    const std::size_t m = t.node_count();
    const std::size_t pm = p.node_count();
    std::vector<std::vector<BigInt>> counts(m);
    for (std::size_t v = m; v-- > 0;) {
        const auto& hn = t.node(static_cast<std::int32_t>(v));
        auto& cv = counts[v];
        cv.resize(pm);
        for (std::size_t q = 0; q < pm; ++q) {
            const auto& pn = p.node(static_cast<std::int32_t>(q));
            if (pn.is_leaf()) {
                cv[q] = hn.leaf_count();
            } else if (!hn.is_leaf()) {
                const auto& cl = counts[static_cast<std::size_t>(hn.left)];
                const auto& cr = counts[static_cast<std::size_t>(hn.right)];
                cv[q] = cl[q] + cr[q] + cl[static_cast<std::size_t>(pn.left)] * cr[static_cast<std::size_t>(pn.right)];
            }
        }
        if (!hn.is_leaf()) {
            std::vector<BigInt>().swap(counts[static_cast<std::size_t>(hn.left)]);
            std::vector<BigInt>().swap(counts[static_cast<std::size_t>(hn.right)]);
        }
    }
    return counts[0][0];
}

std::int32_t lca(const PlaneTree& t, LeafIndex a, LeafIndex b)
{
    std::int32_t v = 0;
    for (;;) {
        const auto& nd = t.node(v);
        if (nd.is_leaf())
            return v;
        const LeafIndex split = t.node(nd.right).lo;
        if (a < split && b < split)
            v = nd.left;
        else if (a >= split && b >= split)
            v = nd.right;
        else
            return v;
    }
}

AncestorTable::AncestorTable(const PlaneTree& t) : tree_(t), paths_(t.leaf_count())
{
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        auto& path = paths_[i];
        for (std::int32_t v = t.leaf_node(static_cast<LeafIndex>(i)); v >= 0; v = t.node(v).parent)
            path.push_back(v);
        std::reverse(path.begin(), path.end());
    }
}

std::int32_t AncestorTable::lca(LeafIndex a, LeafIndex b) const
{
    const auto& path = paths_[static_cast<std::size_t>(a)];
    // Ancestors of a containing b form a prefix of the root path.
    const auto it = std::partition_point(path.begin(), path.end(), [&](std::int32_t v) {
        const auto& nd = tree_.node(v);
        return nd.lo <= b && b < nd.hi;
    });
    return *(it - 1);
}

std::int32_t AncestorTable::lca_depth(LeafIndex a, LeafIndex b) const { return tree_.node(lca(a, b)).depth; }

CopyRef join_copies(const CopyRef& a, const CopyRef& b)
{
    CopyRef out;
    out.leaves.reserve(a.size() + b.size());
    std::merge(a.leaves.begin(), a.leaves.end(), b.leaves.begin(), b.leaves.end(), std::back_inserter(out.leaves));
    out.leaves.erase(std::unique(out.leaves.begin(), out.leaves.end()), out.leaves.end());
    return out;
}

bool contains(const CopyRef& outer, const CopyRef& inner)
{
    return std::includes(outer.leaves.begin(), outer.leaves.end(), inner.leaves.begin(), inner.leaves.end());
}

} // namespace ramsey
