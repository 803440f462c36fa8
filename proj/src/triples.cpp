#include "ramsey/triples.hpp"

#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"

#include <algorithm>
#include <set>

namespace ramsey {

namespace {

std::string show(const TripleStructure& g, const Triple& t)
{
    const auto& d = g.domain();
    return d[static_cast<std::size_t>(t[0])] + d[static_cast<std::size_t>(t[1])] + "|" +
           d[static_cast<std::size_t>(t[2])];
}

bool is_positional(const std::vector<std::string>& domain)
{
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain[i] != std::to_string(i))
            return false;
    return true;
}

void build_shape(const TripleStructure& g, std::int32_t lo, std::int32_t hi, std::vector<bool>& shape)
{
    if (hi - lo == 1) {
        shape.push_back(false);
        return;
    }
    // Everything that shares a cherry-side with lo: x with lo x | c for some c.
    std::int32_t split = lo + 1;
    std::vector<bool> with_first(static_cast<std::size_t>(hi - lo), false);
    with_first[0] = true;
    for (std::int32_t x = lo + 1; x < hi; ++x)
        for (std::int32_t c = lo; c < hi; ++c)
            if (c != x && c != lo && g.holds(lo, x, c)) {
                with_first[static_cast<std::size_t>(x - lo)] = true;
                break;
            }
    while (split < hi && with_first[static_cast<std::size_t>(split - lo)])
        ++split;
    for (std::int32_t x = split; x < hi; ++x)
        if (with_first[static_cast<std::size_t>(x - lo)])
            throw DomainError("inconsistent: the root split of " + g.domain()[static_cast<std::size_t>(lo)] +
                              ".." + g.domain()[static_cast<std::size_t>(hi - 1)] + " is not contiguous");
    if (split == hi)
        throw DomainError("inconsistent: no root split of " + g.domain()[static_cast<std::size_t>(lo)] + ".." +
                          g.domain()[static_cast<std::size_t>(hi - 1)]);
    shape.push_back(true);
    build_shape(g, lo, split, shape);
    build_shape(g, split, hi, shape);
}

} // namespace

TripleStructure::TripleStructure(std::vector<std::string> domain, std::vector<Triple> triples)
    : domain_(std::move(domain)), triples_(std::move(triples))
{
    std::set<std::string> seen;
    for (const auto& name : domain_)
        if (!seen.insert(name).second)
            throw DomainError("duplicate domain element '" + name + "'");
    const auto n = static_cast<std::int32_t>(domain_.size());
    for (const Triple& t : triples_) {
        for (std::int32_t x : t)
            if (x < 0 || x >= n)
                throw DomainError("triple refers to position " + std::to_string(x) + " outside the domain");
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw DomainError("triple has repeated elements");
    }
    std::sort(triples_.begin(), triples_.end());
    triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

bool TripleStructure::holds(std::int32_t a, std::int32_t b, std::int32_t c) const
{
    return std::binary_search(triples_.begin(), triples_.end(), Triple{a, b, c});
}

std::optional<std::int32_t> TripleStructure::position(const std::string& name) const
{
    const auto it = std::find(domain_.begin(), domain_.end(), name);
    if (it == domain_.end())
        return std::nullopt;
    return static_cast<std::int32_t>(it - domain_.begin());
}

std::optional<std::string> TripleStructure::invariant_violation() const
{
    for (const Triple& t : triples_)
        if (!holds(t[1], t[0], t[2]))
            return "asymmetric: " + show(*this, t) + " holds but its swap does not";
    const auto n = static_cast<std::int32_t>(domain_.size());
    for (std::int32_t a = 0; a < n; ++a)
        for (std::int32_t b = a + 1; b < n; ++b)
            for (std::int32_t c = b + 1; c < n; ++c) {
                const int count = int(holds(a, b, c)) + int(holds(a, c, b)) + int(holds(b, c, a));
                if (count != 1)
                    return "not total: " + std::to_string(count) + " of " + domain_[static_cast<std::size_t>(a)] +
                           domain_[static_cast<std::size_t>(b)] + "|" + domain_[static_cast<std::size_t>(c)] +
                           " and its rotations hold";
            }
    return std::nullopt;
}

TripleStructure structure_of(const PlaneTree& t)
{
    const auto n = static_cast<std::int32_t>(t.leaf_count());
    std::vector<std::string> domain;
    domain.reserve(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i)
        domain.push_back(t.leaf_name(i));

    const AncestorTable anc(t);
    std::vector<Triple> triples;
    for (std::int32_t a = 0; a < n; ++a)
        for (std::int32_t b = 0; b < n; ++b) {
            if (b == a)
                continue;
            const std::int32_t ab = anc.lca_depth(a, b);
            for (std::int32_t c = 0; c < n; ++c)
                if (c != a && c != b && ab > anc.lca_depth(a, c))
                    triples.push_back({a, b, c});
        }
    return TripleStructure(std::move(domain), std::move(triples));
}

TripleStructure restrict(const TripleStructure& g, std::vector<std::int32_t> positions)
{
    if (positions.empty())
        throw DomainError("restrict: subset must be nonempty");
    std::sort(positions.begin(), positions.end());
    if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
        throw DomainError("restrict: subset has repeated elements");
    const auto n = static_cast<std::int32_t>(g.size());
    if (positions.front() < 0 || positions.back() >= n)
        throw DomainError("restrict: subset is not contained in the domain");

    std::vector<std::int32_t> remap(static_cast<std::size_t>(n), -1);
    std::vector<std::string> domain;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        remap[static_cast<std::size_t>(positions[i])] = static_cast<std::int32_t>(i);
        domain.push_back(g.domain()[static_cast<std::size_t>(positions[i])]);
    }
    std::vector<Triple> triples;
    for (const Triple& t : g.triples()) {
        const Triple r{remap[static_cast<std::size_t>(t[0])], remap[static_cast<std::size_t>(t[1])],
                       remap[static_cast<std::size_t>(t[2])]};
        if (r[0] >= 0 && r[1] >= 0 && r[2] >= 0)
            triples.push_back(r);
    }
    return TripleStructure(std::move(domain), std::move(triples));
}

TripleStructure restrict(const TripleStructure& g, const std::vector<std::string>& names)
{
    std::vector<std::int32_t> positions;
    positions.reserve(names.size());
    for (const auto& name : names) {
        const auto p = g.position(name);
        if (!p)
            throw DomainError("restrict: '" + name + "' is not in the domain");
        positions.push_back(*p);
    }
    return restrict(g, std::move(positions));
}

PlaneTree reconstruct(const TripleStructure& g)
{
    if (g.size() == 0)
        throw DomainError("reconstruct: empty domain");
    if (auto why = g.invariant_violation())
        throw DomainError("inconsistent: " + *why);

    std::vector<bool> shape;
    shape.reserve(2 * g.size());
    build_shape(g, 0, static_cast<std::int32_t>(g.size()), shape);

    std::vector<std::string> labels;
    if (!is_positional(g.domain())) {
        for (const auto& name : g.domain())
            if (name.empty() || name.find_first_of(",()") != std::string::npos)
                throw DomainError("reconstruct: domain element '" + name + "' cannot be a leaf label");
        labels = g.domain();
    }
    PlaneTree t = PlaneTree::from_shape(std::move(shape), std::move(labels));
    if (structure_of(t.anonymous()).triples() != g.triples())
        throw DomainError("inconsistent: no plane binary tree realizes the given triples");
    return t;
}

bool substructure_iso(const TripleStructure& g, const TripleStructure& h)
{
    return g.size() == h.size() && g.triples() == h.triples();
}

} // namespace ramsey
