#pragma once

#include "ramsey/plane_tree.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

// (a, b, c) as domain positions, meaning ab|c.
using Triple = std::array<std::int32_t, 3>;

// An ordered relational structure: a domain whose position order is the
// linear order <, and a ternary rooted-triple relation |.
//
// The relation stores every ordered triple, so (a,b,c) and (b,a,c) both appear
// when ab|c holds. The constructor only checks well-formedness (known names,
// distinct coordinates); symmetry and totality are reported by
// invariant_violation().
class TripleStructure {
public:
    TripleStructure() = default;
    TripleStructure(std::vector<std::string> domain, std::vector<Triple> triples);

    const std::vector<std::string>& domain() const noexcept { return domain_; }
    // Sorted lexicographically by domain index.
    const std::vector<Triple>& triples() const noexcept { return triples_; }
    std::size_t size() const noexcept { return domain_.size(); }

    bool holds(std::int32_t a, std::int32_t b, std::int32_t c) const;
    std::optional<std::int32_t> position(const std::string& name) const;

    // Description of the first broken invariant, if any.
    std::optional<std::string> invariant_violation() const;

    bool operator==(const TripleStructure&) const = default;

private:
    std::vector<std::string> domain_;
    std::vector<Triple> triples_;
};

// ab|c iff lca(a,b) is a proper descendant of lca(a,c). Leaf identities are
// labels when present, else positional indices.
TripleStructure structure_of(const PlaneTree& t);

// Induced substructure on the given domain positions (any order, no repeats).
TripleStructure restrict(const TripleStructure& g, std::vector<std::int32_t> positions);
TripleStructure restrict(const TripleStructure& g, const std::vector<std::string>& names);

// The unique plane binary tree realizing g. Leaves carry the domain names,
// unless the domain is exactly "0".."n-1", in which case they are positional.
// Throws DomainError("inconsistent ...") when no tree realizes g.
PlaneTree reconstruct(const TripleStructure& g);

// Isomorphism of ordered structures via the order-preserving bijection.
bool substructure_iso(const TripleStructure& g, const TripleStructure& h);

} // namespace ramsey
