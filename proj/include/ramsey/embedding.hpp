#pragma once

#include "ramsey/plane_tree.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;

// A topological copy inside a fixed host, identified by its strictly
// increasing leaf set. Ordering is lexicographic on the leaf list.
struct CopyRef {
    std::vector<LeafIndex> leaves;

    std::size_t size() const noexcept { return leaves.size(); }
    LeafIndex front() const { return leaves.front(); }
    LeafIndex back() const { return leaves.back(); }

    auto operator<=>(const CopyRef&) const = default;
};

// "[0,1,3]"
std::string to_string(const CopyRef& s);
CopyRef parse_copy_ref(std::string_view text);

// Throws DomainError unless s is nonempty, strictly increasing and in range.
void validate_copy_ref(const PlaneTree& t, const CopyRef& s);

// The minimal topological subtree of t spanning s. Leaves keep their host
// identity: the host label when present, else the host index as text.
PlaneTree induced_subtree(const PlaneTree& t, const CopyRef& s);

// As induced_subtree, without labels and without validating s.
PlaneTree induced_shape(const PlaneTree& t, std::span<const LeafIndex> s);

bool is_copy(const PlaneTree& t, const CopyRef& s, const PlaneTree& p);

// Every copy of p in t, in lexicographic order. Throws ResourceError when the
// number of copies exceeds max_copies().
std::vector<CopyRef> enumerate_copies(const PlaneTree& t, const PlaneTree& p);

// Copies of p whose leaves all lie in region, in host indices, lexicographic.
std::vector<CopyRef> copies_within(const PlaneTree& t, const CopyRef& region, const PlaneTree& p);

// |enumerate_copies(t, p)| by dynamic programming over (host node, pattern node).
BigInt count_copies(const PlaneTree& t, const PlaneTree& p);

// Node of t that is the least common ancestor of leaves a and b.
std::int32_t lca(const PlaneTree& t, LeafIndex a, LeafIndex b);

// Per-host ancestor table: for each leaf, its root path indexed by depth.
// lca() on two leaves is a binary search over one root path.
class AncestorTable {
public:
    explicit AncestorTable(const PlaneTree& t);

    std::int32_t lca(LeafIndex a, LeafIndex b) const;
    std::int32_t lca_depth(LeafIndex a, LeafIndex b) const;

private:
    PlaneTree tree_;
    std::vector<std::vector<std::int32_t>> paths_;
};

// Sorted union of two leaf sets.
CopyRef join_copies(const CopyRef& a, const CopyRef& b);

// True when every leaf of inner is a leaf of outer.
bool contains(const CopyRef& outer, const CopyRef& inner);

} // namespace ramsey
