#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

// Leaves are identified by their plane position, 0-based, left to right.
using LeafIndex = std::int32_t;

// A finite rooted binary plane tree.
//
// Nodes are stored in preorder, so the root is node 0, the left child of an
// internal node v is v + 1, and every node covers a contiguous interval of
// leaves [lo, hi). Trees are immutable values that share their storage; copies
// are cheap and safe to hand to other threads.
class PlaneTree {
public:
    struct Node {
        std::int32_t left = -1;
        std::int32_t right = -1;
        std::int32_t parent = -1;
        std::int32_t depth = 0;
        LeafIndex lo = 0;  // first leaf below this node
        LeafIndex hi = 0;  // one past the last leaf below this node

        bool is_leaf() const noexcept { return left < 0; }
        std::int32_t leaf_count() const noexcept { return hi - lo; }
    };

    // The one-vertex tree.
    PlaneTree();

    static PlaneTree leaf(std::string label = {});
    static PlaneTree join(const PlaneTree& left, const PlaneTree& right);

    // Builds from a preorder shape code (true = internal node) and per-leaf
    // labels (empty vector or one entry per leaf; empty strings are positional).
    static PlaneTree from_shape(std::vector<bool> shape, std::vector<std::string> labels = {});

    std::size_t leaf_count() const noexcept;
    std::size_t node_count() const noexcept;
    int height() const noexcept;
    bool is_leaf() const noexcept { return node_count() == 1; }

    const Node& node(std::int32_t v) const { return data_->nodes[static_cast<std::size_t>(v)]; }
    std::span<const Node> nodes() const noexcept { return data_->nodes; }
    std::int32_t leaf_node(LeafIndex i) const { return data_->leaf_nodes[static_cast<std::size_t>(i)]; }
    const std::vector<bool>& shape() const noexcept { return data_->shape; }

    // Label of leaf i; empty when the leaf is positional.
    const std::string& label(LeafIndex i) const;
    bool has_labels() const noexcept { return !data_->labels.empty(); }
    // Label when present, else the positional index as text.
    std::string leaf_name(LeafIndex i) const;

    // Subtrees rooted at the root's children. Throw DomainError on a single leaf.
    PlaneTree left() const;
    PlaneTree right() const;
    // Subtree rooted at node v, labels kept.
    PlaneTree subtree(std::int32_t v) const;

    // Same tree without leaf labels.
    PlaneTree anonymous() const;

    // Plane isomorphism: ordered structural equality, labels ignored.
    friend bool iso(const PlaneTree& a, const PlaneTree& b) noexcept {
        return a.data_ == b.data_ || a.data_->shape == b.data_->shape;
    }

private:
    struct Data {
        std::vector<bool> shape;
        std::vector<std::string> labels;
        std::vector<Node> nodes;
        std::vector<std::int32_t> leaf_nodes;
        int height = 0;
    };

    explicit PlaneTree(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

// T(c): 2^c leaves, every leaf at depth c.
PlaneTree perfect_tree(int c);

// G[H]: every leaf of g replaced by a copy of h, plane order kept.
PlaneTree substitute(const PlaneTree& g, const PlaneTree& h);

// H^(1) = h, H^(i+1) = h[H^(i)].
PlaneTree iterate(const PlaneTree& h, int i);

PlaneTree left_subtree(const PlaneTree& t);
PlaneTree right_subtree(const PlaneTree& t);

inline int height(const PlaneTree& t) noexcept { return t.height(); }
inline std::size_t leaf_count(const PlaneTree& t) noexcept { return t.leaf_count(); }

// All distinct plane binary trees with n leaves (Catalan(n-1) of them), ordered
// by the leaf count of the left subtree, then recursively.
std::vector<PlaneTree> all_plane_trees(int n);

// Ordered Newick-like text form: TREE := LEAF | "(" TREE "," TREE ")".
std::string to_newick(const PlaneTree& t);
// Newick with labels stripped; equal for exactly the iso-equal trees.
std::string canonical_form(const PlaneTree& t);
PlaneTree parse_newick(std::string_view text);

} // namespace ramsey
