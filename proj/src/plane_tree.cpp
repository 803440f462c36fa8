#include "ramsey/plane_tree.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <limits>

namespace ramsey {

namespace {

const std::string& empty_label()
{
    static const std::string empty;
    return empty;
}

bool all_empty(const std::vector<std::string>& labels)
{
    return std::all_of(labels.begin(), labels.end(), [](const std::string& s) { return s.empty(); });
}

std::size_t checked_mul(std::size_t a, std::size_t b, const char* what)
{
    if (b != 0 && a > std::numeric_limits<std::size_t>::max() / b)
        throw ResourceError(std::string(what) + ": leaf count overflows");
    return a * b;
}

} // namespace

PlaneTree::PlaneTree() : PlaneTree(leaf()) {}

PlaneTree PlaneTree::leaf(std::string label)
{
    std::vector<std::string> labels;
    if (!label.empty())
        labels.push_back(std::move(label));
    return from_shape({false}, std::move(labels));
}

PlaneTree PlaneTree::join(const PlaneTree& left, const PlaneTree& right)
{
    check_leaf_budget(left.leaf_count() + right.leaf_count(), "join");
    std::vector<bool> shape;
    shape.reserve(1 + left.node_count() + right.node_count());
    shape.push_back(true);
    shape.insert(shape.end(), left.shape().begin(), left.shape().end());
    shape.insert(shape.end(), right.shape().begin(), right.shape().end());

    std::vector<std::string> labels;
    if (left.has_labels() || right.has_labels()) {
        labels.reserve(left.leaf_count() + right.leaf_count());
        for (const PlaneTree* t : {&left, &right})
            for (std::size_t i = 0; i < t->leaf_count(); ++i)
                labels.push_back(t->label(static_cast<LeafIndex>(i)));
    }
    return from_shape(std::move(shape), std::move(labels));
}

PlaneTree PlaneTree::from_shape(std::vector<bool> shape, std::vector<std::string> labels)
{
    const std::size_t m = shape.size();
    if (m == 0)
        throw DomainError("empty shape code");
    const auto internal = static_cast<std::size_t>(std::count(shape.begin(), shape.end(), true));
    if (m != 2 * internal + 1)
        throw DomainError("malformed shape code: " + std::to_string(internal) + " internal nodes but " +
                          std::to_string(m - internal) + " leaves");
    const std::size_t n = internal + 1;
    check_leaf_budget(n, "tree");
    if (!labels.empty() && labels.size() != n)
        throw DomainError("label count " + std::to_string(labels.size()) + " does not match leaf count " +
                          std::to_string(n));
    if (all_empty(labels))
        labels.clear();

    auto data = std::make_shared<Data>();
    data->nodes.resize(m);
    data->leaf_nodes.reserve(n);

    std::vector<std::int32_t> open;  // internal nodes still waiting for their right child
    LeafIndex next_leaf = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Node& nd = data->nodes[i];
        const auto id = static_cast<std::int32_t>(i);
        if (i > 0) {
            if (open.empty())
                throw DomainError("malformed shape code: trailing nodes after a complete tree");
            const std::int32_t p = open.back();
            Node& parent = data->nodes[static_cast<std::size_t>(p)];
            nd.parent = p;
            nd.depth = parent.depth + 1;
            if (parent.left < 0) {
                parent.left = id;
            } else {
                parent.right = id;
                open.pop_back();
            }
        }
        nd.lo = next_leaf;
        if (shape[i]) {
            open.push_back(id);
        } else {
            data->leaf_nodes.push_back(id);
            nd.hi = ++next_leaf;
            data->height = std::max(data->height, nd.depth);
        }
    }
    if (!open.empty())
        throw DomainError("malformed shape code: incomplete tree");
    for (std::size_t i = m; i-- > 0;) {
        Node& nd = data->nodes[i];
        if (!nd.is_leaf())
            nd.hi = data->nodes[static_cast<std::size_t>(nd.right)].hi;
    }
    data->shape = std::move(shape);
    data->labels = std::move(labels);
    return PlaneTree(std::move(data));
}

std::size_t PlaneTree::leaf_count() const noexcept { return data_->leaf_nodes.size(); }
std::size_t PlaneTree::node_count() const noexcept { return data_->nodes.size(); }
int PlaneTree::height() const noexcept { return data_->height; }

const std::string& PlaneTree::label(LeafIndex i) const
{
    if (data_->labels.empty())
        return empty_label();
    return data_->labels.at(static_cast<std::size_t>(i));
}

std::string PlaneTree::leaf_name(LeafIndex i) const
{
    const std::string& l = label(i);
    return l.empty() ? std::to_string(i) : l;
}

PlaneTree PlaneTree::left() const
{
    if (is_leaf())
        throw DomainError("no children: tree is a single leaf");
    return subtree(node(0).left);
}

PlaneTree PlaneTree::right() const
{
    if (is_leaf())
        throw DomainError("no children: tree is a single leaf");
    return subtree(node(0).right);
}

PlaneTree PlaneTree::subtree(std::int32_t v) const
{
    if (v == 0)
        return *this;
    const Node& nd = node(v);
    const auto begin = static_cast<std::size_t>(v);
    const auto size = static_cast<std::size_t>(2 * nd.leaf_count() - 1);
    std::vector<bool> shape(data_->shape.begin() + static_cast<std::ptrdiff_t>(begin),
                            data_->shape.begin() + static_cast<std::ptrdiff_t>(begin + size));
    std::vector<std::string> labels;
    if (has_labels())
        labels.assign(data_->labels.begin() + nd.lo, data_->labels.begin() + nd.hi);
    return from_shape(std::move(shape), std::move(labels));
}

PlaneTree PlaneTree::anonymous() const
{
    if (!has_labels())
        return *this;
    return from_shape(data_->shape);
}

PlaneTree perfect_tree(int c)
{
    if (c < 0)
        throw DomainError("perfect_tree: height must be non-negative, got " + std::to_string(c));
    if (c >= 62)
        throw ResourceError("perfect_tree: height " + std::to_string(c) + " is too large");
    check_leaf_budget(std::size_t{1} << c, "perfect_tree");
    std::vector<bool> shape{false};
    for (int level = 0; level < c; ++level) {
        std::vector<bool> next;
        next.reserve(2 * shape.size() + 1);
        next.push_back(true);
        next.insert(next.end(), shape.begin(), shape.end());
        next.insert(next.end(), shape.begin(), shape.end());
        shape = std::move(next);
    }
    return PlaneTree::from_shape(std::move(shape));
}

PlaneTree substitute(const PlaneTree& g, const PlaneTree& h)
{
    check_leaf_budget(checked_mul(g.leaf_count(), h.leaf_count(), "substitute"), "substitute");
    std::vector<bool> shape;
    shape.reserve(g.node_count() - g.leaf_count() + g.leaf_count() * h.node_count());
    for (bool internal : g.shape()) {
        if (internal)
            shape.push_back(true);
        else
            shape.insert(shape.end(), h.shape().begin(), h.shape().end());
    }
    return PlaneTree::from_shape(std::move(shape));
}

PlaneTree iterate(const PlaneTree& h, int i)
{
    if (i < 1)
        throw DomainError("iterate: exponent must be positive, got " + std::to_string(i));
    PlaneTree result = h.anonymous();
    for (int step = 1; step < i; ++step)
        result = substitute(h, result);
    return result;
}

PlaneTree left_subtree(const PlaneTree& t) { return t.left(); }
PlaneTree right_subtree(const PlaneTree& t) { return t.right(); }

std::vector<PlaneTree> all_plane_trees(int n)
{
    if (n < 1)
        throw DomainError("all_plane_trees: leaf count must be positive");
    check_leaf_budget(static_cast<std::size_t>(n), "all_plane_trees");
    std::vector<std::vector<PlaneTree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1].push_back(PlaneTree::leaf());
    for (int m = 2; m <= n; ++m)
        for (int l = 1; l < m; ++l)
            for (const PlaneTree& a : by_size[static_cast<std::size_t>(l)])
                for (const PlaneTree& b : by_size[static_cast<std::size_t>(m - l)])
                    by_size[static_cast<std::size_t>(m)].push_back(PlaneTree::join(a, b));
    return by_size[static_cast<std::size_t>(n)];
}

} // namespace ramsey
