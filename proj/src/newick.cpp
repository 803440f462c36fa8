#include "ramsey/errors.hpp"
#include "ramsey/plane_tree.hpp"

#include <cctype>

namespace ramsey {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_reserved(char c) { return c == ',' || c == '(' || c == ')'; }

std::string render(const PlaneTree& t, bool with_labels)
{
    std::string out;
    out.reserve(t.node_count() * 2);
    std::vector<bool> right_pending;  // per open internal node: left child already emitted
    LeafIndex leaf = 0;
    for (bool internal : t.shape()) {
        if (internal) {
            out += '(';
            right_pending.push_back(false);
            continue;
        }
        if (with_labels)
            out += t.label(leaf);
        ++leaf;
        while (!right_pending.empty()) {
            if (!right_pending.back()) {
                right_pending.back() = true;
                out += ',';
                break;
            }
            out += ')';
            right_pending.pop_back();
        }
    }
    return out;
}

std::string describe(std::string_view text, std::size_t pos)
{
    if (pos >= text.size())
        return "end of input";
    return std::string("'") + text[pos] + "'";
}

} // namespace

std::string to_newick(const PlaneTree& t) { return render(t, true); }

std::string canonical_form(const PlaneTree& t) { return render(t, false); }

PlaneTree parse_newick(std::string_view text)
{
    std::vector<bool> shape;
    std::vector<std::string> labels;
    std::vector<bool> right_pending;
    std::size_t pos = 0;

    auto skip_space = [&] {
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
    };

    for (;;) {
        skip_space();
        if (pos < text.size() && text[pos] == '(') {
            shape.push_back(true);
            right_pending.push_back(false);
            ++pos;
            if (shape.size() > 2 * max_leaves())
                throw ResourceError("newick input exceeds the leaf limit of " + std::to_string(max_leaves()));
            continue;
        }

        const std::size_t start = pos;
        while (pos < text.size() && !is_reserved(text[pos]))
            ++pos;
        std::string_view label = text.substr(start, pos - start);
        while (!label.empty() && is_space(label.front()))
            label.remove_prefix(1);
        while (!label.empty() && is_space(label.back()))
            label.remove_suffix(1);
        shape.push_back(false);
        labels.emplace_back(label);

        for (;;) {
            skip_space();
            if (right_pending.empty()) {
                if (pos != text.size())
                    throw ParseError("unexpected " + describe(text, pos) + " after complete tree", pos);
                return PlaneTree::from_shape(std::move(shape), std::move(labels));
            }
            if (!right_pending.back()) {
                if (pos >= text.size() || text[pos] != ',')
                    throw ParseError("unexpected " + describe(text, pos) + ", expected ','", pos);
                right_pending.back() = true;
                ++pos;
                break;
            }
            if (pos >= text.size() || text[pos] != ')')
                throw ParseError("unexpected " + describe(text, pos) + ", expected ')'", pos);
            right_pending.pop_back();
            ++pos;
        }
    }
}

} // namespace ramsey
