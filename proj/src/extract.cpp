#include "ramsey/extract.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ramsey {

namespace {

std::set<Color> colors_in(std::span<const Color> leaf_colors, std::size_t begin, std::size_t end)
{
    return {leaf_colors.begin() + static_cast<std::ptrdiff_t>(begin),
            leaf_colors.begin() + static_cast<std::ptrdiff_t>(end)};
}

} // namespace

PlaneTree leaf_ramsey_witness(const PlaneTree& h, int k)
{
    if (k < 1)
        throw DomainError("number of colors must be at least 1, got " + std::to_string(k));
    return iterate(h, k);
}

MonoCopy extract_mono_leafcolor(const PlaneTree& h, int j, const Coloring& chi)
{
    if (j < 1)
        throw DomainError("extract_mono_leafcolor: j must be positive, got " + std::to_string(j));
    if (!chi.pattern().is_leaf())
        throw DomainError("extract_mono_leafcolor: the coloring must color leaves (pattern T(0))");
    if (!iso(chi.host(), iterate(h, j)))
        throw DomainError("extract_mono_leafcolor: host is not iterate(h, " + std::to_string(j) + ")");

    // With a one-leaf pattern, copy i is leaf i.
    const std::span<const Color> leaf = chi.colors();
    const std::size_t n = h.leaf_count();
    if (const auto used = colors_in(leaf, 0, leaf.size()).size(); used > static_cast<std::size_t>(j))
        throw DomainError("extract_mono_leafcolor: coloring uses " + std::to_string(used) + " colors, at most " +
                          std::to_string(j) + " allowed");

    std::size_t offset = 0;
    std::size_t size = leaf.size();
    for (int level = j;; --level) {
        if (level == 1) {
            CopyRef all;
            all.leaves.resize(size);
            std::iota(all.leaves.begin(), all.leaves.end(), static_cast<LeafIndex>(offset));
            return {std::move(all), leaf[offset]};
        }
        const std::size_t sub = size / n;
        std::size_t next = n;
        std::set<Color> used_here;
        for (std::size_t i = 0; i < n; ++i) {
            const auto used = colors_in(leaf, offset + i * sub, offset + (i + 1) * sub);
            if (used.size() <= static_cast<std::size_t>(level - 1)) {
                next = i;
                break;
            }
            used_here.insert(used.begin(), used.end());
        }
        if (next < n) {
            offset += next * sub;
            size = sub;
            continue;
        }

        // Every lower copy carries all `level` colors; take the smallest one.
        const Color target = *used_here.begin();
        CopyRef pick;
        for (std::size_t i = 0; i < n; ++i) {
            const auto first = leaf.begin() + static_cast<std::ptrdiff_t>(offset + i * sub);
            const auto it = std::find(first, first + static_cast<std::ptrdiff_t>(sub), target);
            if (it == first + static_cast<std::ptrdiff_t>(sub))
                throw Error("internal: lower copy misses color " + std::to_string(target));
            pick.leaves.push_back(static_cast<LeafIndex>(it - leaf.begin()));
        }
        return {std::move(pick), target};
    }
}

int ceil_log2(int k)
{
    if (k < 1)
        throw DomainError("ceil_log2 of a non-positive number");
    int l = 0;
    while ((1LL << l) < k)
        ++l;
    return l;
}

ReductionChain::ReductionChain(std::vector<PlaneTree> trees, PlaneTree pattern, int k)
    : trees_(std::move(trees)), pattern_(std::move(pattern)), k_(k)
{
    if (k_ < 2)
        throw DomainError("reduction chain needs at least 2 colors, got " + std::to_string(k_));
    const int l = ceil_log2(k_);
    if (static_cast<int>(trees_.size()) != l + 1)
        throw DomainError("reduction chain for " + std::to_string(k_) + " colors needs " + std::to_string(l + 1) +
                          " trees, got " + std::to_string(trees_.size()));
}

void ReductionChain::certify(const SearchLimits& limits, Exec exec) const
{
    for (std::size_t i = 1; i < trees_.size(); ++i) {
        const ArrowVerdict v = check_arrow({trees_[i], trees_[i - 1], pattern_, 2, limits, exec});
        if (v.verdict == Verdict::unknown)
            throw ResourceError("chain link " + std::to_string(i) + " could not be certified within budget");
        if (v.verdict == Verdict::fails)
            throw DomainError("chain link " + std::to_string(i) + " fails: " + canonical_form(trees_[i]) +
                              " does not arrow " + canonical_form(trees_[i - 1]));
    }
}

ReductionChain build_reduction_chain(const PlaneTree& h, const PlaneTree& p, int k, const SearchLimits& limits,
                                     int max_height, Exec exec)
{
    if (k < 2)
        throw DomainError("reduction chain needs at least 2 colors, got " + std::to_string(k));
    std::vector<PlaneTree> trees{h.anonymous()};
    for (int i = 1; i <= ceil_log2(k); ++i) {
        const MinHeightResult r = min_arrow_height(trees.back(), p, 2, limits, max_height, exec);
        if (!r.height)
            throw ResourceError("no perfect tree up to height " + std::to_string(max_height) + " arrows link " +
                                std::to_string(i) + " within budget");
        trees.push_back(perfect_tree(*r.height));
    }
    return ReductionChain(std::move(trees), p.anonymous(), k);
}

MonoCopy extract_mono_k(const ReductionChain& chain, const Coloring& chi)
{
    if (!iso(chi.host(), chain.top()))
        throw DomainError("extract_mono_k: coloring host is not the chain's top tree");
    if (!iso(chi.pattern(), chain.pattern()))
        throw DomainError("extract_mono_k: coloring pattern is not the chain's pattern");
    if (chi.k() > chain.k())
        throw DomainError("extract_mono_k: coloring has " + std::to_string(chi.k()) + " colors, chain covers " +
                          std::to_string(chain.k()));

    CopyRef region;
    region.leaves.resize(chi.host().leaf_count());
    std::iota(region.leaves.begin(), region.leaves.end(), 0);

    for (int i = chain.length(); i >= 1; --i) {
        std::vector<Color> bits;
        bits.reserve(chi.colors().size());
        for (Color c : chi.colors())
            bits.push_back(color_bit(c, i));
        const Coloring psi(chi.copy_set(), 2, std::move(bits));
        auto found = find_mono_copy(psi, chain.trees()[static_cast<std::size_t>(i - 1)], region);
        if (!found)
            throw Error("broken chain certificate: no bit-" + std::to_string(i) + " monochromatic copy");
        region = std::move(found->copy);
    }
    const auto color = is_mono(chi, region);
    if (!color)
        throw Error("internal: extracted copy is not monochromatic");
    return {std::move(region), *color};
}

} // namespace ramsey
