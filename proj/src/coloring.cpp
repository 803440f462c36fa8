#include "ramsey/coloring.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

namespace ramsey {

namespace {

// Index of the first candidate satisfying pred, scanning in parallel. The
// result equals the sequential scan's regardless of scheduling.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t n, Exec exec, Pred pred)
{
    if (!use_parallel(exec)) {
        for (std::size_t i = 0; i < n; ++i)
            if (pred(i))
                return i;
        return std::nullopt;
    }

    std::atomic<std::size_t> best{n};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (u >= best.load(std::memory_order_relaxed))
            continue;
        try {
            if (pred(u)) {
                std::size_t cur = best.load(std::memory_order_relaxed);
                while (u < cur && !best.compare_exchange_weak(cur, u, std::memory_order_relaxed)) {
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    if (best.load() == n)
        return std::nullopt;
    return best.load();
}

std::optional<MonoCopy> scan_for_mono(const Coloring& chi, const std::vector<CopyRef>& candidates, Exec exec)
{
    const auto hit = first_match(candidates.size(), exec,
                                 [&](std::size_t i) { return is_mono(chi, candidates[i]).has_value(); });
    if (!hit)
        return std::nullopt;
    const CopyRef& s = candidates[*hit];
    return MonoCopy{s, *is_mono(chi, s)};
}

} // namespace

CopySet::CopySet(PlaneTree host, PlaneTree pattern)
    : host_(std::move(host)), pattern_(std::move(pattern)), copies_(enumerate_copies(host_, pattern_))
{
}

std::optional<std::size_t> CopySet::index_of(const CopyRef& s) const
{
    const auto it = std::lower_bound(copies_.begin(), copies_.end(), s);
    if (it == copies_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - copies_.begin());
}

std::shared_ptr<const CopySet> make_copy_set(PlaneTree host, PlaneTree pattern)
{
    return std::make_shared<const CopySet>(std::move(host), std::move(pattern));
}

Coloring::Coloring(std::shared_ptr<const CopySet> copies, int k, std::vector<Color> colors)
    : copies_(std::move(copies)), k_(k), colors_(std::move(colors))
{
    if (!copies_)
        throw DomainError("coloring needs a copy set");
    if (k_ < 1)
        throw DomainError("number of colors must be at least 1, got " + std::to_string(k_));
    if (colors_.size() != copies_->size())
        throw DomainError("coloring assigns " + std::to_string(colors_.size()) + " colors to " +
                          std::to_string(copies_->size()) + " copies");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] < 0 || colors_[i] >= k_)
            throw DomainError("color " + std::to_string(colors_[i]) + " of copy " + to_string(copies_->copies()[i]) +
                              " is outside [0," + std::to_string(k_) + ")");
}

Coloring Coloring::constant(std::shared_ptr<const CopySet> copies, int k, Color c)
{
    const std::size_t n = copies ? copies->size() : 0;
    return Coloring(std::move(copies), k, std::vector<Color>(n, c));
}

Coloring Coloring::from_function(std::shared_ptr<const CopySet> copies, int k,
                                 const std::function<Color(const CopyRef&)>& fn)
{
    std::vector<Color> colors;
    if (copies) {
        colors.reserve(copies->size());
        for (const CopyRef& s : copies->copies())
            colors.push_back(fn(s));
    }
    return Coloring(std::move(copies), k, std::move(colors));
}

Color Coloring::color_of(const CopyRef& s) const
{
    const auto i = copies_->index_of(s);
    if (!i)
        throw DomainError(to_string(s) + " is not a copy of the pattern in the host");
    return colors_[*i];
}

bool Coloring::operator==(const Coloring& other) const
{
    return k_ == other.k_ && colors_ == other.colors_ && iso(host(), other.host()) &&
           iso(pattern(), other.pattern());
}

std::optional<Color> is_mono(const Coloring& chi, const CopyRef& s)
{
    const std::vector<CopyRef> inner = copies_within(chi.host(), s, chi.pattern());
    if (inner.empty())
        return kVacuousColor;
    const Color first = chi.color_of(inner.front());
    for (std::size_t i = 1; i < inner.size(); ++i)
        if (chi.color_of(inner[i]) != first)
            return std::nullopt;
    return first;
}

std::optional<MonoCopy> find_mono_copy(const Coloring& chi, const PlaneTree& h, Exec exec)
{
    return scan_for_mono(chi, enumerate_copies(chi.host(), h), exec);
}

std::optional<MonoCopy> find_mono_copy(const Coloring& chi, const PlaneTree& h, const CopyRef& region, Exec exec)
{
    return scan_for_mono(chi, copies_within(chi.host(), region, h), exec);
}

void check_root_split(const Coloring& chi, const CopyRef& left_region, const CopyRef& right_region)
{
    if (chi.pattern().leaf_count() < 2)
        throw DomainError("not root-split: the pattern is a single leaf");
    validate_copy_ref(chi.host(), left_region);
    validate_copy_ref(chi.host(), right_region);
    const PlaneTree& t = chi.host();
    if (left_region.back() >= right_region.front())
        throw DomainError("not root-split: " + to_string(left_region) + " does not lie left of " +
                          to_string(right_region));
    const auto& v = t.node(lca(t, left_region.front(), right_region.back()));
    const LeafIndex split = t.node(v.right).lo;
    if (left_region.back() >= split || right_region.front() < split)
        throw DomainError("not root-split: " + to_string(left_region) + " and " + to_string(right_region) +
                          " are not under the two children of a common node");
}

std::map<CopyRef, PsiImage> psi_map(const Coloring& chi, const CopyRef& left_region, const CopyRef& right_region,
                                    Side side)
{
    check_root_split(chi, left_region, right_region);
    const PlaneTree pattern_left = chi.pattern().left();
    const PlaneTree pattern_right = chi.pattern().right();
    const bool keys_left = side == Side::left;

    const std::vector<CopyRef> keys = keys_left ? copies_within(chi.host(), left_region, pattern_left)
                                                : copies_within(chi.host(), right_region, pattern_right);
    const std::vector<CopyRef> partners = keys_left ? copies_within(chi.host(), right_region, pattern_right)
                                                    : copies_within(chi.host(), left_region, pattern_left);

    std::map<CopyRef, PsiImage> out;
    for (const CopyRef& key : keys) {
        PsiImage image;
        image.copies = partners;
        image.colors.reserve(partners.size());
        for (const CopyRef& other : partners)
            image.colors.push_back(chi.color_of(join_copies(key, other)));
        out.emplace(key, std::move(image));
    }
    return out;
}

std::optional<CopyRef> find_psi_mono(const Coloring& chi, const CopyRef& region, const PlaneTree& target, Side side,
                                     const CopyRef& partner)
{
    const bool on_left = side == Side::left;
    const auto psi = on_left ? psi_map(chi, region, partner, side) : psi_map(chi, partner, region, side);
    const PlaneTree key_pattern = on_left ? chi.pattern().left() : chi.pattern().right();

    for (const CopyRef& candidate : copies_within(chi.host(), region, target)) {
        const std::vector<CopyRef> keys = copies_within(chi.host(), candidate, key_pattern);
        const bool agree = std::all_of(keys.begin(), keys.end(), [&](const CopyRef& key) {
            return psi.at(key) == psi.at(keys.front());
        });
        if (agree)
            return candidate;
    }
    return std::nullopt;
}

} // namespace ramsey
