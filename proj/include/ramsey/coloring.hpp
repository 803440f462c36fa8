#pragma once

#include "ramsey/embedding.hpp"
#include "ramsey/exec.hpp"
#include "ramsey/plane_tree.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ramsey {

using Color = int;

// Reported by is_mono/find_mono_copy for a copy containing no pattern copies.
inline constexpr Color kVacuousColor = -1;

// The copies of a pattern in a host, in lexicographic order. Shared between
// all colorings over the same (host, pattern).
class CopySet {
public:
    CopySet(PlaneTree host, PlaneTree pattern);

    const PlaneTree& host() const noexcept { return host_; }
    const PlaneTree& pattern() const noexcept { return pattern_; }
    const std::vector<CopyRef>& copies() const noexcept { return copies_; }
    std::size_t size() const noexcept { return copies_.size(); }

    std::optional<std::size_t> index_of(const CopyRef& s) const;

private:
    PlaneTree host_;
    PlaneTree pattern_;
    std::vector<CopyRef> copies_;
};

std::shared_ptr<const CopySet> make_copy_set(PlaneTree host, PlaneTree pattern);

// A total k-coloring of the copies of a pattern in a host.
class Coloring {
public:
    // colors[i] is the color of copies()[i]; every color must lie in [0, k).
    Coloring(std::shared_ptr<const CopySet> copies, int k, std::vector<Color> colors);

    static Coloring constant(std::shared_ptr<const CopySet> copies, int k, Color c);
    static Coloring from_function(std::shared_ptr<const CopySet> copies, int k,
                                  const std::function<Color(const CopyRef&)>& fn);

    const PlaneTree& host() const noexcept { return copies_->host(); }
    const PlaneTree& pattern() const noexcept { return copies_->pattern(); }
    int k() const noexcept { return k_; }
    const std::shared_ptr<const CopySet>& copy_set() const noexcept { return copies_; }
    const std::vector<CopyRef>& copies() const noexcept { return copies_->copies(); }
    std::span<const Color> colors() const noexcept { return colors_; }

    // Throws DomainError when s is not a pattern copy in the host.
    Color color_of(const CopyRef& s) const;

    bool operator==(const Coloring& other) const;

private:
    std::shared_ptr<const CopySet> copies_;
    int k_;
    std::vector<Color> colors_;
};

// Shared color of all pattern copies inside s (kVacuousColor if there are
// none), or nullopt when two of them differ. s must be valid in chi.host().
std::optional<Color> is_mono(const Coloring& chi, const CopyRef& s);

struct MonoCopy {
    CopyRef copy;
    Color color;

    bool operator==(const MonoCopy&) const = default;
};

// Lexicographically least chi-monochromatic copy of h, searching the whole
// host or only copies inside region.
std::optional<MonoCopy> find_mono_copy(const Coloring& chi, const PlaneTree& h, Exec exec = Exec::automatic);
std::optional<MonoCopy> find_mono_copy(const Coloring& chi, const PlaneTree& h, const CopyRef& region,
                                       Exec exec = Exec::automatic);

// psi machinery. For leaf-disjoint regions a and b lying under the left and
// right child of a common host node, every join of a copy of pattern_left
// inside a with a copy of pattern_right inside b is a copy of the pattern.

enum class Side { left, right };

// The coloring of the partner side's pattern_side copies induced by one key copy.
struct PsiImage {
    std::vector<CopyRef> copies;  // partner-side copies, host indices, lexicographic
    std::vector<Color> colors;

    bool operator==(const PsiImage&) const = default;
};

// Keys are the copies of pattern_side inside the `side` region; each maps to
// the coloring P' -> chi(join(key, P')) of the other pattern half inside the
// other region. psi_map(chi, a, b) with the default side is psi(P1)(P2) =
// chi(<P1, P2>) for P1 inside a.
std::map<CopyRef, PsiImage> psi_map(const Coloring& chi, const CopyRef& left_region, const CopyRef& right_region,
                                    Side side = Side::left);

// Throws DomainError("not root-split ...") unless the regions qualify.
void check_root_split(const Coloring& chi, const CopyRef& left_region, const CopyRef& right_region);

// Lexicographically least copy of target inside region whose pattern_side
// copies all have the same psi image over partner.
std::optional<CopyRef> find_psi_mono(const Coloring& chi, const CopyRef& region, const PlaneTree& target, Side side,
                                     const CopyRef& partner);

} // namespace ramsey
