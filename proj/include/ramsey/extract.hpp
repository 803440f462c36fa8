#pragma once

#include "ramsey/arrow.hpp"
#include "ramsey/coloring.hpp"

#include <vector>

namespace ramsey {

// iterate(h, k), which arrows (h)^{T(0)}_k.
PlaneTree leaf_ramsey_witness(const PlaneTree& h, int k);

// A chi-monochromatic copy of h in host = iterate(h, j), where chi colors the
// leaves of host with at most j distinct colors.
//
// Recursion over the lower copies W_1..W_n of iterate(h, j-1): descend into the
// leftmost W_i using at most j-1 colors; if there is none, every W_i uses all
// j colors and the leftmost leaf of the smallest used color in each W_i spans
// the answer.
MonoCopy extract_mono_leafcolor(const PlaneTree& h, int j, const Coloring& chi);

// Trees T^0 = h, T^1, ..., T^l with l = ceil(log2 k) and T^i -> (T^{i-1})^p_2.
class ReductionChain {
public:
    // Checks the shape of the chain (l + 1 trees for k); certify() checks the arrows.
    ReductionChain(std::vector<PlaneTree> trees, PlaneTree pattern, int k);

    const std::vector<PlaneTree>& trees() const noexcept { return trees_; }
    const PlaneTree& pattern() const noexcept { return pattern_; }
    int k() const noexcept { return k_; }
    int length() const noexcept { return static_cast<int>(trees_.size()) - 1; }
    const PlaneTree& top() const { return trees_.back(); }

    // Re-checks every link with check_arrow; throws ResourceError when a check
    // runs out of budget and DomainError when a link fails.
    void certify(const SearchLimits& limits = {}, Exec exec = Exec::automatic) const;

private:
    std::vector<PlaneTree> trees_;
    PlaneTree pattern_;
    int k_;
};

int ceil_log2(int k);

// T^i = the smallest perfect tree arrowing (T^{i-1})^p_2, found by
// min_arrow_height. Throws ResourceError when the scan gives up.
ReductionChain build_reduction_chain(const PlaneTree& h, const PlaneTree& p, int k, const SearchLimits& limits = {},
                                     int max_height = 6, Exec exec = Exec::automatic);

// Binary bit i of a color, i >= 1, low bit first.
inline int color_bit(Color c, int i) { return (c >> (i - 1)) & 1; }

// A chi-monochromatic copy of the chain's base tree inside its top tree, by
// peeling one color bit per link from the top.
MonoCopy extract_mono_k(const ReductionChain& chain, const Coloring& chi);

} // namespace ramsey
