#pragma once

// Brute-force reference implementations. They share no algorithmic path with
// the library kernels and exist to check them.

#include "ramsey/coloring.hpp"
#include "ramsey/exec.hpp"
#include "ramsey/plane_tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ramsey::reference {

// Canonical form of the subtree spanned by `leaves`, computed by closing the
// leaf set under pairwise LCAs (parent-pointer climbing) and contracting.
std::string induced_form(const PlaneTree& t, const std::vector<LeafIndex>& leaves);

// All |p|-subsets of leaves, in lexicographic order, whose induced form is p's.
std::vector<CopyRef> copies_by_subsets(const PlaneTree& t, const PlaneTree& p);

// ab|c by climbing parents.
bool rooted_triple(const PlaneTree& t, LeafIndex a, LeafIndex b, LeafIndex c);

// Colors of pattern copies contained in s, found by scanning every copy.
std::optional<Color> mono_color_by_scan(const Coloring& chi, const CopyRef& s);

// True when some copy of h (found by subset enumeration) is monochromatic.
bool has_mono_copy(const Coloring& chi, const PlaneTree& h);

struct ExhaustiveResult {
    bool holds = false;
    std::optional<std::vector<Color>> first_bad;  // lexicographically first bad coloring
    std::uint64_t colorings = 0;                  // k^(number of P-copies)
};

// Enumerates all k^n colorings of the P-copies of host. Throws ResourceError
// when k^n exceeds 2^36.
ExhaustiveResult exhaustive_arrow(const PlaneTree& host, const PlaneTree& target, const PlaneTree& pattern, int k,
                                  Exec exec = Exec::serial);

} // namespace ramsey::reference
