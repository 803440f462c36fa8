#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/exec.hpp"
#include "ramsey/plane_tree.hpp"

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ramsey {

struct SearchLimits {
    std::uint64_t max_nodes = 10'000'000;
    std::chrono::milliseconds max_time{60'000};
};

// Not-all-equal constraint hypergraph of the negated arrow statement:
// variables are the copies of P in T, and every copy of H in T contributes the
// edge of P-copies inside it.
struct ArrowHypergraph {
    std::shared_ptr<const CopySet> variables;
    std::vector<std::vector<std::int32_t>> edges;  // sorted, deduplicated
    bool has_vacuous_edge = false;                 // some H-copy holds at most one P-copy

    std::size_t variable_count() const noexcept { return variables->size(); }
};

ArrowHypergraph build_arrow_hypergraph(const PlaneTree& host, const PlaneTree& target, const PlaneTree& pattern);

enum class SearchStatus { solution, exhausted, budget };

struct NaeResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<Color> assignment;  // one color per variable when status == solution
    std::uint64_t nodes = 0;
};

// Backtracking search for a k-coloring of the variables with no monochromatic
// edge. Variables are branched most-constrained first (edge degree, then
// index), values ascending, with color-symmetry breaking. The solution found
// is the first one in that order, in both kernels.
//
// The parallel kernel splits the search tree into a frontier of prefixes and
// refutes them concurrently; each prefix gets the full node budget.
NaeResult solve_nae(const std::vector<std::vector<std::int32_t>>& edges, std::size_t variables, int k,
                    const SearchLimits& limits, Exec exec = Exec::automatic);

struct ArrowQuery {
    PlaneTree host;
    PlaneTree target;
    PlaneTree pattern;
    int k = 2;
    SearchLimits limits;
    Exec exec = Exec::automatic;
};

enum class Verdict { holds, fails, unknown };

const char* to_string(Verdict v) noexcept;

struct ArrowVerdict {
    Verdict verdict = Verdict::unknown;
    std::optional<Coloring> witness;  // set exactly when verdict == fails
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
};

// Decides host -> (target)^pattern_k.
ArrowVerdict check_arrow(const ArrowQuery& q);

// True when no copy of h is chi-monochromatic.
bool is_bad_coloring(const Coloring& chi, const PlaneTree& h);

struct HeightScanStep {
    int height;
    ArrowVerdict verdict;
};

struct MinHeightResult {
    std::optional<int> height;
    std::vector<HeightScanStep> scan;
};

// Smallest d >= height(h) with perfect_tree(d) -> (h)^p_k, scanning up to
// max_height. height is empty when the budget ran out or every scanned d failed.
MinHeightResult min_arrow_height(const PlaneTree& h, const PlaneTree& p, int k, const SearchLimits& limits = {},
                                 int max_height = 6, Exec exec = Exec::automatic);

} // namespace ramsey
