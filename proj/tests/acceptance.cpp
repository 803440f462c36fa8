// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ramsey/arrow.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/reference.hpp"
#include "ramsey/triples.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace ramsey;

namespace {

using Clock = std::chrono::steady_clock;

const PlaneTree cherry = perfect_tree(1);
const PlaneTree point = PlaneTree::leaf();
const PlaneTree caterpillar = parse_newick("((,),)");

std::vector<PlaneTree> trees_up_to(int n)
{
    std::vector<PlaneTree> out;
    for (int m = 1; m <= n; ++m)
        for (auto& t : all_plane_trees(m))
            out.push_back(t);
    return out;
}

std::vector<CopyRef> nonempty_subsets(std::size_t n)
{
    std::vector<CopyRef> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        CopyRef s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.leaves.push_back(static_cast<LeafIndex>(i));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::int32_t> positions_of(const CopyRef& s) { return {s.leaves.begin(), s.leaves.end()}; }

// Every witness returned by check_arrow is re-verified here.
struct WitnessAudit {
    std::uint64_t witnesses = 0;
    std::uint64_t unsound = 0;

    void verify(const ArrowVerdict& v, const PlaneTree& h)
    {
        if (!v.witness)
            return;
        ++witnesses;
        if (reference::has_mono_copy(*v.witness, h))
            ++unsound;
    }
};

WitnessAudit audit;

ArrowVerdict checked_arrow(const PlaneTree& t, const PlaneTree& h, const PlaneTree& p, int k)
{
    ArrowVerdict v = check_arrow({t, h, p, k, {}, Exec::automatic});
    if (v.verdict == Verdict::fails && !v.witness)
        ++audit.unsound;
    audit.verify(v, h);
    return v;
}

// A copy of h that is monochromatic under the leaf colors, checked without the
// library's copy machinery.
bool valid_leaf_copy(const PlaneTree& host, const MonoCopy& m, const PlaneTree& h, std::span<const Color> leaf)
{
    if (m.copy.size() != h.leaf_count())
        return false;
    if (reference::induced_form(host, m.copy.leaves) != canonical_form(h))
        return false;
    for (LeafIndex i : m.copy.leaves)
        if (leaf[static_cast<std::size_t>(i)] != m.color)
            return false;
    return true;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = limit_s <= 0 || secs < limit_s;
    const bool pass = o.pass && in_time;
    if (!pass)
        ++failures;
    std::ostringstream limit;
    if (limit_s > 0)
        limit << ", limit " << limit_s << " s";
    if (!in_time)
        o.detail += " [too slow]";
    std::printf("[%s] %2d %s: %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs,
                limit.str().c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    criterion(1, "Catalan enumeration", 5, [] {
        const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42, 132};
        std::vector<std::size_t> got;
        std::size_t roundtrip_failures = 0;
        for (int n = 1; n <= 7; ++n) {
            const auto trees = all_plane_trees(n);
            std::set<std::string> distinct;
            for (const auto& t : trees) {
                const std::string text = to_newick(t);
                if (to_newick(parse_newick(text)) != text)
                    ++roundtrip_failures;
                distinct.insert(text);
            }
            got.push_back(distinct.size() == trees.size() ? trees.size() : 0);
        }
        std::ostringstream d;
        d << "counts";
        for (auto c : got)
            d << ' ' << c;
        d << ", round-trip failures " << roundtrip_failures;
        return Outcome{got == expected && roundtrip_failures == 0, d.str()};
    });

    criterion(2, "Counting oracle equivalence", 60, [] {
        std::size_t pairs = 0, mismatches = 0;
        const auto patterns = trees_up_to(4);
        for (const auto& t : trees_up_to(8))
            for (const auto& p : patterns) {
                ++pairs;
                const auto brute = reference::copies_by_subsets(t, p);
                if (count_copies(t, p) != brute.size() || enumerate_copies(t, p) != brute)
                    ++mismatches;
            }
        return Outcome{mismatches == 0,
                       std::to_string(pairs) + " (host, pattern) pairs, " + std::to_string(mismatches) + " mismatches"};
    });

    criterion(3, "Specific counts", 0, [] {
        const BigInt a = count_copies(perfect_tree(2), cherry);
        const BigInt b = count_copies(perfect_tree(2), parse_newick("((a,b),c)"));
        const bool brute = reference::copies_by_subsets(perfect_tree(2), cherry).size() == 6 &&
                           reference::copies_by_subsets(perfect_tree(2), caterpillar).size() == 2;
        return Outcome{a == 6 && b == 2 && brute,
                       "count(T(2), cherry) = " + a.str() + ", count(T(2), ((a,b),c)) = " + b.str()};
    });

    criterion(4, "Triple round-trip and restriction", 60, [] {
        std::size_t trees = 0, bad_roundtrip = 0, subsets = 0, bad_restrict = 0;
        for (const auto& t : trees_up_to(7)) {
            ++trees;
            if (!iso(reconstruct(structure_of(t)), t))
                ++bad_roundtrip;
        }
        for (const auto& t : trees_up_to(6)) {
            const TripleStructure g = structure_of(t);
            for (const auto& s : nonempty_subsets(t.leaf_count())) {
                ++subsets;
                if (structure_of(induced_subtree(t, s)) != restrict(g, positions_of(s)))
                    ++bad_restrict;
            }
        }
        return Outcome{bad_roundtrip == 0 && bad_restrict == 0,
                       std::to_string(trees) + " round trips (" + std::to_string(bad_roundtrip) + " bad), " +
                           std::to_string(subsets) + " restrictions (" + std::to_string(bad_restrict) + " bad)"};
    });

    criterion(5, "Ramsey-class bridge", 0, [] {
        std::size_t checks = 0, mismatches = 0;
        const auto patterns = trees_up_to(4);
        for (const auto& t : trees_up_to(6)) {
            const TripleStructure g = structure_of(t);
            for (const auto& s : nonempty_subsets(t.leaf_count())) {
                const TripleStructure sub = restrict(g, positions_of(s));
                for (const auto& p : patterns) {
                    ++checks;
                    if (is_copy(t, s, p) != substructure_iso(sub, structure_of(p)))
                        ++mismatches;
                }
            }
        }
        return Outcome{mismatches == 0, std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches"};
    });

    criterion(6, "Arrow checker vs exhaustion", 120, [] {
        std::size_t queries = 0, mismatches = 0, holds = 0;
        const auto targets = trees_up_to(4);
        const auto patterns = trees_up_to(3);
        for (const auto& t : trees_up_to(7))
            for (const auto& p : patterns) {
                if (count_copies(t, p) > 12)
                    continue;
                for (const auto& h : targets)
                    for (int k = 1; k <= 3; ++k) {
                        ++queries;
                        const ArrowVerdict v = checked_arrow(t, h, p, k);
                        const auto ex = reference::exhaustive_arrow(t, h, p, k, Exec::automatic);
                        holds += ex.holds;
                        if (v.verdict != (ex.holds ? Verdict::holds : Verdict::fails))
                            ++mismatches;
                    }
            }
        return Outcome{mismatches == 0, std::to_string(queries) + " queries (" + std::to_string(holds) + " hold), " +
                                            std::to_string(mismatches) + " mismatches"};
    });

    criterion(7, "Minimal heights", 0, [] {
        bool ok = true;
        std::ostringstream d;
        for (int k : {2, 4}) {
            const MinHeightResult r = min_arrow_height(cherry, point, k);
            for (const auto& step : r.scan) {
                audit.verify(step.verdict, cherry);
                if (step.verdict.verdict == Verdict::fails && !step.verdict.witness)
                    ok = false;
                const auto ex = reference::exhaustive_arrow(perfect_tree(step.height), cherry, point, k);
                if ((step.verdict.verdict == Verdict::holds) != ex.holds)
                    ok = false;
            }
            const int want = k == 2 ? 2 : 3;
            ok = ok && r.height == want;
            d << "k=" << k << " -> " << (r.height ? std::to_string(*r.height) : "none") << ' ';
        }
        return Outcome{ok, d.str() + "(scan verified against exhaustion)"};
    });

    criterion(8, "Leaf-coloring witness certification", 120, [] {
        bool ok = true;
        std::ostringstream d;
        for (const auto& [h, k] : {std::pair{cherry, 2}, std::pair{cherry, 3}, std::pair{caterpillar, 2}}) {
            const PlaneTree w = iterate(h, k);
            const ArrowVerdict v = checked_arrow(w, h, point, k);
            const auto ex = reference::exhaustive_arrow(w, h, point, k);
            ok = ok && v.verdict == Verdict::holds && ex.holds;
            d << canonical_form(h) << "^(" << k << "): " << to_string(v.verdict) << "/" << ex.colorings
              << " colorings; ";
        }
        return Outcome{ok, d.str()};
    });

    criterion(9, "Extractor total correctness", 60, [] {
        std::size_t total = 0, bad = 0;
        for (const auto& [h, j] : {std::pair{cherry, 2}, std::pair{cherry, 3}, std::pair{caterpillar, 2}}) {
            const PlaneTree host = iterate(h, j);
            const auto set = make_copy_set(host, point);
            const std::size_t n = host.leaf_count();
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < n; ++i)
                count *= static_cast<std::uint64_t>(j);
            std::vector<Color> colors(n);
            for (std::uint64_t code = 0; code < count; ++code) {
                std::uint64_t rest = code;
                for (auto& c : colors) {
                    c = static_cast<Color>(rest % static_cast<std::uint64_t>(j));
                    rest /= static_cast<std::uint64_t>(j);
                }
                ++total;
                try {
                    const MonoCopy m = extract_mono_leafcolor(h, j, Coloring(set, j, colors));
                    if (!valid_leaf_copy(host, m, h, colors))
                        ++bad;
                } catch (const Error&) {
                    ++bad;
                }
            }
        }
        return Outcome{total == 16 + 6561 + 512 && bad == 0,
                       std::to_string(total) + " colorings, " + std::to_string(bad) + " failures"};
    });

    criterion(10, "k to 2 reduction", 30, [] {
        const ReductionChain chain = build_reduction_chain(cherry, point, 4);
        chain.certify();
        const auto set = make_copy_set(chain.top(), point);
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<Color> pick(0, 3);
        std::size_t bad = 0;
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Color> colors(set->size());
            for (auto& c : colors)
                c = pick(rng);
            const Coloring chi(set, 4, colors);
            const MonoCopy m = extract_mono_k(chain, chi);
            const bool ok = m.color >= 0 && m.color < 4 && valid_leaf_copy(chain.top(), m, cherry, colors) &&
                            is_mono(chi, m.copy) == m.color && reference::mono_color_by_scan(chi, m.copy) == m.color;
            bad += !ok;
        }
        std::string trees;
        for (const auto& t : chain.trees())
            trees += "T(" + std::to_string(height(t)) + ") ";
        return Outcome{bad == 0, "chain " + trees + "; 200 colorings, " + std::to_string(bad) + " failures"};
    });

    criterion(11, "Witness soundness", 0, [] {
        // A few more witnesses from queries outside the exhaustive family.
        checked_arrow(perfect_tree(3), perfect_tree(2), point, 2);
        checked_arrow(perfect_tree(3), caterpillar, cherry, 2);
        checked_arrow(perfect_tree(4), perfect_tree(3), point, 2);
        checked_arrow(perfect_tree(3), perfect_tree(2), cherry, 3);
        return Outcome{audit.witnesses > 0 && audit.unsound == 0,
                       std::to_string(audit.witnesses) + " witnesses re-verified, " + std::to_string(audit.unsound) +
                           " unsound"};
    });

    std::printf("%s: %d of 11 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
