#include "ramsey/selftest.hpp"

#include "ramsey/arrow.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/reference.hpp"
#include "ramsey/triples.hpp"

#include <string>

namespace ramsey {

namespace {

std::vector<PlaneTree> trees_up_to(int n)
{
    std::vector<PlaneTree> out;
    for (int m = 1; m <= n; ++m)
        for (PlaneTree& t : all_plane_trees(m))
            out.push_back(std::move(t));
    return out;
}

class Tally {
public:
    Tally(std::ostream& log, SelftestReport& report) : log_(log), report_(report) {}

    void section(const std::string& name, int failures_before)
    {
        log_ << (report_.failures == failures_before ? "ok    " : "FAIL  ") << name << '\n';
    }

    void check(bool ok, const std::string& what)
    {
        ++report_.checks;
        if (!ok) {
            ++report_.failures;
            log_ << "  mismatch: " << what << '\n';
        }
    }

private:
    std::ostream& log_;
    SelftestReport& report_;
};

} // namespace

SelftestReport run_selftest(std::ostream& log)
{
    SelftestReport report;
    Tally tally(log, report);

    int before = report.failures;
    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 6; ++n)
        tally.check(all_plane_trees(n).size() == static_cast<std::size_t>(catalan[n - 1]),
                    "catalan count for n=" + std::to_string(n));
    tally.section("plane tree enumeration", before);

    const auto hosts = trees_up_to(6);
    const auto patterns = trees_up_to(3);

    before = report.failures;
    for (const auto& t : hosts)
        for (const auto& p : patterns) {
            const auto fast = enumerate_copies(t, p);
            const auto slow = reference::copies_by_subsets(t, p);
            tally.check(fast == slow && count_copies(t, p) == fast.size(),
                        "copies of " + canonical_form(p) + " in " + canonical_form(t));
        }
    tally.section("copy enumeration and counting", before);

    before = report.failures;
    for (const auto& t : trees_up_to(5)) {
        tally.check(iso(reconstruct(structure_of(t)), t), "triple roundtrip of " + canonical_form(t));
        const auto g = structure_of(t);
        const auto n = static_cast<LeafIndex>(t.leaf_count());
        for (LeafIndex a = 0; a < n; ++a)
            for (LeafIndex b = 0; b < n; ++b)
                for (LeafIndex c = 0; c < n; ++c)
                    if (a != b && b != c && a != c)
                        tally.check(g.holds(a, b, c) == reference::rooted_triple(t, a, b, c),
                                    "rooted triple in " + canonical_form(t));
    }
    tally.section("rooted triple encoding", before);

    before = report.failures;
    const auto small_hosts = trees_up_to(5);
    const auto targets = trees_up_to(3);
    for (const auto& t : small_hosts)
        for (const auto& h : targets)
            for (const auto& p : trees_up_to(2))
                for (int k = 1; k <= 2; ++k) {
                    const ArrowVerdict v = check_arrow({t, h, p, k, {}, Exec::serial});
                    const auto ref = reference::exhaustive_arrow(t, h, p, k);
                    const std::string what = canonical_form(t) + " -> (" + canonical_form(h) + ")^" +
                                             canonical_form(p) + "_" + std::to_string(k);
                    tally.check((v.verdict == Verdict::holds) == ref.holds && v.verdict != Verdict::unknown, what);
                    if (v.witness)
                        tally.check(!reference::has_mono_copy(*v.witness, h), "witness of " + what);
                }
    tally.section("arrow checker against exhaustive enumeration", before);

    before = report.failures;
    const PlaneTree cherry = perfect_tree(1);
    const PlaneTree host = iterate(cherry, 2);
    const auto leaves = make_copy_set(host, PlaneTree::leaf());
    for (int mask = 0; mask < 16; ++mask) {
        const Coloring chi = Coloring::from_function(leaves, 2, [&](const CopyRef& s) { return (mask >> s.front()) & 1; });
        const MonoCopy m = extract_mono_leafcolor(cherry, 2, chi);
        tally.check(is_copy(host, m.copy, cherry) && reference::mono_color_by_scan(chi, m.copy) == m.color,
                    "leaf-color extraction for mask " + std::to_string(mask));
    }
    tally.section("leaf-color extraction", before);

    log << report.checks << " checks, " << report.failures << " failures\n";
    return report;
}

} // namespace ramsey
