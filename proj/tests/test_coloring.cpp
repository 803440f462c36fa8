#include "ramsey/coloring.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/reference.hpp"

#include <doctest.h>
#include <omp.h>

using namespace ramsey;

namespace {

const PlaneTree cherry = perfect_tree(1);
const PlaneTree point = PlaneTree::leaf();

CopyRef ref(std::vector<LeafIndex> v) { return CopyRef{std::move(v)}; }

Coloring leaf_coloring(const PlaneTree& host, std::vector<Color> colors, int k = 2)
{
    return Coloring(make_copy_set(host, point), k, std::move(colors));
}

std::vector<PlaneTree> trees_up_to(int n)
{
    std::vector<PlaneTree> out;
    for (int m = 1; m <= n; ++m)
        for (auto& t : all_plane_trees(m))
            out.push_back(t);
    return out;
}

// Coloring number `code` in base k, copy 0 as the lowest digit.
Coloring nth_coloring(const std::shared_ptr<const CopySet>& set, int k, std::uint64_t code)
{
    std::vector<Color> colors(set->size());
    for (auto& c : colors) {
        c = static_cast<Color>(code % static_cast<std::uint64_t>(k));
        code /= static_cast<std::uint64_t>(k);
    }
    return Coloring(set, k, std::move(colors));
}

} // namespace

TEST_CASE("coloring construction")
{
    const auto set = make_copy_set(perfect_tree(2), cherry);
    CHECK(set->size() == 6);
    CHECK(set->index_of(ref({1, 3})) == 4);
    CHECK_FALSE(set->index_of(ref({1, 4})));

    CHECK_THROWS_AS(Coloring(set, 2, {0, 1}), DomainError);
    CHECK_THROWS_AS(Coloring(set, 2, {0, 1, 2, 0, 0, 0}), DomainError);
    CHECK_THROWS_AS(Coloring(set, 0, {0, 0, 0, 0, 0, 0}), DomainError);

    const Coloring chi = Coloring::from_function(set, 3, [](const CopyRef& s) { return s.front() + s.back() == 3; });
    CHECK(chi.color_of(ref({0, 3})) == 1);
    CHECK(chi.color_of(ref({1, 2})) == 1);
    CHECK(chi.color_of(ref({0, 1})) == 0);
    CHECK_THROWS_AS(chi.color_of(ref({0, 1, 2})), DomainError);

    CHECK(Coloring::constant(set, 2, 1) == Coloring(set, 2, {1, 1, 1, 1, 1, 1}));
    CHECK_FALSE(Coloring::constant(set, 2, 1) == Coloring::constant(set, 3, 1));
    CHECK(Coloring::constant(set, 2, 1) == Coloring::constant(make_copy_set(perfect_tree(2), cherry), 2, 1));
}

TEST_CASE("monochromatic copies")
{
    const Coloring chi = leaf_coloring(perfect_tree(2), {0, 1, 0, 1});
    CHECK(find_mono_copy(chi, cherry) == MonoCopy{ref({0, 2}), 0});
    CHECK(is_mono(chi, ref({0, 2})) == 0);
    CHECK_FALSE(is_mono(chi, ref({0, 1})));
    CHECK(is_mono(chi, ref({1, 3})) == 1);

    const Coloring two = leaf_coloring(cherry, {0, 1});
    CHECK_FALSE(find_mono_copy(two, cherry));

    const auto set = make_copy_set(perfect_tree(3), cherry);
    const Coloring one = Coloring::constant(set, 1, 0);
    CHECK(find_mono_copy(one, parse_newick("(a,(b,c))")) == MonoCopy{ref({0, 2, 3}), 0});

    const Coloring whole = Coloring::constant(set, 2, 1);
    CopyRef all;
    for (LeafIndex i = 0; i < 8; ++i)
        all.leaves.push_back(i);
    CHECK(is_mono(whole, all) == 1);
}

TEST_CASE("copies without pattern copies are vacuously monochromatic")
{
    const auto set = make_copy_set(perfect_tree(2), cherry);
    const Coloring chi(set, 2, {0, 1, 0, 1, 0, 1});
    CHECK(is_mono(chi, ref({2})) == kVacuousColor);
    CHECK(find_mono_copy(chi, point) == MonoCopy{ref({0}), kVacuousColor});
}

TEST_CASE("search inside a region")
{
    const Coloring chi = leaf_coloring(perfect_tree(3), {0, 1, 1, 0, 1, 0, 0, 1});
    CHECK(find_mono_copy(chi, cherry, ref({0, 1, 3, 5})) == MonoCopy{ref({0, 3}), 0});
    CHECK(find_mono_copy(chi, cherry, ref({1, 2})) == MonoCopy{ref({1, 2}), 1});
    CHECK_FALSE(find_mono_copy(chi, cherry, ref({0, 1})));
    CHECK_FALSE(find_mono_copy(chi, perfect_tree(2), ref({0, 1, 2})));
}

TEST_CASE("find_mono_copy agrees with brute force")
{
    // Every 2-coloring of the cherry copies in every host up to 5 leaves,
    // every target up to 4 leaves.
    for (const auto& t : trees_up_to(5)) {
        const auto set = make_copy_set(t, cherry);
        if (set->size() > 10)
            continue;
        for (std::uint64_t code = 0; code < (1ull << set->size()); ++code) {
            const Coloring chi = nth_coloring(set, 2, code);
            for (const auto& h : trees_up_to(4)) {
                const auto found = find_mono_copy(chi, h, Exec::serial);
                CHECK(found.has_value() == reference::has_mono_copy(chi, h));
                if (!found)
                    continue;
                CHECK(is_copy(t, found->copy, h));
                CHECK(reference::mono_color_by_scan(chi, found->copy) == found->color);
                for (const auto& s : reference::copies_by_subsets(t, h)) {
                    if (s == found->copy)
                        break;
                    CHECK_FALSE(reference::mono_color_by_scan(chi, s));
                }
            }
        }
    }
}

TEST_CASE("parallel search returns the serial witness")
{
    const int saved = omp_get_max_threads();
    omp_set_num_threads(4);
    for (const auto& t : all_plane_trees(7)) {
        const auto set = make_copy_set(t, point);
        for (std::uint64_t code = 0; code < 128; code += 5) {
            const Coloring chi = nth_coloring(set, 2, code);
            for (const auto& h : trees_up_to(4))
                CHECK(find_mono_copy(chi, h, Exec::serial) == find_mono_copy(chi, h, Exec::parallel));
        }
    }
    omp_set_num_threads(saved);
}

TEST_CASE("psi images")
{
    const auto set = make_copy_set(perfect_tree(2), cherry);
    const Coloring chi = Coloring::from_function(set, 2, [](const CopyRef& s) { return s == ref({0, 2}); });
    const auto psi = psi_map(chi, ref({0, 1}), ref({2, 3}));
    REQUIRE(psi.size() == 2);
    CHECK(psi.at(ref({0})) == PsiImage{{ref({2}), ref({3})}, {1, 0}});
    CHECK(psi.at(ref({1})) == PsiImage{{ref({2}), ref({3})}, {0, 0}});

    const auto right = psi_map(chi, ref({0, 1}), ref({2, 3}), Side::right);
    CHECK(right.at(ref({2})) == PsiImage{{ref({0}), ref({1})}, {1, 0}});
    CHECK(right.at(ref({3})) == PsiImage{{ref({0}), ref({1})}, {0, 0}});

    CHECK_FALSE(find_psi_mono(chi, ref({0, 1}), cherry, Side::left, ref({2, 3})));
    CHECK(find_psi_mono(chi, ref({0, 1}), point, Side::left, ref({2, 3})) == ref({0}));
}

TEST_CASE("psi images of constant colorings are constant")
{
    const PlaneTree host = perfect_tree(3);
    const PlaneTree pattern = parse_newick("((a,b),c)");
    const auto set = make_copy_set(host, pattern);
    const Coloring chi = Coloring::constant(set, 3, 2);
    const CopyRef a = ref({0, 1, 2, 3});
    const CopyRef b = ref({4, 5, 6, 7});
    const auto psi = psi_map(chi, a, b);
    CHECK(psi.size() == enumerate_copies(perfect_tree(2), cherry).size());
    for (const auto& [key, image] : psi) {
        CHECK(image.copies.size() == 4);
        for (Color c : image.colors)
            CHECK(c == 2);
        for (const auto& p2 : image.copies)
            CHECK(is_copy(host, join_copies(key, p2), pattern));
    }
    CHECK(find_psi_mono(chi, a, perfect_tree(2), Side::left, b) == a);
    CHECK(find_psi_mono(chi, b, cherry, Side::right, a) == ref({4, 5}));
}

TEST_CASE("root-split precondition")
{
    const auto set = make_copy_set(perfect_tree(3), cherry);
    const Coloring chi = Coloring::constant(set, 2, 0);
    CHECK_NOTHROW(check_root_split(chi, ref({0, 1}), ref({2, 3})));
    CHECK_NOTHROW(check_root_split(chi, ref({0, 2}), ref({5, 7})));
    CHECK_THROWS_WITH_AS(psi_map(chi, ref({0, 2}), ref({1, 3})), doctest::Contains("not root-split"), DomainError);
    CHECK_THROWS_WITH_AS(psi_map(chi, ref({0, 1}), ref({1, 2})), doctest::Contains("not root-split"), DomainError);
    CHECK_THROWS_WITH_AS(psi_map(chi, ref({2, 3}), ref({0, 1})), doctest::Contains("not root-split"), DomainError);

    const Coloring leaves = Coloring::constant(make_copy_set(perfect_tree(2), point), 2, 0);
    CHECK_THROWS_AS(psi_map(leaves, ref({0, 1}), ref({2, 3})), DomainError);
}
