#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ramsey;

namespace {

const PlaneTree cherry = perfect_tree(1);
const PlaneTree point = PlaneTree::leaf();

} // namespace

TEST_CASE("triple structure JSON")
{
    const TripleStructure g = structure_of(parse_newick("((a,b),c)"));
    CHECK(to_json(g).dump() == R"j({"domain":["a","b","c"],"triples":[["a","b","c"],["b","a","c"]]})j");
    CHECK(triple_structure_from_json(to_json(g)) == g);

    for (int n = 1; n <= 6; ++n)
        for (const auto& t : all_plane_trees(n)) {
            const TripleStructure s = structure_of(t);
            CHECK(triple_structure_from_json(parse_json(to_json(s).dump())) == s);
        }

    CHECK_THROWS_AS(triple_structure_from_json(parse_json(R"j({"domain":["a"]})j")), DomainError);
    CHECK_THROWS_AS(triple_structure_from_json(parse_json(R"j({"domain":["a","a"],"triples":[]})j")), DomainError);
    CHECK_THROWS_AS(triple_structure_from_json(parse_json(R"j({"domain":["a","b","c"],"triples":[["a","b","d"]]})j")),
                    DomainError);
    CHECK_THROWS_AS(triple_structure_from_json(parse_json(R"j({"domain":["a","b","c"],"triples":[["a","b"]]})j")),
                    DomainError);
    CHECK_THROWS_AS(triple_structure_from_json(parse_json(R"j([1,2])j")), DomainError);
}

TEST_CASE("coloring JSON")
{
    const auto set = make_copy_set(perfect_tree(2), cherry);
    const Coloring chi(set, 3, {0, 1, 2, 0, 1, 2});
    const Json j = to_json(chi);
    CHECK(j.dump() ==
          R"j({"host":"((,),(,))","pattern":"(,)","k":3,"assignment":[{"copy":[0,1],"color":0},{"copy":[0,2],"color":1},)j"
          R"j({"copy":[0,3],"color":2},{"copy":[1,2],"color":0},{"copy":[1,3],"color":1},{"copy":[2,3],"color":2}]})j");
    CHECK(coloring_from_json(parse_json(j.dump())) == chi);

    // Assignment order in the input does not matter.
    Json shuffled = j;
    std::reverse(shuffled["assignment"].begin(), shuffled["assignment"].end());
    CHECK(coloring_from_json(shuffled) == chi);

    SUBCASE("totality is mandatory")
    {
        Json missing = j;
        missing["assignment"].erase(missing["assignment"].begin() + 2);
        CHECK_THROWS_WITH_AS(coloring_from_json(missing), doctest::Contains("not total"), DomainError);
    }
    SUBCASE("duplicates are rejected")
    {
        Json twice = j;
        twice["assignment"].push_back(j["assignment"][0]);
        CHECK_THROWS_WITH_AS(coloring_from_json(twice), doctest::Contains("twice"), DomainError);
    }
    SUBCASE("non-copies are rejected")
    {
        Json wrong = j;
        wrong["assignment"][0]["copy"] = {0, 1, 2};
        CHECK_THROWS_AS(coloring_from_json(wrong), DomainError);
        wrong["assignment"][0]["copy"] = {0, 9};
        CHECK_THROWS_AS(coloring_from_json(wrong), DomainError);
    }
    SUBCASE("colors must be in range")
    {
        Json wide = j;
        wide["assignment"][0]["color"] = 3;
        CHECK_THROWS_AS(coloring_from_json(wide), DomainError);
        wide["assignment"][0]["color"] = "red";
        CHECK_THROWS_AS(coloring_from_json(wide), DomainError);
    }
    SUBCASE("trees are parsed")
    {
        Json bad = j;
        bad["host"] = "((,),";
        CHECK_THROWS_AS(coloring_from_json(bad), ParseError);
    }
}

TEST_CASE("verdict JSON")
{
    const ArrowVerdict fails = check_arrow({cherry, cherry, point, 2, {}, Exec::serial});
    const Json j = to_json(fails, false);
    CHECK(j["verdict"] == "fails");
    CHECK(j["millis"] == 0);
    CHECK(coloring_from_json(j["witness"]) == *fails.witness);
    CHECK(j.dump().rfind(R"j({"verdict":"fails","witness":{"host":"(,)","pattern":"","k":2,)j", 0) == 0);

    const ArrowVerdict holds = check_arrow({perfect_tree(2), cherry, point, 2, {}, Exec::serial});
    CHECK(to_json(holds, false)["witness"].is_null());
    CHECK(to_json(holds, false).dump() == to_json(holds, false).dump());
}

TEST_CASE("chain JSON")
{
    const ReductionChain chain({cherry, perfect_tree(2)}, point, 2);
    const Json j = to_json(chain);
    CHECK(j.dump() == R"j({"trees":["(,)","((,),(,))"],"pattern":"","k":2})j");
    const ReductionChain back = chain_from_json(parse_json(j.dump()));
    CHECK(back.k() == 2);
    CHECK(iso(back.top(), perfect_tree(2)));
    CHECK(iso(back.pattern(), point));

    CHECK_THROWS_AS(chain_from_json(parse_json(R"j({"trees":["(,)"],"pattern":"","k":2})j")), DomainError);
    CHECK_THROWS_AS(chain_from_json(parse_json(R"j({"trees":"(,)","pattern":"","k":2})j")), DomainError);
    CHECK_THROWS_AS(chain_from_json(parse_json(R"j({"trees":["(,)","(,"],"pattern":"","k":2})j")), ParseError);
}

TEST_CASE("mono copy JSON")
{
    CHECK(to_json(MonoCopy{CopyRef{{0, 2}}, 0}).dump() == R"j({"copy":[0,2],"color":0})j");
}

TEST_CASE("JSON syntax errors carry offsets")
{
    try {
        parse_json(R"j({"a": [1, 2,]})j");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 13);
    }
    CHECK_THROWS_AS(parse_json(""), ParseError);
}
