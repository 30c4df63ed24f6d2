#include <catch2/catch_amalgamated.hpp>

#include <bicross/group.hpp>

using namespace bicross;

namespace {
Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }
}  // namespace

TEST_CASE("composition applies the left factor first") {
    // With objects acted on from the left of the permutation symbol,
    // (a*b)(i) = b(a(i)).
    Perm a = perm({1, 0, 2});  // (01)
    Perm b = perm({1, 2, 0});  // (012)
    Perm ab = perm_mul(a, b);
    CHECK(ab.map == std::vector<int>{2, 1, 0});  // (02)
}

TEST_CASE("closure of empty generator list is the trivial group") {
    auto g = group_from_permutations({});
    CHECK(g->order == 1);
    CHECK(g->labels[0] == "e");
}

TEST_CASE("S3 from a transposition and a 3-cycle") {
    auto g = group_from_permutations({perm({1, 0, 2}), perm({1, 2, 0})});
    REQUIRE(g->order == 6);
    CHECK(count_elements_of_order(*g, 2) == 3);
    CHECK(count_elements_of_order(*g, 3) == 2);
    CHECK(count_elements_of_order(*g, 1) == 1);
    g->validate();

    auto classes = conjugacy_classes(*g);
    REQUIRE(classes.size() == 3);
    std::vector<size_t> sizes;
    for (auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    CHECK(g->center().size() == 1);
    CHECK(g->exponent() == 6);
}

TEST_CASE("size cap raises a size-limit error") {
    CHECK_THROWS_AS(group_from_permutations({perm({1, 2, 3, 4, 0})}, 3), SizeLimitError);
}

TEST_CASE("inverse of inverse is identity map on elements") {
    auto g = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    for (int a = 0; a < g->order; ++a) CHECK(g->inv[g->inv[a]] == a);
}

TEST_CASE("conjugacy classes of a direct product count as pairs") {
    // S3 x S3 has 3*3 = 9 conjugacy classes.
    auto g = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    REQUIRE(g->order == 36);
    CHECK(conjugacy_classes(*g).size() == 9);
    CHECK(count_elements_of_order(*g, 2) == 15);
}

TEST_CASE("subgroups check closure and identity") {
    auto g = group_from_permutations({perm({1, 0, 2}), perm({1, 2, 0})});
    auto h = subgroup_generated(g, {1});
    CHECK(h.size() == g->element_order(1));
    CHECK_THROWS(subgroup_from_elements(g, {1}));  // not closed (misses identity/inverses)
    auto t = trivial_subgroup(g);
    CHECK(t.size() == 1);
    auto full = full_subgroup(g);
    CHECK(full.size() == 6);
    auto hg = h.as_group();
    hg->validate();
}

TEST_CASE("group from table finds identity and inverses") {
    // C3 written with identity at position 2 to exercise relabeling
    std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    auto g = group_from_table(t);
    CHECK(g->order == 3);
    CHECK(g->identity == 0);
    CHECK(g->element_order(1) == 3);
}

TEST_CASE("small generating set generates") {
    auto g = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    auto gens = small_generating_set(*g);
    CHECK(subgroup_generated(g, gens).size() == g->order);
    CHECK(gens.size() <= 3);
}
