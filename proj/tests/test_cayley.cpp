#include "sdeg/cayley.hpp"

#include <doctest.h>

#include <nlohmann/json.hpp>

#include <algorithm>

using namespace sdeg;
using namespace sdeg::cayley;

TEST_CASE("elementary abelian groups") {
    const auto z2 = build_elementary_abelian(2, 1);
    CHECK(z2.order == 2);

    const auto z3sq = build_elementary_abelian(3, 2);
    CHECK(z3sq.order == 9);
    for (int a = 0; a < 9; ++a) {
        if (a == z3sq.identity) continue;
        // exponent p: a^3 = e
        CHECK(z3sq.mul(a, z3sq.mul(a, a)) == z3sq.identity);
    }

    CHECK(all_subgroups(build_elementary_abelian(5, 2)).size() == 8);
    CHECK(all_subgroups(z3sq).size() == 6);
    CHECK(all_subgroups(z2).size() == 2);
    CHECK_THROWS_AS(build_elementary_abelian(5, 4), std::invalid_argument);
}

TEST_CASE("find_r") {
    CHECK(find_r(3, 2) == 2);
    CHECK(find_r(7, 3) == 2);
    CHECK(find_r(5, 2) == 4);
    CHECK_THROWS_AS(find_r(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(find_r(7, 4), std::invalid_argument);
}

TEST_CASE("build_pgroup") {
    const auto s3 = build_pgroup(3, 2, 2);
    CHECK(s3.order == 6);
    const auto s3subs = all_subgroups(s3);
    CHECK(s3subs.size() == 6);
    std::vector<int> sizes;
    for (const auto& s : s3subs) sizes.push_back(s.size());
    CHECK(sizes == std::vector<int>{1, 2, 2, 2, 3, 6});

    CHECK(all_subgroups(build_pgroup(3, 3, 2)).size() == 28);
    CHECK(all_subgroups(build_pgroup(7, 2, 3)).size() == 10);

    CHECK_THROWS_AS(build_pgroup(5, 2, 4), std::invalid_argument);   // nonprime q
    CHECK_THROWS_AS(build_pgroup(3, 2, 3), std::invalid_argument);   // q = p
    CHECK_THROWS_AS(build_pgroup(2, 3, 2), std::invalid_argument);   // p even
    CHECK_THROWS_AS(build_pgroup(3, 12, 2), std::invalid_argument);  // over the cap
}

TEST_CASE("context 2-group families") {
    CHECK(all_subgroups(build_dihedral(8)).size() == 10);
    CHECK(all_subgroups(build_quaternion(8)).size() == 6);
    CHECK(sd_exact(build_dihedral(6)) == sd_exact(build_pgroup(3, 2, 2)));
    const auto sd16 = build_semidihedral(16);
    CHECK(sd16.order == 16);
    CHECK(sd_exact(sd16) < 1);
    CHECK_THROWS_AS(build_dihedral(7), std::invalid_argument);
    CHECK_THROWS_AS(build_quaternion(12), std::invalid_argument);
    CHECK_THROWS_AS(build_semidihedral(8), std::invalid_argument);
}

TEST_CASE("permutes") {
    const auto g = build_pgroup(3, 2, 2);
    const auto subs = all_subgroups(g);
    SUBCASE("reflexive and with normal subgroups") {
        for (const auto& a : subs) {
            CHECK(permutes(g, a, a));
            CHECK(permutes(g, a, subs.back()));  // whole group is normal
        }
    }
    SUBCASE("distinct order-2 subgroups of the order-6 group fail") {
        std::vector<SubgroupSet> twos;
        for (const auto& s : subs)
            if (s.size() == 2) twos.push_back(s);
        REQUIRE(twos.size() == 3);
        CHECK_FALSE(permutes(g, twos[0], twos[1]));
    }
    SUBCASE("HK = KH iff HK is a subgroup, and permutes is symmetric") {
        for (const auto& a : subs)
            for (const auto& b : subs) {
                CHECK(permutes(g, a, b) == product_is_subgroup(g, a, b));
                CHECK(permutes(g, a, b) == permutes(g, b, a));
            }
    }
}

TEST_CASE("sd_exact") {
    CHECK(sd_exact(build_elementary_abelian(3, 2)) == 1);
    CHECK(sd_exact(build_pgroup(3, 2, 2)) == Ratio(5, 6));
    CHECK(sd_exact(build_pgroup(3, 3, 2)) == Ratio(34, 49));
    CHECK(sd_exact(build_pgroup(3, 3, 2)) == Ratio(544, 784));
}

TEST_CASE("normal subgroups and commuting set sizes") {
    const auto g = build_pgroup(3, 3, 2);
    const auto subs = all_subgroups(g);
    CHECK(normal_subgroups(g, subs).size() == 7);

    for (const auto& k : subs) {
        if (k.size() == 2) {
            CHECK(commuting_set_size(g, subs, k) == 12);
            break;
        }
    }
    CHECK(commuting_set_size(g, subs, subs.back()) == Int(subs.size()));

    auto fake = make_subgroup_set(g.order, {g.identity, 1 % g.order});
    if (std::find(subs.begin(), subs.end(), fake) == subs.end())
        CHECK_THROWS_AS(commuting_set_size(g, subs, fake), std::invalid_argument);
}

TEST_CASE("Eq(3)-style consistency: sum of |C(K)| equals sd times |L|^2") {
    for (auto [p, n, q] : std::vector<std::tuple<std::uint32_t, int, std::uint32_t>>{
             {3, 2, 2}, {3, 3, 2}, {5, 2, 2}, {7, 2, 3}}) {
        const auto g = build_pgroup(p, n, q);
        const auto subs = all_subgroups(g);
        Int sum = 0;
        for (const auto& k : subs) sum += commuting_set_size(g, subs, k);
        CHECK(Ratio(sum, Int(subs.size()) * Int(subs.size())) == sd_exact(g, subs));
    }
}

TEST_CASE("JSON export shape") {
    const auto g = build_pgroup(3, 2, 2);
    const auto j = nlohmann::json::parse(to_json(g));
    CHECK(j["order"] == 6);
    CHECK(j["labels"].size() == 6);
    CHECK(j["table"].size() == 6);
    CHECK(j["table"][0].size() == 6);
}
