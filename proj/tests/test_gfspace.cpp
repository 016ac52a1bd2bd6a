#include "sdeg/gfspace.hpp"

#include "sdeg/qcount.hpp"

#include <doctest.h>

using namespace sdeg;
using namespace sdeg::gf;

namespace {

FpVector vec(std::uint32_t p, std::vector<std::uint32_t> coords) {
    return FpVector{p, std::move(coords)};
}

}  // namespace

TEST_CASE("canonicalize") {
    SUBCASE("empty span") {
        const auto s = canonicalize(3, 2, {});
        CHECK(s.dim() == 0);
        CHECK(s.ambient == 2);
    }
    SUBCASE("dependent vectors collapse") {
        const auto s = canonicalize(5, 2, {vec(5, {1, 2}), vec(5, {2, 4})});
        CHECK(s.dim() == 1);
        CHECK(s.basis == std::vector<std::vector<std::uint32_t>>{{1, 2}});
    }
    SUBCASE("third vector is the sum of the first two") {
        const auto s =
            canonicalize(3, 3, {vec(3, {1, 0, 1}), vec(3, {0, 1, 1}), vec(3, {1, 1, 2})});
        CHECK(s.dim() == 2);
        CHECK(s.basis == std::vector<std::vector<std::uint32_t>>{{1, 0, 1}, {0, 1, 1}});
        // exhaustive membership: the span has 9 vectors over F_3
        int members = 0;
        for (std::uint32_t a = 0; a < 3; ++a)
            for (std::uint32_t b = 0; b < 3; ++b)
                for (std::uint32_t c = 0; c < 3; ++c)
                    if (s.contains(vec(3, {a, b, c}))) ++members;
        CHECK(members == 9);
    }
    SUBCASE("mismatched ambient") {
        CHECK_THROWS_AS(canonicalize(3, 2, {vec(3, {1, 2, 0})}), std::invalid_argument);
        CHECK_THROWS_AS(canonicalize(3, 2, {vec(5, {1, 2})}), std::invalid_argument);
    }
}

TEST_CASE("enumerate_subspaces") {
    CHECK(enumerate_subspaces(3, 2, 1).size() == 4);
    const auto zero = enumerate_subspaces(3, 2, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].dim() == 0);
    CHECK(enumerate_subspaces(3, 4, 2).size() == 130);
    CHECK_THROWS_AS(enumerate_subspaces(3, 2, 3), std::invalid_argument);
}

TEST_CASE("enumeration is deterministic and matches the Gaussian coefficient") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int m = 0; m <= 4; ++m)
            for (int k = 0; k <= m; ++k) {
                const auto a = enumerate_subspaces(p, m, k);
                const auto b = enumerate_subspaces(p, m, k);
                CHECK(a == b);
                CHECK(Int(a.size()) == qcount::gaussian_rec(m, Int(p), k));
            }
}

TEST_CASE("sum and intersect") {
    SUBCASE("distinct lines of F_3^2") {
        const auto t = canonicalize(3, 2, {vec(3, {1, 0})});
        const auto u = canonicalize(3, 2, {vec(3, {0, 1})});
        CHECK(sum(t, u).dim() == 2);
        CHECK(intersect(t, u).dim() == 0);
    }
    SUBCASE("idempotence") {
        const auto t = canonicalize(3, 2, {vec(3, {1, 2})});
        CHECK(sum(t, t) == t);
        CHECK(intersect(t, t) == t);
    }
    SUBCASE("planes of F_3^3") {
        const auto t = canonicalize(3, 3, {vec(3, {1, 0, 0}), vec(3, {0, 1, 0})});
        const auto u = canonicalize(3, 3, {vec(3, {0, 1, 0}), vec(3, {0, 0, 1})});
        const auto meet = intersect(t, u);
        CHECK(meet == canonicalize(3, 3, {vec(3, {0, 1, 0})}));
        CHECK(sum(t, u).dim() == 3);
        // brute-force membership check of the intersection
        for (std::uint32_t a = 0; a < 3; ++a)
            for (std::uint32_t b = 0; b < 3; ++b)
                for (std::uint32_t c = 0; c < 3; ++c) {
                    const auto v = vec(3, {a, b, c});
                    CHECK(meet.contains(v) == (t.contains(v) && u.contains(v)));
                }
    }
    SUBCASE("mismatched ambient") {
        const auto t = canonicalize(3, 2, {vec(3, {1, 0})});
        const auto u = canonicalize(3, 3, {vec(3, {1, 0, 0})});
        CHECK_THROWS_AS(sum(t, u), std::invalid_argument);
        CHECK_THROWS_AS(intersect(t, u), std::invalid_argument);
    }
}

TEST_CASE("coset_label") {
    const auto full = canonicalize(3, 2, {vec(3, {1, 0}), vec(3, {0, 1})});
    CHECK(coset_label(full, vec(3, {2, 1})) == vec(3, {0, 0}));

    const auto zero = canonicalize(3, 2, {});
    CHECK(coset_label(zero, vec(3, {2, 1})) == vec(3, {2, 1}));

    const auto t = canonicalize(3, 2, {vec(3, {1, 0})});
    const auto label = coset_label(t, vec(3, {2, 1}));
    CHECK(label == vec(3, {0, 1}));
    CHECK(t.contains(fp_sub(vec(3, {2, 1}), label)));
}

TEST_CASE("coset_label is constant exactly on cosets") {
    const auto t = canonicalize(3, 2, {vec(3, {1, 2})});
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b)
            for (std::uint32_t c = 0; c < 3; ++c)
                for (std::uint32_t d = 0; d < 3; ++d) {
                    const auto v = vec(3, {a, b});
                    const auto w = vec(3, {c, d});
                    const bool same = coset_label(t, v) == coset_label(t, w);
                    CHECK(same == t.contains(fp_sub(v, w)));
                }
}

TEST_CASE("pair_profile cells") {
    const auto prof = pair_profile(3, 2);
    CHECK(prof.counts[1][1][1] == 4);
    CHECK(prof.counts[1][1][0] == 12);
    CHECK(prof.counts[2][2][2] == 1);
    const auto prof3 = pair_profile(3, 3);
    CHECK(prof3.counts[1][2][1] == 52);
}

TEST_CASE("pair_profile agrees with exhaustive enumeration") {
    for (std::uint32_t p : {2u, 3u}) {
        for (int m = 0; m <= 3; ++m) {
            const auto closed = pair_profile(p, m);
            const auto brute = pair_profile_exhaustive(p, m);
            for (int s = 0; s <= m; ++s)
                for (int t = 0; t <= m; ++t)
                    for (int i = 0; i <= m; ++i)
                        CHECK(closed.counts[s][t][i] == brute.counts[s][t][i]);
        }
    }
}
