#include "tamari/closedform.hpp"
#include "tamari/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tamari;

TEST_CASE("greedy closed formula spot values") {
    Int m1[] = {0, 1, 3, 12, 56, 288, 1584};
    for (int n = 1; n <= 6; ++n) CHECK(greedy_count(1, n) == m1[n]);
    CHECK(greedy_count(2, 2) == 6); // Example 1.3
    CHECK(greedy_count(2, 3) == 54);
    CHECK_THROWS_AS(greedy_count(0, 1), std::invalid_argument);
}

TEST_CASE("ordinary closed formula spot values") {
    Int m1[] = {0, 1, 3, 13, 68, 399};
    for (int n = 1; n <= 5; ++n) CHECK(ordinary_count(1, n) == m1[n]);
    CHECK(ordinary_count(2, 2) == 6);
    CHECK(ordinary_count(2, 3) == 58);
}

TEST_CASE("labelled formula spot values") {
    CHECK(labelled_ordinary_count(1, 1) == 1);  // 2^1 * 2^{-1}
    CHECK(labelled_ordinary_count(1, 2) == 4);
    CHECK(labelled_ordinary_count(1, 3) == 2 * 2 * 2 * 4);
    CHECK(labelled_ordinary_count(2, 2) == 9 * 5);
}

TEST_CASE("profiles") {
    auto ps = profiles_of_size(4);
    CHECK(ps.size() == 5); // partitions of 4
    for (const auto& p : ps) CHECK(profile_size(p) == 4);
    CHECK(profile_to_string(Profile{{1, 2}, {3, 1}}) == "1^2 3^1");
}

TEST_CASE("constellation profile counts sum to the full count") {
    // Summing the profile formula over all profiles of size n must give the
    // greedy interval count (both equal the number of constellations).
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n) {
            Int total = 0;
            for (const auto& p : profiles_of_size(n))
                total += constellation_profile_count(m, p);
            CHECK(total == greedy_count(m, n));
        }
}

TEST_CASE("parametrization invariants") {
    for (int m = 1; m <= 3; ++m) {
        auto p = solve_param_greedy(m, 12); // throws on violated invariants
        CHECK(p.Z.coeff(1) == SparsePoly::constant(1));
        auto q = solve_param_ordinary(m, 8);
        CHECK(q.Z.coeff(1) == SparsePoly::constant(1));
        // Ub = x + xt((x^{m+1}-1)/(x-1) - (m+2)) + O(t^2).
        SparsePoly x = SparsePoly::marker(Marker::x);
        SparsePoly expect;
        for (int e = 0; e <= m; ++e) expect += SparsePoly::marker(Marker::x, e);
        expect -= SparsePoly::constant(m + 2);
        CHECK(q.U.coeff(1) == x * expect);
    }
}

TEST_CASE("theorem 4.1 against the series engine") {
    for (int m = 1; m <= 3; ++m) CHECK(verify_thm41(m, 8).all_pass());
}

TEST_CASE("theorem 5.4 against the series engine") {
    for (int m = 1; m <= 2; ++m) CHECK(verify_thm54(m, 7).all_pass());
}

TEST_CASE("conjecture marginals at small scale") {
    CHECK(check_conjecture(1, 4).all_pass());
    CHECK(check_conjecture(2, 3).all_pass());
}
