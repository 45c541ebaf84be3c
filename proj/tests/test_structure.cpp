#include "tamari/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tamari;

namespace {
void require_pass(const VerifyReport& rep) {
    INFO(rep.to_text());
    CHECK(rep.all_pass());
}
} // namespace

TEST_CASE("closed formulas vs enumeration") {
    require_pass(verify_thm11(1, 5));
    require_pass(verify_thm11(2, 4));
    require_pass(verify_eq11(1, 5));
    require_pass(verify_eq11(2, 4));
}

TEST_CASE("labelled counts vs enumeration") {
    require_pass(verify_labelled(1, 5));
    require_pass(verify_labelled(2, 3));
}

TEST_CASE("series suites vs enumeration") {
    for (int m = 1; m <= 2; ++m) {
        int n = m == 1 ? 5 : 4;
        require_pass(verify_series_greedy(m, n));
        require_pass(verify_series_ordinary(m, n));
        require_pass(verify_series_contacts(m, n));
        require_pass(verify_series_constellations(m, n));
        require_pass(verify_series_greedy_q(m, n));
    }
}

TEST_CASE("monoid structure") {
    require_pass(verify_monoid(1, 5));
    require_pass(verify_monoid(2, 4));
}

TEST_CASE("cover compatibility with the star product") {
    require_pass(verify_cover_compat(1, 4));
    require_pass(verify_cover_compat(2, 3));
}

TEST_CASE("peak deletion lemma") {
    require_pass(verify_peak_delete(1, 5));
    require_pass(verify_peak_delete(2, 4));
}

TEST_CASE("phi and psi bijections") {
    require_pass(verify_bijections(1, 5));
    require_pass(verify_bijections(2, 4));
}

TEST_CASE("embedding into the m = 1 poset") {
    require_pass(verify_prop21(2, 3));
    require_pass(verify_prop21(3, 2));
}

TEST_CASE("figure 3 upper ideal") {
    require_pass(verify_fig3());
}
