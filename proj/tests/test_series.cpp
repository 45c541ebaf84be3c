#include "tamari/series.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tamari;

namespace {
SparsePoly x(int e = 1) { return SparsePoly::marker(Marker::x, e); }
} // namespace

TEST_CASE("sparse polynomial arithmetic") {
    SparsePoly p = x(2) + SparsePoly::constant(3) * x(1) - SparsePoly::constant(1);
    CHECK(p.to_string() == "x^2 + 3*x - 1");
    CHECK((p * p).coeff_of(Marker::x, 2).constant_value() == 7); // 9 - 2
    CHECK(p.eval_at_one(Marker::x).constant_value() == 3);
    CHECK(p.degree(Marker::x) == 2);
    CHECK(SparsePoly().is_zero());
    CHECK((p - p).is_zero());
    CHECK(p.pow(0) == SparsePoly::constant(1));
}

TEST_CASE("exact division") {
    SparsePoly num = x(2) - SparsePoly::constant(1);
    SparsePoly den = x(1) - SparsePoly::constant(1);
    CHECK(num.exact_div(den).to_string() == "x + 1");
    CHECK_THROWS_AS((x(2) + SparsePoly::constant(1)).exact_div(den), std::logic_error);
    CHECK_THROWS_AS(num.exact_div(SparsePoly()), std::invalid_argument);
}

TEST_CASE("divided differences") {
    // Delta(x^3) = x^2 + x + 1.
    CHECK(delta(x(3)).to_string() == "x^2 + x + 1");
    CHECK(delta(SparsePoly::constant(5)).is_zero());
    // Delta_q(x^2) = (x^2 q^2 - 1)/(xq - 1) = xq + 1, and q = 1 recovers Delta.
    SparsePoly dq = delta_q(x(2));
    CHECK(dq == SparsePoly::term(1, {1, 1, 0, 0}) + SparsePoly::constant(1));
    for (int e = 1; e <= 4; ++e) CHECK(delta_q(x(e)).eval_at_one(Marker::q) == delta(x(e)));
}

TEST_CASE("series arithmetic") {
    TSeries t = series_t(5);
    TSeries geom = (TSeries::one(5) - t).inverse();
    for (int n = 0; n < 5; ++n) CHECK(geom.coeff(n) == SparsePoly::constant(1));
    CHECK(TSeries::divide(geom, geom) == TSeries::one(5));
    CHECK((t * t).valuation() == 2);
    CHECK(t.shift(2).valuation() == 3);
    CHECK_THROWS_AS(TSeries::divide(TSeries::one(5), t), std::invalid_argument);
    CHECK(t.pow(3) == t * t * t);
}

TEST_CASE("series printing format") {
    TSeries s(3);
    s.set_coeff(1, x(2));
    s.set_coeff(2, SparsePoly::constant(Rat(1, 2)) * x(1));
    CHECK(s.to_string() == "t^1: x^2\nt^2: 1/2*x\n");
}

TEST_CASE("greedy equation solution") {
    // m = 2: I = t x^2 + t^2 x^2 (3x^2+2x+1) + ...
    TSeries i = solve_greedy(2, 4);
    CHECK(i.coeff(1) == x(2));
    CHECK(i.coeff(2) == x(2) * (SparsePoly::constant(3) * x(2) +
                                SparsePoly::constant(2) * x(1) + SparsePoly::constant(1)));
    CHECK(i.coeff(2).eval_at_one(Marker::x).constant_value() == 6);
    CHECK(i.coeff(3).eval_at_one(Marker::x).constant_value() == 54);
    // m = 1 spot values 1, 3, 12, 56.
    TSeries i1 = solve_greedy(1, 5);
    Rat counts[] = {0, 1, 3, 12, 56};
    for (int n = 1; n <= 4; ++n)
        CHECK(i1.coeff(n).eval_at_one(Marker::x).constant_value() == counts[n]);
}

TEST_CASE("greedy system consistency") {
    for (int m = 1; m <= 3; ++m) {
        auto sys = solve_greedy_system(m, 6);
        REQUIRE(static_cast<int>(sys.size()) == m + 2);
        CHECK(sys[0] == series_t(6) * SparsePoly::marker(Marker::x, m));
        CHECK(sys[static_cast<std::size_t>(m) + 1] == solve_greedy(m, 6));
    }
}

TEST_CASE("ordinary system") {
    auto sys = solve_ordinary_system(1, 6);
    TSeries ibar = sys.back();
    Rat counts[] = {0, 1, 3, 13, 68, 399};
    for (int n = 1; n <= 5; ++n)
        CHECK(ibar.coeff(n).eval_at_one(Marker::x).constant_value() == counts[n]);
    auto sys2 = solve_ordinary_system(2, 4);
    CHECK(sys2.back().coeff(3).eval_at_one(Marker::x).constant_value() == 58);
    // The defining recursion holds for the solved series.
    const SparsePoly xm1 = x(1) - SparsePoly::constant(1);
    for (int i = 1; i <= 2; ++i) {
        TSeries lhs = (sys[static_cast<std::size_t>(i)] -
                       sys[static_cast<std::size_t>(i) - 1]) *
                      xm1;
        TSeries rhs(6);
        for (int n = 0; n < 6; ++n) {
            const SparsePoly& c = sys[static_cast<std::size_t>(i)].coeff(n);
            rhs.set_coeff(n, x(1) * c - x(2 - i) * c.eval_at_one(Marker::x));
        }
        CHECK(lhs == sys[1] * rhs);
    }
}

TEST_CASE("contacts equation") {
    TSeries t2 = solve_contacts(2, 4);
    CHECK(t2.coeff(0) == x(1));
    CHECK(t2.coeff(3) == SparsePoly::constant(12) * x(4) + SparsePoly::constant(23) * x(3) +
                             SparsePoly::constant(23) * x(2));
    CHECK(t2.coeff(3).eval_at_one(Marker::x).constant_value() == 58);
}

TEST_CASE("constellation equation") {
    // C = 1 + tx + t^2(3x^2+3x) + t^3(12x^3+20x^2+22x) + ... for m = 2.
    TSeries c = solve_constellations(2, 4);
    CHECK(c.coeff(0) == SparsePoly::constant(1));
    CHECK(c.coeff(1) == x(1));
    CHECK(c.coeff(2) == SparsePoly::constant(3) * x(2) + SparsePoly::constant(3) * x(1));
    CHECK(c.coeff(3) == SparsePoly::constant(12) * x(3) +
                            SparsePoly::constant(20) * x(2) + SparsePoly::constant(22) * x(1));
    // C(1) = 1 + I(1) coefficientwise.
    TSeries i = solve_greedy(2, 4);
    CHECK(c.eval_at_one(Marker::x) ==
          TSeries::one(4) + i.eval_at_one(Marker::x));
}

TEST_CASE("q-analogue specializes at q = 1") {
    for (int m = 1; m <= 2; ++m) {
        TSeries iq = solve_greedy_q(m, 5);
        CHECK(iq.eval_at_one(Marker::q) == solve_greedy(m, 5));
        // q marks a genuine statistic: some coefficient depends on q.
        CHECK(iq.coeff(3).depends_on(Marker::q));
    }
}
