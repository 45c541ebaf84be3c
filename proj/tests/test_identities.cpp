#include "tamari/identities.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tamari;

TEST_CASE("R polynomials") {
    // R^a_l(u) = sum_{e<=a} C(e+l, e) u^e.
    CHECK(R_poly(2, 0).to_string() == "u^2 + u + 1");
    CHECK(R_poly(2, 1).to_string() == "3*u^2 + 2*u + 1");
    CHECK(R_poly(2, -1) == SparsePoly::constant(1));
    CHECK(R_poly(-1, 3).is_zero());
    CHECK(R_poly_reversed(2, 1, 5).to_string() == "u^5 + 2*u^4 + 3*u^3");
    CHECK(R_poly_reversed(2, -1, 5) == u_pow(5));
    CHECK_THROWS_AS(R_poly(1, -2), std::invalid_argument);
    CHECK_THROWS_AS(R_poly_reversed(3, 0, 2), std::invalid_argument);
}

TEST_CASE("nabla operator") {
    // Hand checks of nabla_m H = u (H - u^{m+1} H(1)) / (u - 1).
    CHECK(nabla(2, u_pow(2)) == -u_pow(3));
    CHECK(nabla(2, SparsePoly::constant(1)) ==
          -(u_pow(3) + u_pow(2) + u_pow(1)));
    CHECK(nabla(1, u_pow(2)).is_zero()); // fixed point at the top power
    CHECK(nabla(2, u_pow(5)) == u_pow(5) + u_pow(4));
}

TEST_CASE("H polynomials") {
    for (int m = 1; m <= 3; ++m) {
        for (int i = 0; i <= m + 1; ++i) {
            BivarPoly h = H_poly(m, i);
            // The z-free part of H_i is exactly u^{i+1} (u^{m+2} at the top).
            CHECK(h.coeff_of(Marker::z, 0) == u_pow(i == m + 1 ? m + 2 : i + 1));
        }
    }
    CHECK_THROWS_AS(H_poly(2, 4), std::invalid_argument);
}

TEST_CASE("lemma A.1 grids pass") {
    for (int m = 1; m <= 3; ++m) CHECK(verify_lemmaA1(m, 4, 4, 4).all_pass());
}

TEST_CASE("proposition A.2 passes") {
    for (int m = 1; m <= 5; ++m) CHECK(verify_propA2(m).all_pass());
}

TEST_CASE("negative controls") {
    // Perturbing one coefficient of R breaks the first identity.
    int m = 2, a = 2, l = 1;
    BivarPoly wrong = R_poly(a, l) + u_pow(1);
    BivarPoly lhs = nabla(m, u_pow(m + 1 - a) * wrong);
    BivarPoly rhs = -(u_pow(m + 2 - a) * R_poly(a - 1, l + 1));
    CHECK(lhs != rhs);
    // u H_0 alone (without the z nabla term) is not H_1.
    CHECK(u_pow(1) * H_poly(m, 0) != H_poly(m, 1));
    // The uncorrected second identity genuinely fails at b = 3, l = 0.
    int b = 3;
    const int top = m + 0 + b; // a = 0
    BivarPoly l2 = nabla(m, R_poly_reversed(0, 0, top));
    CHECK(l2 != R_poly_reversed(b - 2, 1, top));
}
