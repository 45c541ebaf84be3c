#include "tamari/dyck_word.hpp"
#include "tamari/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tamari;

TEST_CASE("word validation") {
    CHECK(is_valid(1, "10"));
    CHECK(is_valid(1, "1100"));
    CHECK(is_valid(2, "100100"));
    CHECK_FALSE(is_valid(1, "01"));      // dips below the axis
    CHECK_FALSE(is_valid(1, "110"));     // does not end at height 0
    CHECK_FALSE(is_valid(2, "1100"));    // wrong down-step count for m = 2
    CHECK_FALSE(is_valid(1, "1a00"));    // bad alphabet
    CHECK(is_valid(1, ""));              // the empty path is valid
    CHECK_THROWS_AS(DyckWord::from_string(1, "01"), std::invalid_argument);
    CHECK_THROWS_AS(DyckWord(0), std::invalid_argument);
}

TEST_CASE("unit and basic accessors") {
    DyckWord u = DyckWord::unit(3);
    CHECK(u.to_string() == "1000");
    CHECK(u.size() == 1);
    CHECK(u.steps() == 4);
    DyckWord w = DyckWord::from_string(2, "101000");
    CHECK(w.size() == 2);
    CHECK(w.heights() == std::vector<int>{0, 2, 1, 3, 2, 1, 0});
    CHECK(DyckWord(2).empty());
}

TEST_CASE("enumeration counts are Fuss-Catalan") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n)
            CHECK(Int(enumerate_paths(m, n).size()) == fuss_catalan(m, n));
    CHECK(enumerate_paths(2, 2).size() == 3);
    CHECK(enumerate_paths(1, 0).size() == 1); // the empty path
}

TEST_CASE("enumeration is lexicographic and capped") {
    auto paths = enumerate_paths(1, 3);
    for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1] < paths[i]);
    CHECK(paths.front().to_string() == "101010");
    CHECK(paths.back().to_string() == "111000");
    CHECK_THROWS_AS(enumerate_paths(1, 6, 10), EnumerationCapExceeded);
}

TEST_CASE("path statistics") {
    auto s = stats(DyckWord::from_string(2, "110100100000"));
    CHECK(s.final_descent == 5);
    CHECK(s.contacts == 0);
    CHECK(s.first_ascent == 2);
    CHECK(s.ascent_profile == std::map<int, int>{{1, 2}, {2, 1}});
    CHECK(s.is_prime);

    auto t = stats(DyckWord::from_string(1, "101100"));
    CHECK(t.final_descent == 2);
    CHECK(t.contacts == 1);
    CHECK(t.first_ascent == 1);
    CHECK_FALSE(t.is_prime);

    CHECK(stats(DyckWord::unit(2)).final_descent == 2);
}

TEST_CASE("decompose and compose round-trip") {
    // w = 1 (w1 0)(w2 0) w3 with empty and nonempty parts, m = 2.
    DyckWord w = DyckWord::from_string(2, "110010000");
    auto parts = decompose(w);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].to_string() == "100100");
    CHECK(parts[1].to_string() == "");
    CHECK(parts[2].to_string() == "");
    CHECK(compose(2, parts) == w);
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& v : enumerate_paths(m, n)) CHECK(compose(m, decompose(v)) == v);
}

TEST_CASE("star product") {
    DyckWord a = DyckWord::from_string(2, "110010000");
    DyckWord b = DyckWord::from_string(2, "110000");
    CHECK(star(a, b).to_string() == "110011000000");
    DyckWord u = DyckWord::unit(2);
    CHECK(star(a, u) == a);
    CHECK(star(u, a) == a);
    // Associativity on a small sample.
    for (const auto& x : enumerate_paths(1, 2))
        for (const auto& y : enumerate_paths(1, 2))
            for (const auto& z : enumerate_paths(1, 2))
                CHECK(star(star(x, y), z) == star(x, star(y, z)));
}

TEST_CASE("factorize sizes and round-trip") {
    DyckWord w = DyckWord::from_string(2, "110011000000");
    auto gens = factorize(w);
    int size_sum = 1;
    for (const auto& g : gens) size_sum += g.size() - 1;
    CHECK(size_sum == w.size());
    DyckWord acc = DyckWord::unit(2);
    for (const auto& g : gens) acc = star(acc, g);
    CHECK(acc == w);
    CHECK(factorize(DyckWord::unit(2)) == std::vector<DyckWord>{DyckWord::unit(2)});
}

TEST_CASE("embed unit steps") {
    CHECK(embed_unit_steps(DyckWord::from_string(2, "100100")).to_string() == "11001100");
    CHECK(embed_unit_steps(DyckWord::unit(3)).to_string() == "111000");
    for (const auto& w : enumerate_paths(2, 3)) {
        DyckWord e = embed_unit_steps(w);
        CHECK(e.m() == 1);
        CHECK(e.size() == 2 * w.size());
        for (auto [len, mult] : stats(e).ascent_profile) CHECK(len % 2 == 0);
    }
}

TEST_CASE("concat and prime suffix split") {
    DyckWord w = DyckWord::from_string(1, "101100");
    auto [head, prime] = prime_suffix_split(w);
    CHECK(head.to_string() == "10");
    CHECK(prime.to_string() == "1100");
    CHECK(concat(head, prime) == w);
    CHECK(stats(prime).is_prime);
    for (int n = 1; n <= 5; ++n)
        for (const auto& v : enumerate_paths(2, n)) {
            auto [h, p] = prime_suffix_split(v);
            CHECK(concat(h, p) == v);
            CHECK(stats(p).is_prime);
        }
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(require_integral(Rat(1, 2), "test"), std::logic_error);
    CHECK(require_integral(Rat(10, 2), "test") == 5);
}
