#include "tamari/export.hpp"
#include "tamari/poset.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

using namespace tamari;

namespace {
std::set<std::string> cover_strings(const std::vector<DyckWord>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.to_string());
    return out;
}
} // namespace

TEST_CASE("greedy and ordinary covers") {
    // m = 2: the greedy relation moves the valley's down step past the
    // longest following factor, the ordinary one past the shortest.
    CHECK(cover_strings(greedy_covers(DyckWord::from_string(2, "100100"))) ==
          std::set<std::string>{"101000"});
    CHECK(cover_strings(greedy_covers(DyckWord::from_string(2, "101000"))) ==
          std::set<std::string>{"110000"});
    CHECK(greedy_covers(DyckWord::from_string(2, "110000")).empty());
    CHECK(cover_strings(ordinary_covers(DyckWord::from_string(2, "100100"))) ==
          std::set<std::string>{"101000"});
    // m = 1: two valleys give two covers.
    CHECK(cover_strings(greedy_covers(DyckWord::from_string(1, "101010"))) ==
          std::set<std::string>{"110010", "101100"});
    // Longest vs shortest factor differ on 11010100 (two returns after the
    // first valley).
    DyckWord w = DyckWord::from_string(1, "11010100");
    CHECK(cover_strings(greedy_covers(w)) !=
          cover_strings(ordinary_covers(w)));
}

TEST_CASE("poset construction and interval counts") {
    CoverGraph g = build_poset(2, 2, Flavor::greedy);
    REQUIRE(g.nodes.size() == 3);
    Reachability reach(g);
    CHECK(reach.interval_count() == 6); // Example 1.3
    CHECK(Reachability(build_poset(2, 3, Flavor::greedy)).interval_count() == 54);
    CHECK(Reachability(build_poset(2, 3, Flavor::ordinary)).interval_count() == 58);
    CHECK_THROWS_AS(build_poset(1, 6, Flavor::greedy, 10), EnumerationCapExceeded);
}

TEST_CASE("reachability agrees with cover closure") {
    CoverGraph g = build_poset(1, 4, Flavor::greedy);
    Reachability reach(g);
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
        auto bits = reachable_from(g, v);
        for (int w = 0; w < static_cast<int>(g.nodes.size()); ++w)
            CHECK(reach.leq(v, w) ==
                  static_cast<bool>((bits[static_cast<std::size_t>(w) / 64] >> (w % 64)) & 1u));
    }
}

TEST_CASE("longest chains") {
    CoverGraph g = build_poset(2, 2, Flavor::greedy);
    DyckWord bot = DyckWord::from_string(2, "100100");
    DyckWord top = DyckWord::from_string(2, "110000");
    CHECK(longest_chain(g, bot, top) == 2);
    CHECK(longest_chain(g, bot, bot) == 0);
    CHECK_THROWS_AS(longest_chain(g, top, bot), std::invalid_argument);
    // q-histogram of D_{2,2}: x^2 + x^3 q + x^4 q^2 + x^3 + x^4 q + x^4.
    SparsePoly hist;
    Reachability reach(g);
    reach.for_each_interval([&](int v, int w) {
        int q = longest_chain(g, g.nodes[static_cast<std::size_t>(v)],
                              g.nodes[static_cast<std::size_t>(w)]);
        hist += SparsePoly::term(
            1, {stats(g.nodes[static_cast<std::size_t>(w)]).final_descent, q, 0, 0});
    });
    SparsePoly expected;
    expected += SparsePoly::term(1, {2, 0, 0, 0});
    expected += SparsePoly::term(1, {3, 0, 0, 0});
    expected += SparsePoly::term(1, {4, 0, 0, 0});
    expected += SparsePoly::term(1, {3, 1, 0, 0});
    expected += SparsePoly::term(1, {4, 1, 0, 0});
    expected += SparsePoly::term(1, {4, 2, 0, 0});
    CHECK(hist == expected);
}

TEST_CASE("classification") {
    // m = 2: 110000 = D(10^2, empty, empty) -> J_1, K-shape.
    auto c = classify(DyckWord::from_string(2, "110000"));
    CHECK(c.j_level == 1);
    CHECK(c.k_levels == std::set<int>{1});
    // 100100 = D(empty, empty, 10^2) -> J_3 with unit part: K_3.
    auto c2 = classify(DyckWord::from_string(2, "100100"));
    CHECK(c2.j_level == 3);
    CHECK(c2.k_levels == std::set<int>{3});
    // 101000 = D(empty, 10^2, empty) -> J_2.
    auto c3 = classify(DyckWord::from_string(2, "101000"));
    CHECK(c3.j_level == 2);
    CHECK(classify(DyckWord::unit(2)).j_level == 0);
    // Ordinary K-shape admits a nonunit last part ending in a single peak.
    CHECK(has_ordinary_k_shape(DyckWord::from_string(1, "1100")));
    CHECK(has_ordinary_k_shape(DyckWord::from_string(1, "101100")));
    CHECK_FALSE(has_ordinary_k_shape(DyckWord::from_string(1, "110100")));
}

TEST_CASE("peak surgery") {
    DyckWord w = DyckWord::from_string(2, "110000");
    CHECK(delete_last_peak(w).to_string() == "100");
    CHECK(insert_peak(DyckWord::from_string(2, "100"), 2).to_string() == "110000");
    CHECK(insert_peak(DyckWord::from_string(2, "100"), 0).to_string() == "100100");
    CHECK_THROWS_AS(insert_peak(DyckWord::from_string(2, "100"), 3), std::invalid_argument);
    for (const auto& v : enumerate_paths(2, 4)) {
        int d = stats(v).final_descent;
        for (int h = 0; h <= d; ++h) CHECK(delete_last_peak(insert_peak(v, h)) == v);
    }
}

TEST_CASE("labelled weight") {
    // 1100 (m=1): one ascent of length 2 -> 2!/2! = 1 labeling.
    CHECK(labelled_weight(DyckWord::from_string(1, "1100")) == 1);
    // 1010: two ascents of length 1 -> 2 labelings.
    CHECK(labelled_weight(DyckWord::from_string(1, "1010")) == 2);
    CHECK(labelled_weight(DyckWord::from_string(1, "101100")) == 3);
}

TEST_CASE("DOT export shape") {
    CoverGraph g = build_poset(1, 3, Flavor::greedy);
    std::ostringstream os;
    write_dot(os, g);
    std::string dot = os.str();
    CHECK(dot.find("digraph") != std::string::npos);
    // 5 nodes and 5 cover edges (Fig 2 right).
    std::size_t edges = 0;
    for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2))
        ++edges;
    CHECK(g.nodes.size() == 5);
    CHECK(edges == 5);
}

TEST_CASE("interval JSON stream") {
    CoverGraph g = build_poset(2, 2, Flavor::greedy);
    Reachability reach(g);
    std::ostringstream os;
    write_interval_json(os, g, reach);
    std::string out = os.str();
    std::size_t lines = 0;
    for (char ch : out)
        if (ch == '\n') ++lines;
    CHECK(lines == 6); // Example 1.3
    CHECK(out.find("\"m\":2") != std::string::npos);
    CHECK(out.find("\"word\":\"100100\"") != std::string::npos);
}
