#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "grain/coloring.hpp"

using namespace grain;

TEST_CASE("conflict graph edges match direct ball intersection") {
    for (int m = 2; m <= 5; ++m)
        for (int t = 1; t <= 2 && t < m; ++t) {
            ConfusabilityGraph g = build_confusability_graph(m, t);
            CHECK(g.vertex_count == 1 << m);
            ErrorModel model{ErrorKind::Mineral, t};
            for (int a = 0; a < g.vertex_count; ++a) {
                CHECK(!g.edge(a, a));
                for (int b = 0; b < g.vertex_count; ++b) {
                    CHECK(g.edge(a, b) == g.edge(b, a));
                    if (a != b)
                        CHECK(g.edge(a, b) ==
                              !balls_disjoint(static_cast<std::uint32_t>(a),
                                              static_cast<std::uint32_t>(b), m, model));
                }
            }
        }
}

TEST_CASE("graph construction refuses oversized work") {
    CHECK_THROWS_AS(build_confusability_graph(16, 8, 1000), cap_exceeded);
}

TEST_CASE("pair coloring groups the constant pairs") {
    Coloring c = pair_ternary_coloring();
    CHECK(c.m == 2);
    CHECK(c.color_count() == 3);
    CHECK(c.classes[0] == std::vector<std::uint32_t>{word_from_string("00"),
                                                     word_from_string("11")});
    CHECK(c.classes[1] == std::vector<std::uint32_t>{word_from_string("10")});
    CHECK(c.classes[2] == std::vector<std::uint32_t>{word_from_string("01")});
    CHECK(coloring_valid(c, build_confusability_graph(2, 1)));
}

TEST_CASE("published pair labels come from the class map") {
    CHECK(pair_ternary_symbol(word_from_string("00")) == 0);
    CHECK(pair_ternary_symbol(word_from_string("01")) == 1);
    CHECK(pair_ternary_symbol(word_from_string("10")) == 2);
    CHECK(pair_ternary_symbol(word_from_string("11")) == 0);
    Coloring c = pair_ternary_coloring();
    std::vector<int> map = pair_ternary_symbol_map();
    for (std::uint32_t v = 0; v < 4; ++v)
        CHECK(pair_ternary_symbol(v) == map[static_cast<std::size_t>(c.assignment[v])]);
}

TEST_CASE("weighted-sum colorings are valid with m+1 classes at every length") {
    for (int m = 2; m <= 8; ++m) {
        Coloring c = weighted_sum_coloring(m);
        CHECK(c.color_count() == m + 1);
        std::size_t total = 0;
        for (const auto& cls : c.classes) total += cls.size();
        CHECK(total == (std::size_t{1} << m));
        CHECK(coloring_valid(c, build_confusability_graph(m, 1)));
        // Sort convention: class sizes never increase.
        auto sizes = c.class_sizes();
        CHECK(std::is_sorted(sizes.rbegin(), sizes.rend()));
    }
}

TEST_CASE("weighted-sum class pairs every position weight with its negation") {
    // Length 2 weights are 1 2.
    CHECK(weighted_sum_class(word_from_string("00"), 2) == 0);
    CHECK(weighted_sum_class(word_from_string("10"), 2) == 1);
    CHECK(weighted_sum_class(word_from_string("01"), 2) == 2);
    CHECK(weighted_sum_class(word_from_string("11"), 2) == 0);
    // Length 3 weights are 2 1 3: the self-paired residue leads.
    CHECK(weighted_sum_class(word_from_string("100"), 3) == 2);
    CHECK(weighted_sum_class(word_from_string("001"), 3) == 3);
    CHECK(weighted_sum_class(word_from_string("011"), 3) == 0);
    // Length 6 weights are 1 6 2 5 3 4.
    CHECK(weighted_sum_class(word_from_string("110100"), 6) == 5);
    CHECK(weighted_sum_class(word_from_string("000001"), 6) == 4);
}

TEST_CASE("low-weight words form a clique, pinning the color count to m+1") {
    for (int m = 2; m <= 8; ++m) {
        auto clique = low_weight_clique(m);
        CHECK(clique.size() == static_cast<std::size_t>(m) + 1);
        ConfusabilityGraph g = build_confusability_graph(m, 1);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(g.edge(static_cast<int>(clique[i]), static_cast<int>(clique[j])));
    }
}

TEST_CASE("relabeling the weighted classes keeps the partition and moves indices") {
    Coloring c = permuted_weighted_coloring(2, {0, 2, 1});
    CHECK(c.classes[0] == std::vector<std::uint32_t>{word_from_string("00"),
                                                     word_from_string("11")});
    CHECK(c.classes[1] == std::vector<std::uint32_t>{word_from_string("01")});
    CHECK(c.classes[2] == std::vector<std::uint32_t>{word_from_string("10")});
    for (std::uint32_t v = 0; v < 4; ++v)
        CHECK(c.assignment[v] == pair_ternary_symbol(v));
    CHECK_THROWS_AS(permuted_weighted_coloring(2, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permuted_weighted_coloring(2, {0, 1}), std::invalid_argument);
}

TEST_CASE("the published 7-coloring of length-6 words") {
    Coloring c = published_seven_coloring();
    CHECK(c.m == 6);
    CHECK(c.color_count() == 7);
    CHECK(c.class_sizes() == std::vector<std::size_t>{11, 8, 9, 9, 9, 9, 9});
    CHECK(coloring_valid(c, build_confusability_graph(6, 1)));
    // Its largest class beats the weighted-sum coloring's largest class.
    CHECK(weighted_sum_coloring(6).class_sizes().front() == 10);
}

TEST_CASE("greedy search finds valid colorings deterministically") {
    ConfusabilityGraph g = build_confusability_graph(4, 1);
    Coloring a = greedy_coloring(g, 42, 50);
    Coloring b = greedy_coloring(g, 42, 50);
    CHECK(coloring_valid(a, g));
    CHECK(a.classes == b.classes);
    CHECK(a.color_count() >= 5); // the low-weight clique makes 5 a floor
    Coloring threaded = greedy_coloring(g, 42, 50, 2);
    CHECK(threaded.classes == a.classes);
    CHECK(coloring_valid(greedy_coloring(g, 7, 1), g));
}

TEST_CASE("coloring io round trip") {
    Coloring c = weighted_sum_coloring(3);
    std::ostringstream out;
    write_coloring(out, c);
    std::istringstream in(out.str());
    Coloring back = read_coloring(in);
    CHECK(back.m == 3);
    CHECK(back.t == c.t);
    CHECK(back.classes == c.classes);

    std::istringstream bad_header("x 1 3\n");
    CHECK_THROWS_AS(read_coloring(bad_header), std::invalid_argument);
    std::istringstream missing_line("2 1 3\n0 3\n1\n");
    CHECK_THROWS_AS(read_coloring(missing_line), std::invalid_argument);
    std::istringstream out_of_range("2 1 2\n0 4\n1 2 3\n");
    CHECK_THROWS_AS(read_coloring(out_of_range), std::invalid_argument);
}

TEST_CASE("class validation catches broken partitions") {
    CHECK_THROWS_AS(coloring_from_classes(2, 1, {{0u, 1u}, {1u, 2u, 3u}}, true),
                    std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_classes(2, 1, {{0u, 1u}, {2u}}, true), std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_classes(2, 1, {{0u, 1u, 2u, 4u}}, true), std::invalid_argument);
}
