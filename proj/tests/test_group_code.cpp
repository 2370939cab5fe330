#include "doctest.h"

#include <numeric>

#include "grain/group_code.hpp"
#include "grain/search.hpp"

using namespace grain;

TEST_CASE("coefficient orderings put zero first and inverse pairs adjacent") {
    CHECK(build_ordering(parse_group("Z3")) == std::vector<int>{0, 1, 2});
    CHECK(build_ordering(parse_group("Z4")) == std::vector<int>{0, 2, 1, 3});
    CHECK(build_ordering(parse_group("Z2xZ2")) == std::vector<int>{0, 1, 2, 3});
    CHECK(build_ordering(parse_group("Z5")) == std::vector<int>{0, 1, 4, 2, 3});
    CHECK(build_ordering(parse_group("Z6")) == std::vector<int>{0, 3, 1, 5, 2, 4});
}

TEST_CASE("ordering is a permutation with the pair property for every group") {
    for (int n = 2; n <= 18; ++n)
        for (const auto& g : abelian_groups_of_order(n)) {
            auto ord = build_ordering(g);
            REQUIRE(static_cast<long>(ord.size()) == g.order);
            std::vector<int> sorted = ord;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> iota(ord.size());
            std::iota(iota.begin(), iota.end(), 0);
            CHECK(sorted == iota);
            CHECK(ord[0] == 0);
            for (std::size_t i = 1; i < ord.size(); ++i) {
                int e = ord[i];
                if (g.neg(e) == e) continue;
                bool adjacent = (i + 1 < ord.size() && ord[i + 1] == g.neg(e)) ||
                                (i >= 1 && ord[i - 1] == g.neg(e));
                CHECK(adjacent);
            }
        }
}

TEST_CASE("length-3 cyclic construction gives the published residue classes") {
    auto g = parse_group("Z3");
    CodeBook c0 = enumerate_group_code(g, 0);
    CHECK(c0.words == std::vector<std::uint32_t>{word_from_string("000"), word_from_string("100"),
                                                 word_from_string("011"), word_from_string("111")});
    CHECK(enumerate_group_code(g, 1).size() == 2);
    CHECK(enumerate_group_code(g, 2).size() == 2);
    // The three classes partition the whole space.
    std::size_t total = 0;
    for (int a = 0; a < 3; ++a) total += enumerate_group_code(g, a).size();
    CHECK(total == 8);
}

TEST_CASE("every residue class of small groups corrects one smearing error") {
    for (int n = 3; n <= 9; ++n)
        for (const auto& g : abelian_groups_of_order(n))
            for (int a = 0; a < g.order; ++a) {
                CodeBook c = enumerate_group_code(g, a);
                CHECK(is_t_correcting(c, {ErrorKind::Grain, 1}).ok);
                CHECK(single_grain_sufficient(c));
            }
}

TEST_CASE("shortening a group code on its zero coefficient keeps one-mineral correction") {
    for (const auto& g : abelian_groups_of_order(6)) {
        CodeBook c = enumerate_group_code(g, 0);
        CodeBook tail = shorten_first_bit(c);
        CHECK(tail.size() == c.size() / 2);
        CHECK(is_t_correcting(tail, {ErrorKind::Mineral, 1}).ok);
    }
}

TEST_CASE("streaming counts match enumeration on every residue") {
    for (int n = 2; n <= 12; ++n)
        for (const auto& g : abelian_groups_of_order(n)) {
            auto sizes = group_code_class_sizes(g);
            BigInt total = 0;
            for (int a = 0; a < g.order; ++a) {
                CHECK(sizes[static_cast<std::size_t>(a)] == group_code_cardinality(g, a));
                CHECK(sizes[static_cast<std::size_t>(a)] ==
                      BigInt(static_cast<long>(enumerate_group_code(g, a).size())));
                total += sizes[static_cast<std::size_t>(a)];
            }
            CHECK(total == pow2(static_cast<unsigned long>(n)));
        }
}

TEST_CASE("zero-residue counts for known lengths") {
    CHECK(group_code_cardinality(parse_group("Z3"), 0) == 4);
    CHECK(group_code_cardinality(parse_group("Z3xZ3"), 0) == 64);
    CHECK(group_code_cardinality(parse_group("Z17"), 0) == 7712);
    CHECK(group_code_cardinality(parse_group("Z19"), 0) == 27596);
}

TEST_CASE("prime-order zero classes follow the character-sum closed form") {
    // For odd prime p, every nonprincipal character contributes 2 to the
    // subset-sum tally, so the zero class holds (2^p + 2(p-1)) / p words.
    for (int p : {3, 5, 7, 11, 13, 17, 19}) {
        BigInt expect = (pow2(static_cast<unsigned long>(p)) + 2 * (p - 1)) / p;
        CHECK(group_code_cardinality(parse_group("Z" + std::to_string(p)), 0) == expect);
    }
}

TEST_CASE("the best group at each length matches the published construction table") {
    struct Row {
        int n;
        long size;
    };
    for (Row row : {Row{16, 4096}, Row{17, 7712}, Row{18, 14592}, Row{19, 27596},
                    Row{20, 52432}}) {
        BestGroup b = best_group_code(row.n);
        CHECK(b.cardinality == row.size);
        CHECK(static_cast<long>(b.candidates.size()) ==
              static_cast<long>(abelian_groups_of_order(row.n).size()));
    }
    CHECK(best_group_code(9).cardinality == 64);
    CHECK(best_group_code(9).group.spec() == "Z3xZ3");
    CHECK(best_group_code(18).group.spec() == "Z2xZ3xZ3");
}
