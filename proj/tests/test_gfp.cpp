#include "doctest.h"

#include <set>
#include <sstream>
#include <stdexcept>

#include "grain/gfp.hpp"
#include "grain/rational.hpp"

using namespace grain;

TEST_CASE("ternary single-error check matrix over 4 positions") {
    PrimeLinearCode h = hamming_code(3, 2);
    CHECK(h.p == 3);
    CHECK(h.length == 4);
    CHECK(h.rows() == 2);
    CHECK(h.designed_t == 1);
    // Columns are the normalized projective points in ascending order.
    CHECK(h.column(0) == GfVec{0, 1});
    CHECK(h.column(1) == GfVec{1, 0});
    CHECK(h.column(2) == GfVec{1, 1});
    CHECK(h.column(3) == GfVec{1, 2});
    // No column is a scalar multiple of another.
    for (int i = 0; i < h.length; ++i)
        for (int j = i + 1; j < h.length; ++j)
            for (int s = 1; s < 3; ++s) {
                GfVec scaled = h.column(i);
                for (auto& v : scaled) v = v * s % 3;
                CHECK(scaled != h.column(j));
            }
}

TEST_CASE("larger single-error matrices have the projective length") {
    CHECK(hamming_code(3, 3).length == 13);
    CHECK(hamming_code(7, 2).length == 8);
    CHECK(matrix_rank(hamming_code(3, 3).check, 3) == 3);
    CHECK(matrix_rank(hamming_code(7, 2).check, 7) == 2);
    CHECK_THROWS_AS(hamming_code(4, 2), std::invalid_argument);
}

TEST_CASE("repetition matrix pins every position to the first") {
    PrimeLinearCode r = repetition_code(3, 5, 2);
    CHECK(r.length == 5);
    CHECK(r.rows() == 4);
    CHECK(r.designed_t == 2);
    // Codewords are exactly the constants.
    auto words = solve_coset(r, GfVec(4, 0));
    CHECK(words.size() == 3);
    for (const auto& w : words)
        for (int v : w) CHECK(v == w[0]);
    // A designed radius beyond the length's reach is refused.
    CHECK_THROWS_AS(repetition_code(3, 5, 7), std::invalid_argument);
    CHECK(repetition_code(7, 3, 1).designed_t == 1);
    CHECK_THROWS_AS(repetition_code(3, 1, 1), std::invalid_argument);
}

TEST_CASE("check matrix io round trip") {
    PrimeLinearCode h = hamming_code(3, 2);
    std::ostringstream out;
    write_check_matrix(out, h);
    std::istringstream in(out.str());
    PrimeLinearCode back = read_check_matrix(in, 1);
    CHECK(back.p == h.p);
    CHECK(back.check == h.check);

    std::istringstream custom("# gf(5) example\n5 1 3\n1 4 9\n");
    PrimeLinearCode c = read_check_matrix(custom, 1);
    CHECK(c.p == 5);
    CHECK(c.check == GfMat{{1, 4, 4}}); // entries reduced mod p
    std::istringstream short_row("3 1 4\n1 2 0\n");
    CHECK_THROWS_AS(read_check_matrix(short_row, 1), std::invalid_argument);
    std::istringstream bad_p("4 1 2\n1 2\n");
    CHECK_THROWS_AS(read_check_matrix(bad_p, 1), std::invalid_argument);
}

TEST_CASE("row reduction computes rank") {
    GfMat m = {{1, 2, 0}, {0, 1, 1}, {0, 0, 1}};
    CHECK(matrix_rank(m, 3) == 3);
    GfMat fold = {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}; // row 2 = 2 * row 1 mod 3
    CHECK(matrix_rank(fold, 3) == 2);
    GfMat dep = {{1, 2, 0}, {2, 4, 0}};
    CHECK(matrix_rank(dep, 5) == 1);
    GfMat zero = {{0, 0}, {0, 0}};
    CHECK(matrix_rank(zero, 3) == 0);
}

TEST_CASE("coset solving partitions the whole space by syndrome") {
    PrimeLinearCode h = hamming_code(3, 2);
    std::set<GfVec> seen;
    for (long id = 0; id < 9; ++id) {
        GfVec s = syndrome_from_id(id, 3, 2);
        auto sols = solve_coset(h, s);
        CHECK(sols.size() == 9); // 3^(4-2) per coset
        for (const auto& x : sols) {
            CHECK(h.syndrome(x) == s);
            CHECK(seen.insert(x).second);
        }
    }
    CHECK(seen.size() == 81);
}

TEST_CASE("coset solving detects inconsistent systems") {
    // Two proportional rows with non-proportional right-hand sides.
    PrimeLinearCode c;
    c.p = 3;
    c.length = 2;
    c.check = {{1, 1}, {2, 2}};
    CHECK(solve_coset(c, GfVec{1, 0}).empty());
    CHECK(solve_coset(c, GfVec{1, 2}).size() == 3);
}

TEST_CASE("dual words annihilate every codeword") {
    for (const PrimeLinearCode& code :
         {hamming_code(3, 2), repetition_code(3, 4, 1), hamming_code(5, 2)}) {
        auto dual = dual_codewords(code);
        BigInt expect = 1;
        for (int i = 0; i < matrix_rank(code.check, code.p); ++i) expect *= code.p;
        CHECK(BigInt(static_cast<long>(dual.size())) == expect);
        auto codewords = solve_coset(code, GfVec(static_cast<std::size_t>(code.rows()), 0));
        for (const auto& d : dual)
            for (const auto& x : codewords) {
                long dot = 0;
                for (int i = 0; i < code.length; ++i)
                    dot += static_cast<long>(d[static_cast<std::size_t>(i)]) *
                           x[static_cast<std::size_t>(i)];
                CHECK(dot % code.p == 0);
            }
    }
}

TEST_CASE("minimum distances of the stock codes") {
    auto h = min_distance(hamming_code(3, 2));
    CHECK(h.distance == 3);
    CHECK(h.exact);
    auto r = min_distance(repetition_code(3, 5, 2));
    CHECK(r.distance == 5);
    CHECK(r.exact);
    // Forcing the scan path certifies the designed distance without exactness.
    auto big = min_distance(hamming_code(3, 3), 100);
    CHECK(big.distance == 3);
    CHECK(!big.exact);
}

TEST_CASE("syndrome ids pack little-endian") {
    CHECK(syndrome_id(GfVec{2, 1}, 3) == 5);
    CHECK(syndrome_from_id(5, 3, 2) == GfVec{2, 1});
    for (long id = 0; id < 27; ++id) CHECK(syndrome_id(syndrome_from_id(id, 3, 3), 3) == id);
}
