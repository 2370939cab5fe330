#include "doctest.h"

#include <map>
#include <stdexcept>

#include "grain/bounds.hpp"

using namespace grain;

TEST_CASE("single-error covering sum collapses to (2^n - 1)/n") {
    for (int n = 2; n <= 40; ++n)
        CHECK(transversal_sum(n, 1) == make_rat(pow2(static_cast<unsigned long>(n)) - 1, n));
}

TEST_CASE("even floor bound is the largest even integer below twice the sum") {
    CHECK(even_floor_bound(5, 1) == 12);
    CHECK(even_floor_bound(6, 1) == 20);
    CHECK(even_floor_bound(7, 1) == 36);
    CHECK(even_floor_bound(8, 1) == 62);
    for (int n = 3; n <= 24; ++n)
        for (int t = 1; t <= 3 && t < n; ++t) {
            BigInt b = even_floor_bound(n, t);
            CHECK(b % 2 == 0);
            BigRat twice = BigRat(2) * transversal_sum(n, t);
            CHECK(BigRat(b) <= twice);
            CHECK(BigRat(b + 2) > twice);
        }
}

TEST_CASE("certified single-error upper bounds match the published table") {
    const std::map<int, long> expected = {
        {3, 4},      {4, 6},      {5, 8},      {6, 16},    {7, 26},    {8, 44},
        {9, 112},    {10, 204},   {11, 372},   {12, 682},  {13, 1260}, {14, 2340},
        {15, 4368},  {16, 8190},  {17, 15420}, {18, 29126}, {19, 55188}, {20, 104856}};
    for (const auto& [n, v] : expected) CHECK(upper_bound(n, 1) == v);
    // From length 9 on, the certified bound is the fractional-covering value.
    for (int n = 9; n <= 20; ++n) CHECK(upper_bound(n, 1) == even_floor_bound(n, 1));
    // Below that, exhaustive search certifies strictly more than the sum does.
    for (int n = 5; n <= 8; ++n) CHECK(upper_bound(n, 1) < even_floor_bound(n, 1));
}

TEST_CASE("closed forms stay above the exact even floor they relax") {
    for (int n = 14; n <= 60; ++n) CHECK(closed_form_t2(n) >= even_floor_bound(n, 2));
    for (int n = 24; n <= 60; ++n) CHECK(closed_form_t3(n) >= even_floor_bound(n, 3));
    // ... and not by much: within 8 percent from length 24, tightening to
    // within 2 percent by length 60.
    for (int n = 24; n <= 60; ++n) {
        CHECK(BigRat(closed_form_t2(n)) <=
              BigRat(even_floor_bound(n, 2)) * make_rat(108, 100));
        CHECK(BigRat(closed_form_t3(n)) <=
              BigRat(even_floor_bound(n, 3)) * make_rat(108, 100));
    }
    CHECK(BigRat(closed_form_t2(60)) <= BigRat(even_floor_bound(60, 2)) * make_rat(102, 100));
    CHECK(BigRat(closed_form_t3(60)) <= BigRat(even_floor_bound(60, 3)) * make_rat(102, 100));
    CHECK_THROWS_AS(closed_form_t2(13), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_t3(23), std::invalid_argument);
}

TEST_CASE("bound report bundles the pieces consistently") {
    BoundReport r = bound_report(16, 2);
    CHECK(r.n == 16);
    CHECK(r.t == 2);
    CHECK(r.even_floor == even_floor_bound(16, 2));
    CHECK(r.bound == r.even_floor);
    REQUIRE(r.closed_form.has_value());
    CHECK(*r.closed_form == closed_form_t2(16));

    BoundReport small = bound_report(6, 1);
    CHECK(small.bound == 16);
    CHECK(small.even_floor == 20);
    CHECK(!small.closed_form.has_value());

    CHECK(!bound_report(13, 2).closed_form.has_value());
    CHECK(bound_report(24, 3).closed_form.has_value());
}

TEST_CASE("preconditions on the sum") {
    CHECK_THROWS_AS(transversal_sum(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(transversal_sum(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(transversal_sum(0, 1), std::invalid_argument);
}

TEST_CASE("shifted-sum identity holds exactly") {
    for (int n = 2; n <= 50; ++n) {
        RatPair p = identity_shifted_sum(n);
        CHECK(p.lhs == p.rhs);
    }
}

TEST_CASE("harmonic-form identity holds exactly") {
    for (int n = 1; n <= 50; ++n) {
        RatPair p = identity_harmonic_form(n);
        CHECK(p.lhs == p.rhs);
    }
}

TEST_CASE("k-minus-one identity holds exactly") {
    for (int n = 2; n <= 50; ++n) {
        RatPair p = identity_k_minus_one(n);
        CHECK(p.lhs == p.rhs);
    }
}

TEST_CASE("binomial-over-k inequality holds from length 14") {
    for (int n = 14; n <= 50; ++n) {
        RatPair p = bound_binom_over_k(n);
        CHECK(p.lhs <= p.rhs);
    }
    RatPair at14 = bound_binom_over_k(14);
    CHECK(at14.lhs.get_d() == doctest::Approx(2562.01).epsilon(0.001));
    CHECK(at14.rhs.get_d() == doctest::Approx(2564.45).epsilon(0.001));
    CHECK_THROWS_AS(bound_binom_over_k(13), std::invalid_argument);
}

TEST_CASE("geometric-form inequality holds from length 17") {
    for (int n = 17; n <= 50; ++n) {
        RatPair p = bound_geometric_form(n);
        CHECK(p.lhs <= p.rhs);
    }
    CHECK_THROWS_AS(bound_geometric_form(16), std::invalid_argument);
}
