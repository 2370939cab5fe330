#include "grain/bounds.hpp"

#include <stdexcept>

#include "grain/search.hpp"

namespace grain {

namespace {

void check_nt(int n, int t) {
    if (t < 1 || t >= n || n > 10000)
        throw std::invalid_argument("need 1 <= t < n <= 10000, got n=" + std::to_string(n) +
                                    " t=" + std::to_string(t));
}

} // namespace

BigRat transversal_sum(int n, int t) {
    check_nt(n, t);
    BigRat total = 0;
    for (int k = 0; k < n; ++k) {
        BigInt denom = 0;
        for (int j = 0; j <= std::min(t, k); ++j)
            denom += binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
        total += make_rat(
            binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(k)), denom);
    }
    return total;
}

BigInt even_floor_bound(int n, int t) { return 2 * floor_rat(transversal_sum(n, t)); }

BigInt upper_bound(int n, int t) {
    BigInt base = even_floor_bound(n, t);
    if (t == 1 && n <= 8) {
        BigInt exact(static_cast<unsigned long>(exact_optimum_grain(n, 1).size()));
        if (exact < base) base = exact;
    }
    return base;
}

BigInt closed_form_t2(int n) {
    if (n < 14) throw std::invalid_argument("closed form for t=2 needs n >= 14");
    // 2 * floor( 2^{n+2} (2 + 2/(n-6)) / (2n(n-3)) )
    BigRat inner = BigRat(pow2(static_cast<unsigned long>(n + 2))) *
                   (2 + make_rat(2, n - 6)) / (BigInt(2) * n * (n - 3));
    return 2 * floor_rat(inner);
}

BigInt closed_form_t3(int n) {
    if (n < 24) throw std::invalid_argument("closed form for t=3 needs n >= 24");
    // 2 * floor( 3*2^n (8 + 44/(n-7) + 1/n - 2/(n-2)^2)
    //            / (n(n-1)(n-3 - 2/(n-7) + 2/(n-2)^2)) )
    BigInt sq = BigInt(n - 2) * (n - 2);
    BigRat numer = 3 * BigRat(pow2(static_cast<unsigned long>(n))) *
                   (8 + make_rat(44, n - 7) + make_rat(1, n) - make_rat(2, sq));
    BigRat denom = BigRat(BigInt(n) * (n - 1)) *
                   (BigRat(n - 3) - make_rat(2, n - 7) + make_rat(2, sq));
    return 2 * floor_rat(numer / denom);
}

BoundReport bound_report(int n, int t) {
    BoundReport r;
    r.n = n;
    r.t = t;
    r.exact_sum = transversal_sum(n, t);
    r.even_floor = 2 * floor_rat(r.exact_sum);
    r.bound = upper_bound(n, t);
    if (t == 2 && n >= 14)
        r.closed_form = closed_form_t2(n);
    else if (t == 3 && n >= 24)
        r.closed_form = closed_form_t3(n);
    return r;
}

RatPair identity_shifted_sum(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    BigRat lhs = 0;
    for (int k = 2; k <= n; ++k)
        lhs += make_rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                        k + 1);
    BigRat rhs = (BigRat(pow2(static_cast<unsigned long>(n + 1))) - 2 -
                  make_rat(BigInt(3) * n, 2) - make_rat(BigInt(n) * n, 2)) /
                 BigRat(n + 1);
    return {lhs, rhs};
}

RatPair identity_harmonic_form(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    BigRat lhs = 0, rhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += make_rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                        k);
        rhs += make_rat(pow2(static_cast<unsigned long>(k)) - 1, k);
    }
    return {lhs, rhs};
}

RatPair bound_binom_over_k(int n) {
    if (n < 14) throw std::invalid_argument("need n >= 14");
    BigRat lhs = 0;
    for (int k = 1; k <= n; ++k)
        lhs += make_rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                        k);
    BigRat rhs = BigRat(pow2(static_cast<unsigned long>(n + 1))) /
                 (BigRat(n - 1) - make_rat(2, n - 5));
    return {lhs, rhs};
}

RatPair bound_geometric_form(int n) {
    if (n < 17) throw std::invalid_argument("need n >= 17");
    BigRat lhs = 0;
    for (int k = 1; k <= n; ++k) lhs += make_rat(pow2(static_cast<unsigned long>(k)) - 1, k);
    BigRat rhs = BigRat(pow2(static_cast<unsigned long>(n + 1))) /
                 (BigRat(n - 1) - make_rat(2, n - 5) + make_rat(1, BigInt(n) * n));
    return {lhs, rhs};
}

RatPair identity_k_minus_one(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    BigRat lhs = 0;
    for (int k = 2; k <= n; ++k)
        lhs += make_rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)),
                        k - 1);
    BigRat rhs = 0;
    for (int k = 1; k <= n - 1; ++k) rhs += make_rat(pow2(static_cast<unsigned long>(k)) - 1, k);
    rhs *= n;
    rhs += BigRat(BigInt(n) + 1 - pow2(static_cast<unsigned long>(n)));
    return {lhs, rhs};
}

} // namespace grain
