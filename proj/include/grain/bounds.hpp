#pragma once

#include <optional>

#include "grain/rational.hpp"

namespace grain {

// Exact value of the fractional-covering sum
//   sum_{k=0}^{n-1} C(n-1, k) / sum_{j=0}^{min(t,k)} C(k, j),
// which bounds half the maximum code size.  Requires 1 <= t < n.
BigRat transversal_sum(int n, int t);

// Largest even integer <= 2 * transversal_sum(n, t), i.e. 2*floor(sum).
BigInt even_floor_bound(int n, int t);

// Best upper bound the library can certify.  Equals even_floor_bound except
// for t = 1 and n <= 8, where the exhaustive optimum is known to be smaller
// and is substituted (computed, not tabulated).
BigInt upper_bound(int n, int t);

// Closed-form relaxations of the sum bound, valid from the stated lengths on.
BigInt closed_form_t2(int n); // requires n >= 14
BigInt closed_form_t3(int n); // requires n >= 24

struct BoundReport {
    int n = 0, t = 0;
    BigRat exact_sum;
    BigInt even_floor;              // 2*floor(exact_sum)
    BigInt bound;                   // final certified bound (<= even_floor)
    std::optional<BigInt> closed_form; // set when a closed form applies
};

BoundReport bound_report(int n, int t);

// Exact identities and inequalities used to derive the closed forms.  Each
// returns {lhs, rhs}; equalities hold exactly, inequalities as lhs <= rhs.
struct RatPair {
    BigRat lhs, rhs;
};

RatPair identity_shifted_sum(int n);   // sum_{k=2}^n C(n,k)/(k+1) = (2^{n+1}-2-3n/2-n^2/2)/(n+1), n >= 2
RatPair identity_harmonic_form(int n); // sum_{k=1}^n C(n,k)/k = sum_{k=1}^n (2^k-1)/k, n >= 1
RatPair bound_binom_over_k(int n);     // sum_{k=1}^n C(n,k)/k <= 2^{n+1}/(n-1-2/(n-5)), n >= 14
RatPair bound_geometric_form(int n);   // sum_{k=1}^n (2^k-1)/k <= 2^{n+1}/(n-1-2/(n-5)+1/n^2), n >= 17
RatPair identity_k_minus_one(int n);   // sum_{k=2}^n C(n,k)/(k-1) = n*sum_{k=1}^{n-1}(2^k-1)/k - 2^n + n + 1, n >= 2

} // namespace grain
