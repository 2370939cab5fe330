#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace grain {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return r; // 0
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow2(unsigned long e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// GMP rational arithmetic assumes canonical operands, so every fraction
// built from a numerator/denominator pair goes through here.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// Largest integer <= q.
inline BigInt floor_rat(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline bool fits_uint64(const BigInt& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64 && v.fits_ulong_p();
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline std::string to_decimal(const BigRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace grain
