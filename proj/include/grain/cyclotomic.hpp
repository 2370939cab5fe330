#pragma once

#include <vector>

#include "grain/rational.hpp"

namespace grain {

// Exact arithmetic in Z[w] where w is a primitive p-th root of unity, p
// prime.  Values are stored as integer coordinates on 1, w, ..., w^{p-1}
// subject to 1 + w + ... + w^{p-1} = 0; the canonical form keeps the last
// coordinate zero, which makes representations unique.
struct Cyclo {
    int p = 3;
    std::vector<BigInt> c; // length p, canonical iff c[p-1] == 0

    explicit Cyclo(int prime) : p(prime), c(static_cast<std::size_t>(prime), BigInt(0)) {}

    static Cyclo integer(int p, const BigInt& v);
    static Cyclo root_power(int p, long k); // w^k

    void canonicalize(); // subtract c[p-1] from every coordinate
    bool is_integer() const;
    const BigInt& integer_value() const; // requires is_integer()

    Cyclo conjugate() const; // w -> w^{-1}

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator*=(const BigInt& v);

    // this += o * w^k, without materializing the rotation.
    void add_rotated(const Cyclo& o, long k);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator*(Cyclo a, const BigInt& v) { return a *= v; }
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.p == b.p && a.c == b.c; }
};

Cyclo cyclo_pow(Cyclo base, unsigned long e);

} // namespace grain
