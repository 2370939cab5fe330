#include "grain/cyclotomic.hpp"

#include <stdexcept>

namespace grain {

Cyclo Cyclo::integer(int p, const BigInt& v) {
    Cyclo r(p);
    r.c[0] = v;
    return r;
}

Cyclo Cyclo::root_power(int p, long k) {
    Cyclo r(p);
    k %= p;
    if (k < 0) k += p;
    r.c[static_cast<std::size_t>(k)] = 1;
    r.canonicalize();
    return r;
}

void Cyclo::canonicalize() {
    std::size_t last = static_cast<std::size_t>(p - 1);
    if (c[last] == 0) return;
    BigInt shift = c[last];
    for (std::size_t i = 0; i < last; ++i) c[i] -= shift;
    c[last] = 0;
}

bool Cyclo::is_integer() const {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

const BigInt& Cyclo::integer_value() const {
    if (!is_integer()) throw std::logic_error("cyclotomic value is not a rational integer");
    return c[0];
}

Cyclo Cyclo::conjugate() const {
    Cyclo r(p);
    r.c[0] = c[0];
    for (int k = 1; k < p; ++k) r.c[static_cast<std::size_t>(p - k)] = c[static_cast<std::size_t>(k)];
    r.canonicalize();
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (p != o.p) throw std::logic_error("mixed root orders");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    canonicalize();
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    if (p != o.p) throw std::logic_error("mixed root orders");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    canonicalize();
    return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (p != o.p) throw std::logic_error("mixed root orders");
    std::vector<BigInt> prod(static_cast<std::size_t>(p), BigInt(0));
    for (int i = 0; i < p; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < p; ++j) {
            if (o.c[static_cast<std::size_t>(j)] == 0) continue;
            int k = i + j;
            if (k >= p) k -= p;
            prod[static_cast<std::size_t>(k)] +=
                c[static_cast<std::size_t>(i)] * o.c[static_cast<std::size_t>(j)];
        }
    }
    c = std::move(prod);
    canonicalize();
    return *this;
}

Cyclo& Cyclo::operator*=(const BigInt& v) {
    for (auto& x : c) x *= v;
    return *this;
}

void Cyclo::add_rotated(const Cyclo& o, long k) {
    if (p != o.p) throw std::logic_error("mixed root orders");
    k %= p;
    if (k < 0) k += p;
    for (int i = 0; i < p; ++i) {
        int dest = i + static_cast<int>(k);
        if (dest >= p) dest -= p;
        c[static_cast<std::size_t>(dest)] += o.c[static_cast<std::size_t>(i)];
    }
    canonicalize();
}

Cyclo cyclo_pow(Cyclo base, unsigned long e) {
    Cyclo r = Cyclo::integer(base.p, 1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace grain
