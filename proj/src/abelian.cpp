#include "grain/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace grain {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> f) : factors(std::move(f)) {
    if (factors.empty()) throw std::invalid_argument("group needs at least one factor");
    for (int k : factors) {
        if (k < 2) throw std::invalid_argument("cyclic factor must be >= 2");
        order *= k;
        if (order > (1L << 30)) throw std::invalid_argument("group order too large");
    }
}

int FiniteAbelianGroup::add(int a, int b) const {
    long r = 0;
    long place = 1;
    for (std::size_t i = factors.size(); i-- > 0;) {
        int k = factors[i];
        r += static_cast<long>((a % k + b % k) % k) * place;
        a /= k;
        b /= k;
        place *= k;
    }
    return static_cast<int>(r);
}

int FiniteAbelianGroup::neg(int a) const {
    std::vector<int> c = coords(a);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) c[i] = factors[i] - c[i];
    return from_coords(c);
}

std::vector<int> FiniteAbelianGroup::coords(int a) const {
    std::vector<int> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        c[i] = a % factors[i];
        a /= factors[i];
    }
    return c;
}

int FiniteAbelianGroup::from_coords(const std::vector<int>& c) const {
    if (c.size() != factors.size())
        throw std::invalid_argument("coordinate count does not match factor count");
    long r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= factors[i])
            throw std::invalid_argument("coordinate out of range");
        r = r * factors[i] + c[i];
    }
    return static_cast<int>(r);
}

std::string FiniteAbelianGroup::spec() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += 'x';
        s += 'Z' + std::to_string(factors[i]);
    }
    return s;
}

FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<int> factors;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z')
            throw std::invalid_argument("group spec must look like Z2xZ9, got \"" + spec + "\"");
        std::size_t end = pos + 1;
        while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == pos + 1) throw std::invalid_argument("missing factor order in \"" + spec + "\"");
        factors.push_back(std::stoi(spec.substr(pos + 1, end - pos - 1)));
        pos = end;
        if (pos < spec.size()) {
            if (spec[pos] != 'x')
                throw std::invalid_argument("factors must be joined by 'x' in \"" + spec + "\"");
            ++pos;
            if (pos == spec.size())
                throw std::invalid_argument("trailing 'x' in \"" + spec + "\"");
        }
    }
    return FiniteAbelianGroup(factors);
}

namespace {

// All multisets of prime-power factors p^{e_1} * ... with exponents a
// partition of e, listed in a stable order.
void exponent_partitions(int e, int max_part, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (e == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(e, max_part); part >= 1; --part) {
        cur.push_back(part);
        exponent_partitions(e - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FiniteAbelianGroup> abelian_groups_of_order(int n) {
    if (n < 2) throw std::invalid_argument("group order must be >= 2");
    std::vector<std::pair<int, int>> prime_powers; // (prime, exponent)
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        prime_powers.emplace_back(p, e);
    }
    if (m > 1) prime_powers.emplace_back(m, 1);

    std::vector<std::vector<std::vector<int>>> per_prime; // factor lists per prime
    for (auto [p, e] : prime_powers) {
        std::vector<std::vector<int>> partitions;
        std::vector<int> cur;
        exponent_partitions(e, e, cur, partitions);
        std::vector<std::vector<int>> lists;
        for (const auto& part : partitions) {
            std::vector<int> factors;
            for (int exp : part) {
                int v = 1;
                for (int i = 0; i < exp; ++i) v *= p;
                factors.push_back(v);
            }
            std::sort(factors.begin(), factors.end());
            lists.push_back(factors);
        }
        std::sort(lists.begin(), lists.end());
        per_prime.push_back(lists);
    }

    std::vector<FiniteAbelianGroup> out;
    std::vector<std::size_t> pick(per_prime.size(), 0);
    while (true) {
        std::vector<int> factors;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            factors.insert(factors.end(), per_prime[i][pick[i]].begin(),
                           per_prime[i][pick[i]].end());
        std::sort(factors.begin(), factors.end());
        out.emplace_back(factors);
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
                  return a.factors < b.factors;
              });
    return out;
}

} // namespace grain
