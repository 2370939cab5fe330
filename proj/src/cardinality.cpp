#include "grain/cardinality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "grain/bitword.hpp"

namespace grain {

HammingWeightEnumerator hwe_direct(const PrimeLinearCode& code, const GfVec& syndrome,
                                   std::uint64_t cap) {
    HammingWeightEnumerator hwe;
    hwe.length = code.length;
    hwe.counts.assign(static_cast<std::size_t>(code.length) + 1, BigInt(0));
    for (const auto& w : solve_coset(code, syndrome, cap)) {
        int wt = 0;
        for (int v : w) wt += v != 0;
        hwe.counts[static_cast<std::size_t>(wt)] += 1;
    }
    return hwe;
}

CompleteWeightEnumerator cwe_direct(const PrimeLinearCode& code, std::uint64_t cap) {
    CompleteWeightEnumerator cwe;
    cwe.p = code.p;
    cwe.length = code.length;
    for (const auto& w : solve_coset(code, GfVec(static_cast<std::size_t>(code.rows()), 0), cap)) {
        std::vector<int> comp(static_cast<std::size_t>(code.p), 0);
        for (int v : w) ++comp[static_cast<std::size_t>(v)];
        cwe.counts[comp] += 1;
    }
    return cwe;
}

CompleteWeightEnumerator cwe_macwilliams(const PrimeLinearCode& code) {
    const int p = code.p;
    const int n = code.length;
    CompleteWeightEnumerator cwe;
    cwe.p = p;
    cwe.length = n;

    // Accumulate sum over dual words of prod_i (z_0 + z_1 w^{c_i} + ...),
    // expanded composition by composition.  Coefficients live in Z[w]; the
    // final division by |dual| must come out integral.
    std::map<std::vector<int>, Cyclo> acc;
    auto dual = dual_codewords(code);
    for (const auto& c : dual) {
        std::map<std::vector<int>, Cyclo> poly;
        poly.emplace(std::vector<int>(static_cast<std::size_t>(p), 0), Cyclo::integer(p, 1));
        for (int i = 0; i < n; ++i) {
            int ci = c[static_cast<std::size_t>(i)];
            std::map<std::vector<int>, Cyclo> next;
            for (const auto& [comp, coeff] : poly) {
                for (int j = 0; j < p; ++j) {
                    std::vector<int> comp2 = comp;
                    ++comp2[static_cast<std::size_t>(j)];
                    auto it = next.try_emplace(std::move(comp2), Cyclo(p)).first;
                    it->second.add_rotated(coeff, static_cast<long>(j) * ci);
                }
            }
            poly = std::move(next);
        }
        for (auto& [comp, coeff] : poly) {
            auto it = acc.try_emplace(comp, Cyclo(p)).first;
            it->second += coeff;
        }
    }
    BigInt dual_size(static_cast<unsigned long>(dual.size()));
    for (auto& [comp, coeff] : acc) {
        const BigInt& v = coeff.integer_value(); // throws if not rational
        BigInt q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), dual_size.get_mpz_t());
        if (r != 0) throw std::logic_error("dual sum not divisible by dual size");
        if (q != 0) cwe.counts[comp] = q;
    }
    return cwe;
}

BigInt doubled_zero_count(const HammingWeightEnumerator& hwe) {
    BigInt total = 0;
    for (std::size_t w = 0; w < hwe.counts.size(); ++w)
        total += hwe.counts[w] * pow2(static_cast<unsigned long>(hwe.counts.size() - 1 - w));
    return total;
}

BigInt count_from_partition(const CompleteWeightEnumerator& cwe,
                            const std::vector<BigInt>& class_sizes,
                            const std::vector<int>& class_to_symbol) {
    if (class_sizes.size() != class_to_symbol.size())
        throw std::invalid_argument("one symbol per class required");
    if (static_cast<int>(class_sizes.size()) != cwe.p)
        throw std::invalid_argument("need exactly one class per field symbol");
    std::vector<BigInt> size_by_symbol(static_cast<std::size_t>(cwe.p), BigInt(0));
    for (std::size_t k = 0; k < class_sizes.size(); ++k) {
        int s = class_to_symbol[k];
        if (s < 0 || s >= cwe.p) throw std::invalid_argument("symbol out of range");
        if (size_by_symbol[static_cast<std::size_t>(s)] != 0)
            throw std::invalid_argument("two classes mapped to one symbol");
        size_by_symbol[static_cast<std::size_t>(s)] = class_sizes[k];
    }
    // Precompute size^e tables.
    std::vector<std::vector<BigInt>> pows(static_cast<std::size_t>(cwe.p));
    for (int s = 0; s < cwe.p; ++s) {
        pows[static_cast<std::size_t>(s)].assign(static_cast<std::size_t>(cwe.length) + 1,
                                                 BigInt(1));
        for (int e = 1; e <= cwe.length; ++e)
            pows[static_cast<std::size_t>(s)][static_cast<std::size_t>(e)] =
                pows[static_cast<std::size_t>(s)][static_cast<std::size_t>(e - 1)] *
                size_by_symbol[static_cast<std::size_t>(s)];
    }
    BigInt total = 0;
    for (const auto& [comp, count] : cwe.counts) {
        BigInt term = count;
        for (int s = 0; s < cwe.p; ++s)
            term *= pows[static_cast<std::size_t>(s)][static_cast<std::size_t>(
                comp[static_cast<std::size_t>(s)])];
        total += term;
    }
    return total;
}

BigInt count_from_partition_dual(const PrimeLinearCode& outer, const GfVec& residue,
                                 const std::vector<BigInt>& size_by_symbol) {
    const int p = outer.p;
    const int r = outer.rows();
    if (static_cast<int>(size_by_symbol.size()) != p)
        throw std::invalid_argument("need one class size per field symbol");
    if (static_cast<int>(residue.size()) != r)
        throw std::invalid_argument("residue length must match check rows");
    std::uint64_t space = 1;
    for (int i = 0; i < r; ++i) {
        space *= static_cast<std::uint64_t>(p);
        check_cap(space, std::uint64_t{1} << 20, "syndrome space sweep");
    }
    // Linear forms L_s = sum_j size_j w^{js}, one per symbol value.
    std::vector<Cyclo> forms(static_cast<std::size_t>(p), Cyclo(p));
    for (int s = 0; s < p; ++s)
        for (int j = 0; j < p; ++j)
            forms[static_cast<std::size_t>(s)].add_rotated(
                Cyclo::integer(p, size_by_symbol[static_cast<std::size_t>(j)]),
                static_cast<long>(j) * s);
    // Sum over the whole syndrome space: the count with syndrome `residue` is
    // p^-r sum_u w^{-u.residue} prod_i L_{(u^T H)_i}.
    Cyclo total(p);
    for (std::uint64_t uid = 0; uid < space; ++uid) {
        GfVec u = syndrome_from_id(static_cast<long>(uid), p, r);
        std::vector<unsigned long> mult(static_cast<std::size_t>(p), 0);
        for (int i = 0; i < outer.length; ++i) {
            long dot = 0;
            for (int row = 0; row < r; ++row)
                dot += static_cast<long>(u[static_cast<std::size_t>(row)]) *
                       outer.check[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)];
            ++mult[static_cast<std::size_t>(dot % p)];
        }
        Cyclo term = Cyclo::integer(p, 1);
        for (int s = 0; s < p; ++s)
            if (mult[static_cast<std::size_t>(s)])
                term *= cyclo_pow(forms[static_cast<std::size_t>(s)],
                                  mult[static_cast<std::size_t>(s)]);
        long phase = 0;
        for (int row = 0; row < r; ++row)
            phase += static_cast<long>(u[static_cast<std::size_t>(row)]) *
                     residue[static_cast<std::size_t>(row)];
        total.add_rotated(term, -phase);
    }
    const BigInt& numer = total.integer_value();
    BigInt denom = ipow(BigInt(p), static_cast<unsigned long>(r));
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw std::logic_error("syndrome-space sum not divisible by p^r");
    return q;
}

std::vector<int> zero_column_profile(const PrimeLinearCode& ternary_base) {
    if (ternary_base.p != 3) throw std::invalid_argument("profile defined for ternary bases");
    const int r = ternary_base.rows();
    long total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    std::vector<int> profile(static_cast<std::size_t>(total), 0);
    for (long id = 0; id < total; ++id) {
        GfVec a = syndrome_from_id(id, 3, r);
        int count = 0;
        for (int i = 0; i < ternary_base.length; ++i) {
            long dot = 0;
            for (int row = 0; row < r; ++row)
                dot += static_cast<long>(a[static_cast<std::size_t>(row)]) *
                       ternary_base.check[static_cast<std::size_t>(row)]
                                         [static_cast<std::size_t>(i)];
            if (dot % 3 == 0) ++count;
        }
        profile[static_cast<std::size_t>(id)] = count;
    }
    return profile;
}

BigInt doubled_syndrome_count(const PrimeLinearCode& ternary_base, const GfVec& b) {
    const int r = ternary_base.rows();
    if (static_cast<int>(b.size()) != r)
        throw std::invalid_argument("syndrome length must match check rows");
    auto profile = zero_column_profile(ternary_base);
    // Bucket 4^{profile(a)} by the character exponent <b, a>.
    std::vector<BigInt> bucket(3, BigInt(0));
    for (long id = 0; id < static_cast<long>(profile.size()); ++id) {
        GfVec a = syndrome_from_id(id, 3, r);
        long dot = 0;
        for (int row = 0; row < r; ++row)
            dot += static_cast<long>(b[static_cast<std::size_t>(row)]) *
                   a[static_cast<std::size_t>(row)];
        bucket[static_cast<std::size_t>(dot % 3)] +=
            ipow(BigInt(4), static_cast<unsigned long>(profile[static_cast<std::size_t>(id)]));
    }
    if (bucket[1] != bucket[2])
        throw std::logic_error("character sum must be rational");
    BigInt numer = bucket[0] - bucket[1];
    BigInt denom(static_cast<long>(profile.size()));
    BigInt q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0) throw std::logic_error("character sum not divisible by 3^r");
    return q;
}

std::vector<BigInt> doubled_syndrome_counts_all(const PrimeLinearCode& ternary_base) {
    const int r = ternary_base.rows();
    long total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(total));
    for (long id = 0; id < total; ++id)
        counts.push_back(doubled_syndrome_count(ternary_base, syndrome_from_id(id, 3, r)));
    return counts;
}

std::vector<BigInt> doubled_syndrome_counts_brute(const PrimeLinearCode& ternary_base,
                                                  std::uint64_t cap) {
    const int n = 2 * ternary_base.length;
    if (n > kMaxWordLength) throw std::invalid_argument("lifted length exceeds word limit");
    check_cap(std::uint64_t{1} << n, cap, "doubled syndrome sweep");
    const int r = ternary_base.rows();
    long total = 1;
    for (int i = 0; i < r; ++i) total *= 3;
    std::vector<BigInt> counts(static_cast<std::size_t>(total), BigInt(0));
    // Per-bit syndrome contributions of the doubled matrix.
    std::vector<GfVec> col(static_cast<std::size_t>(n));
    for (int i = 0; i < ternary_base.length; ++i) {
        GfVec h = ternary_base.column(i);
        GfVec h2 = h;
        for (auto& v : h2) v = 2 * v % 3;
        col[static_cast<std::size_t>(2 * i)] = h2;
        col[static_cast<std::size_t>(2 * i + 1)] = h;
    }
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        GfVec s(static_cast<std::size_t>(r), 0);
        for (int i = 0; i < n; ++i)
            if ((x >> i) & 1u)
                for (int row = 0; row < r; ++row)
                    s[static_cast<std::size_t>(row)] =
                        (s[static_cast<std::size_t>(row)] +
                         col[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)]) %
                        3;
        counts[static_cast<std::size_t>(syndrome_id(s, 3))] += 1;
    }
    return counts;
}

BigRat doubled_zero_lower_bound(int l, int r) {
    if (r < 0 || r >= l)
        throw std::invalid_argument("bound requires fewer check rows than base columns");
    BigRat three_r(ipow(BigInt(3), static_cast<unsigned long>(r)));
    return BigRat(ipow(BigInt(4), static_cast<unsigned long>(l))) / three_r +
           2 * BigRat(ipow(BigInt(4), static_cast<unsigned long>(r))) / three_r -
           make_rat(8, 3);
}

Cyclo character_pair_product(const GfVec& a, const GfVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mismatched lengths");
    long dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += static_cast<long>(a[i]) * b[i];
    dot %= 3;
    Cyclo f = Cyclo::integer(3, 1);
    f += Cyclo::root_power(3, -dot);
    f += Cyclo::root_power(3, -2 * dot);
    f += Cyclo::root_power(3, -3 * dot);
    return f;
}

BigRat partition_count_ceiling(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
    long numer_exp = static_cast<long>(m) * (n - 1);
    if (numer_exp % (m + 1) != 0)
        throw std::invalid_argument("m(n-1) must be divisible by m+1 for this form");
    BigInt main = pow2(static_cast<unsigned long>(static_cast<long>(m) * n));
    BigInt tail = BigInt(static_cast<long>(m) * n) *
                  pow2(static_cast<unsigned long>(numer_exp / (m + 1)));
    return make_rat(main + tail, static_cast<long>(m) * n + 1);
}

AssignmentScan scan_symbol_assignments(const CompleteWeightEnumerator& cwe,
                                       const std::vector<BigInt>& class_sizes, bool full) {
    const int p = cwe.p;
    if (static_cast<int>(class_sizes.size()) != p)
        throw std::invalid_argument("need exactly p classes");
    AssignmentScan scan;
    scan.by_zero_class.assign(static_cast<std::size_t>(p), BigInt(0));
    std::vector<bool> seen_value(static_cast<std::size_t>(p), false);
    bool consistent = true;

    std::vector<int> perm(static_cast<std::size_t>(p));
    std::iota(perm.begin(), perm.end(), 0);
    if (full) {
        do {
            // perm[k] = symbol class k receives; symbol 0 goes to the class
            // with perm[k] == 0.
            BigInt v = count_from_partition(cwe, class_sizes, perm);
            int zero_class = 0;
            while (perm[static_cast<std::size_t>(zero_class)] != 0) ++zero_class;
            if (!seen_value[static_cast<std::size_t>(zero_class)]) {
                scan.by_zero_class[static_cast<std::size_t>(zero_class)] = v;
                seen_value[static_cast<std::size_t>(zero_class)] = true;
            } else if (scan.by_zero_class[static_cast<std::size_t>(zero_class)] != v) {
                consistent = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        scan.zero_class_determines = consistent;
    } else {
        for (int zero_class = 0; zero_class < p; ++zero_class) {
            std::vector<int> assign(static_cast<std::size_t>(p));
            int next = 1;
            for (int k = 0; k < p; ++k)
                assign[static_cast<std::size_t>(k)] = (k == zero_class) ? 0 : next++;
            scan.by_zero_class[static_cast<std::size_t>(zero_class)] =
                count_from_partition(cwe, class_sizes, assign);
        }
    }
    const BigInt* max = &scan.by_zero_class[0];
    for (const auto& v : scan.by_zero_class)
        if (v > *max) max = &v;
    scan.max_at_largest = (*max == scan.by_zero_class[0]);
    return scan;
}

} // namespace grain
