#include "grain/gfp.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grain {

void check_prime(int p) {
    if (p < 2) throw std::invalid_argument("field size must be a prime >= 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("field size must be prime, got " + std::to_string(p));
}

GfVec PrimeLinearCode::column(int i) const {
    GfVec c(check.size());
    for (std::size_t r = 0; r < check.size(); ++r) c[r] = check[r][static_cast<std::size_t>(i)];
    return c;
}

GfVec PrimeLinearCode::syndrome(const GfVec& word) const {
    if (static_cast<int>(word.size()) != length)
        throw std::invalid_argument("word length does not match code length");
    GfVec s(check.size(), 0);
    for (std::size_t r = 0; r < check.size(); ++r) {
        long acc = 0;
        for (int i = 0; i < length; ++i)
            acc += static_cast<long>(check[r][static_cast<std::size_t>(i)]) *
                   word[static_cast<std::size_t>(i)];
        s[r] = static_cast<int>(acc % p);
    }
    return s;
}

PrimeLinearCode hamming_code(int p, int r) {
    check_prime(p);
    if (r < 2) throw std::invalid_argument("need at least 2 check rows");
    std::vector<GfVec> columns;
    // Projective representatives: first nonzero coordinate equals 1.
    long total = 1;
    for (int i = 0; i < r; ++i) total *= p;
    for (long v = 1; v < total; ++v) {
        GfVec c(static_cast<std::size_t>(r));
        long x = v;
        for (int i = r - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
            x /= p;
        }
        int first = 0;
        while (c[static_cast<std::size_t>(first)] == 0) ++first;
        if (c[static_cast<std::size_t>(first)] != 1) continue;
        columns.push_back(c);
    }
    std::sort(columns.begin(), columns.end());
    PrimeLinearCode code;
    code.p = p;
    code.length = static_cast<int>(columns.size());
    code.designed_t = 1;
    code.check.assign(static_cast<std::size_t>(r), GfVec(columns.size(), 0));
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (int row = 0; row < r; ++row)
            code.check[static_cast<std::size_t>(row)][i] = columns[i][static_cast<std::size_t>(row)];
    return code;
}

PrimeLinearCode repetition_code(int p, int l, int t) {
    check_prime(p);
    if (l < 2) throw std::invalid_argument("repetition length must be >= 2");
    if (l < 2 * t + 1)
        throw std::invalid_argument("repetition length " + std::to_string(l) +
                                    " cannot correct " + std::to_string(t) + " errors");
    PrimeLinearCode code;
    code.p = p;
    code.length = l;
    code.designed_t = t;
    code.check.assign(static_cast<std::size_t>(l - 1), GfVec(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l - 1; ++i) {
        code.check[static_cast<std::size_t>(i)][0] = 1;
        code.check[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = p - 1;
    }
    return code;
}

PrimeLinearCode read_check_matrix(std::istream& in, int designed_t) {
    std::vector<std::vector<long>> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long> row;
        long v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof())
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": matrix entries must be integers");
        if (!row.empty()) tokens.push_back(row);
    }
    if (tokens.empty() || tokens[0].size() != 3)
        throw std::invalid_argument("matrix file must start with a \"p r l\" header");
    PrimeLinearCode code;
    code.p = static_cast<int>(tokens[0][0]);
    int r = static_cast<int>(tokens[0][1]);
    code.length = static_cast<int>(tokens[0][2]);
    code.designed_t = designed_t;
    check_prime(code.p);
    if (r < 1 || code.length < 1 || static_cast<int>(tokens.size()) != r + 1)
        throw std::invalid_argument("matrix file must contain exactly r rows after the header");
    for (int row = 1; row <= r; ++row) {
        if (static_cast<int>(tokens[static_cast<std::size_t>(row)].size()) != code.length)
            throw std::invalid_argument("matrix row " + std::to_string(row) + " has " +
                                        std::to_string(tokens[static_cast<std::size_t>(row)].size()) +
                                        " entries, expected " + std::to_string(code.length));
        GfVec v(static_cast<std::size_t>(code.length));
        for (int i = 0; i < code.length; ++i) {
            long e = tokens[static_cast<std::size_t>(row)][static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(i)] = static_cast<int>(((e % code.p) + code.p) % code.p);
        }
        code.check.push_back(std::move(v));
    }
    return code;
}

PrimeLinearCode read_check_matrix_file(const std::string& path, int designed_t) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_check_matrix(in, designed_t);
}

void write_check_matrix(std::ostream& out, const PrimeLinearCode& code) {
    out << code.p << ' ' << code.rows() << ' ' << code.length << '\n';
    for (const auto& row : code.check) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
}

namespace {

int inverse_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
    }
    return r;
}

} // namespace

int row_reduce(GfMat& m, int p) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[pivot]);
        int inv = inverse_mod(m[static_cast<std::size_t>(rank)][col], p);
        for (std::size_t i = 0; i < cols; ++i)
            m[static_cast<std::size_t>(rank)][i] = m[static_cast<std::size_t>(rank)][i] * inv % p;
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == static_cast<std::size_t>(rank) || m[row][col] == 0) continue;
            int f = m[row][col];
            for (std::size_t i = 0; i < cols; ++i)
                m[row][i] = ((m[row][i] - f * m[static_cast<std::size_t>(rank)][i]) % p + p) % p;
        }
        ++rank;
    }
    m.resize(static_cast<std::size_t>(rank), GfVec(cols, 0));
    return rank;
}

int matrix_rank(GfMat m, int p) { return row_reduce(m, p); }

std::vector<GfVec> solve_coset(const PrimeLinearCode& code, const GfVec& syndrome,
                               std::uint64_t cap) {
    if (static_cast<int>(syndrome.size()) != code.rows())
        throw std::invalid_argument("syndrome length does not match check rows");
    GfMat aug = code.check;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(syndrome[r]);
    int rank = row_reduce(aug, code.p);
    std::size_t cols = static_cast<std::size_t>(code.length);
    std::vector<int> pivot_col(static_cast<std::size_t>(rank), -1);
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        std::size_t c = 0;
        while (c <= cols && aug[static_cast<std::size_t>(r)][c] == 0) ++c;
        if (c == cols) return {}; // 0 = nonzero syndrome: inconsistent
        pivot_col[static_cast<std::size_t>(r)] = static_cast<int>(c);
        is_pivot[c] = true;
    }
    std::vector<int> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        count *= static_cast<std::uint64_t>(code.p);
        check_cap(count, cap, "coset enumeration");
    }

    std::vector<GfVec> out;
    out.reserve(count);
    GfVec word(cols, 0);
    std::vector<int> free_vals(free_cols.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < free_cols.size(); ++i)
            word[static_cast<std::size_t>(free_cols[i])] = free_vals[i];
        for (int r = rank - 1; r >= 0; --r) {
            long acc = aug[static_cast<std::size_t>(r)][cols]; // rhs
            for (std::size_t c = 0; c < cols; ++c) {
                if (static_cast<int>(c) == pivot_col[static_cast<std::size_t>(r)]) continue;
                acc -= static_cast<long>(aug[static_cast<std::size_t>(r)][c]) * word[c];
            }
            word[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
                static_cast<int>(((acc % code.p) + code.p) % code.p);
        }
        out.push_back(word);
        std::size_t i = free_vals.size();
        while (i > 0 && free_vals[i - 1] == code.p - 1) free_vals[--i] = 0;
        if (i == 0) break;
        ++free_vals[i - 1];
    }
    return out;
}

std::vector<GfVec> dual_codewords(const PrimeLinearCode& code) {
    GfMat basis = code.check;
    int rank = row_reduce(basis, code.p);
    std::vector<GfVec> out;
    std::vector<int> coeff(static_cast<std::size_t>(rank), 0);
    while (true) {
        GfVec word(static_cast<std::size_t>(code.length), 0);
        for (int r = 0; r < rank; ++r) {
            if (coeff[static_cast<std::size_t>(r)] == 0) continue;
            for (int c = 0; c < code.length; ++c)
                word[static_cast<std::size_t>(c)] =
                    (word[static_cast<std::size_t>(c)] +
                     coeff[static_cast<std::size_t>(r)] *
                         basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) %
                    code.p;
        }
        out.push_back(std::move(word));
        std::size_t i = coeff.size();
        while (i > 0 && coeff[i - 1] == code.p - 1) coeff[--i] = 0;
        if (i == 0) break;
        ++coeff[i - 1];
    }
    return out;
}

namespace {

// Scans all words of weight w for codewords; returns true if one exists.
bool weight_w_codeword_exists(const PrimeLinearCode& code, int w) {
    std::vector<int> positions(static_cast<std::size_t>(w));
    std::vector<int> values(static_cast<std::size_t>(w), 1);
    // Iterate position subsets via recursion, values via odometer.
    struct Rec {
        const PrimeLinearCode& code;
        int w;
        bool found = false;
        std::vector<int> pos;
        Rec(const PrimeLinearCode& c, int wq) : code(c), w(wq) {}
        void positions_from(int start) {
            if (found) return;
            if (static_cast<int>(pos.size()) == w) {
                values_scan();
                return;
            }
            for (int i = start; i < code.length; ++i) {
                pos.push_back(i);
                positions_from(i + 1);
                pos.pop_back();
                if (found) return;
            }
        }
        void values_scan() {
            std::vector<int> val(pos.size(), 1);
            while (true) {
                GfVec s(static_cast<std::size_t>(code.rows()), 0);
                for (int r = 0; r < code.rows(); ++r) {
                    long acc = 0;
                    for (std::size_t i = 0; i < pos.size(); ++i)
                        acc += static_cast<long>(
                                   code.check[static_cast<std::size_t>(r)]
                                             [static_cast<std::size_t>(pos[i])]) *
                               val[i];
                    s[static_cast<std::size_t>(r)] = static_cast<int>(acc % code.p);
                }
                if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
                    found = true;
                    return;
                }
                std::size_t i = val.size();
                while (i > 0 && val[i - 1] == code.p - 1) val[--i] = 1;
                if (i == 0) return;
                ++val[i - 1];
            }
        }
    } rec(code, w);
    rec.positions_from(0);
    return rec.found;
}

} // namespace

DistanceResult min_distance(const PrimeLinearCode& code, std::uint64_t cap) {
    int rank = matrix_rank(code.check, code.p);
    int dim = code.length - rank;
    std::uint64_t size = 1;
    bool enumerable = true;
    for (int i = 0; i < dim && enumerable; ++i) {
        if (size > cap / static_cast<std::uint64_t>(code.p))
            enumerable = false;
        else
            size *= static_cast<std::uint64_t>(code.p);
    }
    if (enumerable && size <= cap) {
        // Full enumeration of the code.
        auto words = solve_coset(code, GfVec(static_cast<std::size_t>(code.rows()), 0), cap);
        int best = code.length + 1;
        for (const auto& w : words) {
            int wt = 0;
            for (int v : w) wt += v != 0;
            if (wt > 0 && wt < best) best = wt;
        }
        return {best, true};
    }
    // Certify up to twice the designed radius by scanning light words.
    for (int w = 1; w <= 2 * code.designed_t; ++w)
        if (weight_w_codeword_exists(code, w)) return {w, true};
    return {2 * code.designed_t + 1, false};
}

long syndrome_id(const GfVec& s, int p) {
    long id = 0;
    for (std::size_t i = s.size(); i-- > 0;) id = id * p + s[i];
    return id;
}

GfVec syndrome_from_id(long id, int p, int r) {
    GfVec s(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        s[static_cast<std::size_t>(i)] = static_cast<int>(id % p);
        id /= p;
    }
    return s;
}

} // namespace grain
