#include "grain/codebook.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grain {

bool CodeBook::contains(std::uint32_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

void CodeBook::normalize() {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

CodeBook read_codebook(std::istream& in) {
    CodeBook code;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t");
        std::string token = line.substr(start, end - start + 1);
        std::uint32_t w;
        try {
            w = word_from_string(token);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (code.length == 0)
            code.length = static_cast<int>(token.size());
        else if (static_cast<int>(token.size()) != code.length)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": codeword length " + std::to_string(token.size()) +
                                        " differs from earlier length " +
                                        std::to_string(code.length));
        code.words.push_back(w);
    }
    if (code.length == 0) throw std::invalid_argument("codebook contains no codewords");
    code.normalize();
    return code;
}

CodeBook read_codebook_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open codebook file: " + path);
    return read_codebook(in);
}

void write_codebook(std::ostream& out, const CodeBook& code) {
    for (std::uint32_t w : code.words) out << word_to_string(w, code.length) << '\n';
}

void write_codebook_file(const std::string& path, const CodeBook& code) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    write_codebook(out, code);
}

VerifyResult is_t_correcting(const CodeBook& code, const ErrorModel& model) {
    const int n = code.length;
    const std::size_t m = code.words.size();
    std::vector<std::vector<std::uint32_t>> balls(m);
    for (std::size_t i = 0; i < m; ++i) balls[i] = error_ball(code.words[i], n, model);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& smaller = balls[i].size() <= balls[j].size() ? balls[i] : balls[j];
            std::uint32_t other = balls[i].size() <= balls[j].size() ? code.words[j]
                                                                     : code.words[i];
            for (std::uint32_t z : smaller) {
                if (in_ball(other, z, n, model))
                    return {false, code.words[i], code.words[j], z};
            }
        }
    }
    return {};
}

DecodeResult brute_force_decode(const CodeBook& code, std::uint32_t received,
                                const ErrorModel& model) {
    DecodeResult r;
    for (std::uint32_t w : code.words) {
        if (in_ball(w, received, code.length, model)) {
            ++r.matches;
            if (r.matches == 1)
                r.codeword = w;
            else
                r.codeword.reset();
        }
    }
    return r;
}

bool single_grain_sufficient_pair(std::uint32_t x, std::uint32_t y, int n) {
    std::uint32_t d = (x ^ y) & length_mask(n);
    int dist = weight(d);
    if (dist >= 3) return true;
    if (dist == 1) return d == 1u; // differ exactly in position 1
    if (dist != 2) return false;   // identical words never qualify
    // Need adjacent positions (i, i+1) with 2 <= i <= n-1 where one word reads
    // (0,0) and the other (1,1).
    for (int i = 2; i <= n - 1; ++i) {
        std::uint32_t pair_mask = 3u << (i - 1);
        if (d != pair_mask) continue;
        std::uint32_t xa = (x >> (i - 1)) & 3u;
        std::uint32_t ya = (y >> (i - 1)) & 3u;
        if ((xa == 0u && ya == 3u) || (xa == 3u && ya == 0u)) return true;
    }
    return false;
}

bool single_grain_sufficient(const CodeBook& code) {
    const auto& w = code.words;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!single_grain_sufficient_pair(w[i], w[j], code.length)) return false;
    return true;
}

CodeBook prepend_bit_lift(const CodeBook& code) {
    check_length(code.length + 1);
    CodeBook out;
    out.length = code.length + 1;
    out.words.reserve(code.words.size() * 2);
    for (std::uint32_t w : code.words) {
        out.words.push_back(w << 1);
        out.words.push_back((w << 1) | 1u);
    }
    out.normalize();
    return out;
}

CodeBook shorten_first_bit(const CodeBook& code) {
    if (code.length < 2) throw std::invalid_argument("cannot shorten a length-1 code");
    CodeBook out;
    out.length = code.length - 1;
    out.words.reserve(code.words.size());
    for (std::uint32_t w : code.words) out.words.push_back(w >> 1);
    out.normalize();
    return out;
}

} // namespace grain
