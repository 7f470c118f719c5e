#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace fbc {

// Fixed-length word over the alphabet {0, ..., q-1}, packed base-q with
// position 0 as the most significant digit.  For q = 2 the packed value is
// the usual n-bit integer, so numeric order equals lexicographic order of
// the symbol string and popcount gives the Hamming weight.
struct Word {
    int n = 0;
    int q = 2;
    std::uint64_t packed = 0;

    Word() = default;

    Word(int n_, int q_, std::uint64_t packed_) : n(n_), q(q_), packed(packed_) {
        if (n_ < 0 || q_ < 2) throw std::invalid_argument("Word: bad dimensions");
    }

    static std::uint64_t space_size(int n, int q) {
        std::uint64_t s = 1;
        for (int i = 0; i < n; ++i) {
            if (s > (UINT64_MAX / static_cast<std::uint64_t>(q)))
                throw std::overflow_error("Word: q^n does not fit in 64 bits");
            s *= static_cast<std::uint64_t>(q);
        }
        return s;
    }

    int symbol(int i) const {
        std::uint64_t v = packed;
        for (int j = n - 1; j > i; --j) v /= static_cast<std::uint64_t>(q);
        return static_cast<int>(v % static_cast<std::uint64_t>(q));
    }

    Word with_symbol(int i, int s) const {
        std::uint64_t place = 1;
        for (int j = n - 1; j > i; --j) place *= static_cast<std::uint64_t>(q);
        std::uint64_t cur = (packed / place) % static_cast<std::uint64_t>(q);
        return Word(n, q, packed + (static_cast<std::uint64_t>(s) - cur) * place);
    }

    int weight() const {
        int w = 0;
        std::uint64_t v = packed;
        for (int i = 0; i < n; ++i) {
            if (v % q != 0) ++w;
            v /= static_cast<std::uint64_t>(q);
        }
        return w;
    }

    std::string str() const {
        std::string s(static_cast<std::size_t>(n), '0');
        std::uint64_t v = packed;
        for (int i = n - 1; i >= 0; --i) {
            s[static_cast<std::size_t>(i)] = static_cast<char>('0' + v % q);
            v /= static_cast<std::uint64_t>(q);
        }
        return s;
    }

    static Word from_string(const std::string& s, int q) {
        std::uint64_t v = 0;
        for (char c : s) {
            int d = c - '0';
            if (d < 0 || d >= q) throw std::invalid_argument("Word: symbol out of range: " + s);
            v = v * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(d);
        }
        return Word(static_cast<int>(s.size()), q, v);
    }

    // Concatenation: this followed by tail.
    Word concat(const Word& tail) const {
        if (tail.q != q) throw std::invalid_argument("Word::concat: alphabet mismatch");
        std::uint64_t place = space_size(tail.n, q);
        return Word(n + tail.n, q, packed * place + tail.packed);
    }

    Word prefix(int len) const {
        std::uint64_t v = packed;
        for (int j = 0; j < n - len; ++j) v /= static_cast<std::uint64_t>(q);
        return Word(len, q, v);
    }

    Word suffix(int len) const {
        std::uint64_t place = space_size(len, q);
        return Word(len, q, packed % place);
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.n == b.n && a.q == b.q && a.packed == b.packed;
    }
    friend auto operator<=>(const Word& a, const Word& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.q <=> b.q; c != 0) return c;
        return a.packed <=> b.packed;
    }
};

}  // namespace fbc
