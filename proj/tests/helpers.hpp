#ifndef PERFECT_TEST_HELPERS_HPP
#define PERFECT_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "perfect/types.hpp"

namespace perfect::testing {

// "011010" -> Word, digits only (test alphabets are all <= 10).
inline Word w(const std::string& digits) {
    Word out;
    out.reserve(digits.size());
    for (char c : digits) out.push_back(static_cast<Symbol>(c - '0'));
    return out;
}

inline std::string str(const Word& word) {
    std::string out;
    for (Symbol a : word) out.push_back(static_cast<char>('0' + a));
    return out;
}

inline PairNK pair0(const std::string& digits) { return {w(digits), 0}; }

// All words of length n over {0..s-1}, in decreasing lexicographic order.
inline std::vector<Word> all_words_desc(int s, int n) {
    std::vector<Word> out;
    Word cur(static_cast<std::size_t>(n), static_cast<Symbol>(s - 1));
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == 0) --i;
        if (i < 0) break;
        cur[i] -= 1;
        for (int m = i + 1; m < n; ++m) cur[m] = static_cast<Symbol>(s - 1);
    }
    return out;
}

// Valid k values for a given n: all divisors plus a few multiples.
inline std::vector<int> valid_k(int n, int max_multiple = 2) {
    std::vector<int> ks;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) ks.push_back(k);
    for (int t = 2; t <= max_multiple; ++t) ks.push_back(n * t);
    return ks;
}

}  // namespace perfect::testing

#endif
