#ifndef PERFECT_TYPES_HPP
#define PERFECT_TYPES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfect {

using Symbol = std::uint32_t;

// A word over the alphabet {0, .., s-1}. Symbols are plain integers; turning
// them into characters is the CLI's business.
using Word = std::vector<Symbol>;

// Raised when an output or search would exceed a configured size limit.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by theta_preimage when no valid factorization exists.
struct NoPredecessorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Mode {
    KDividesN,  // k | n (also covers n == k)
    NDividesK,  // n | k with n < k
};

// Validated (s, n, k) triple. Construction fails unless k|n or n|k.
struct Params {
    int s;
    int n;
    int k;
    Mode mode;

    Params(int s_, int n_, int k_) : s(s_), n(n_), k(k_) {
        if (s < 2) throw std::invalid_argument("alphabet size must be at least 2");
        if (n < 1) throw std::invalid_argument("word length must be at least 1");
        if (k < 1) throw std::invalid_argument("modulus must be at least 1");
        if (n % k == 0) {
            mode = Mode::KDividesN;
        } else if (k % n == 0) {
            mode = Mode::NDividesK;
        } else {
            throw std::invalid_argument("k must divide n or n must divide k");
        }
    }
};

// An element of Sigma^n x Z_k: a word together with a starting-residue class.
struct PairNK {
    Word word;
    int residue = 0;

    bool operator==(const PairNK&) const = default;
    auto operator<=>(const PairNK&) const = default;
};

// Residue-0 pair whose word is the reduction (k|n) or expansion (n|k) of a
// maximal pair. The word length is a multiple of k dividing n, or exactly k.
struct LyndonPair {
    Word word;

    bool operator==(const LyndonPair&) const = default;
};

inline void check_word(const Word& w, const Params& p) {
    for (Symbol a : w)
        if (a >= static_cast<Symbol>(p.s))
            throw std::invalid_argument("symbol out of range for alphabet size " +
                                        std::to_string(p.s));
}

inline void check_pair(const PairNK& a, const Params& p) {
    if (static_cast<int>(a.word.size()) != p.n)
        throw std::invalid_argument("pair word length does not match n");
    if (a.residue < 0 || a.residue >= p.k)
        throw std::invalid_argument("pair residue out of range");
    check_word(a.word, p);
}

}  // namespace perfect

#endif
