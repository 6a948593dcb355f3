#include "perfect/core.hpp"

#include <algorithm>

namespace perfect {

namespace {

// Word rotated i positions to the right (symbols shift toward the front).
Word rotated_word(const Word& w, int i) {
    const int n = static_cast<int>(w.size());
    Word out(w.size());
    for (int m = 0; m < n; ++m) out[m] = w[(m + i) % n];
    return out;
}

// True iff w is (prefix of length r) repeated, with a partial copy at the end.
bool has_period(const Word& w, int r) {
    for (std::size_t m = r; m < w.size(); ++m)
        if (w[m] != w[m - r]) return false;
    return true;
}

void require_residue_zero(const PairNK& a) {
    if (a.residue != 0) throw std::domain_error("operation requires residue 0");
}

}  // namespace

std::strong_ordering cmp_succ(const PairNK& a, const PairNK& b, const Params& p) {
    check_pair(a, p);
    check_pair(b, p);
    if (a.residue != b.residue)
        return a.residue < b.residue ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    if (a.word == b.word) return std::strong_ordering::equal;
    return std::lexicographical_compare(b.word.begin(), b.word.end(),
                                        a.word.begin(), a.word.end())
               ? std::strong_ordering::greater
               : std::strong_ordering::less;
}

PairNK rotate_right(const PairNK& a, const Params& p) {
    check_pair(a, p);
    return {rotated_word(a.word, 1), (a.residue + 1) % p.k};
}

PairNK rotate_left(const PairNK& a, const Params& p) {
    check_pair(a, p);
    return {rotated_word(a.word, p.n - 1), (a.residue + p.k - 1) % p.k};
}

std::vector<PairNK> rotation_class(const PairNK& a, const Params& p) {
    check_pair(a, p);
    std::vector<PairNK> out;
    const int span = std::max(p.n, p.k);
    out.reserve(span);
    for (int i = 0; i < span; ++i)
        out.push_back({rotated_word(a.word, i), (a.residue + i) % p.k});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_maximal(const PairNK& a, const Params& p) {
    check_pair(a, p);
    if (a.residue == 0) {
        if (p.mode == Mode::NDividesK) return true;
        // k|n, residue 0: only rotations by multiples of k land back on
        // residue 0; any other rotation is automatically smaller.
        for (int i = p.k; i < p.n; i += p.k) {
            Word rot = rotated_word(a.word, i);
            if (a.word < rot) return false;
        }
        return true;
    }
    const int span = std::max(p.n, p.k);
    for (int i = 1; i < span; ++i) {
        PairNK rot{rotated_word(a.word, i), (a.residue + i) % p.k};
        if (cmp_succ(rot, a, p) == std::strong_ordering::greater) return false;
    }
    return true;
}

LyndonPair reduce(const PairNK& a, const Params& p) {
    check_pair(a, p);
    require_residue_zero(a);
    if (p.mode != Mode::KDividesN)
        throw std::domain_error("reduce requires k to divide n");
    for (int q = p.k; q <= p.n; q += p.k) {
        if (p.n % q != 0) continue;
        if (has_period(a.word, q))
            return {Word(a.word.begin(), a.word.begin() + q)};
    }
    return {a.word};  // unreachable: q = n always succeeds
}

LyndonPair expand(const PairNK& a, const Params& p) {
    check_pair(a, p);
    require_residue_zero(a);
    if (p.mode != Mode::NDividesK && p.n != p.k)
        throw std::domain_error("expand requires n to divide k");
    Word out;
    out.reserve(static_cast<std::size_t>(p.k));
    for (int t = 0; t < p.k / p.n; ++t)
        out.insert(out.end(), a.word.begin(), a.word.end());
    return {out};
}

PairNK theta(const PairNK& a, const Params& p) {
    check_pair(a, p);
    require_residue_zero(a);
    // i is the 1-based position of the last nonzero symbol; everything after
    // it is 0. The paper's two divisibility branches collapse into
    // j = i + ((n - i) mod k), q = floor(n / j).
    int i = 0;
    for (int m = p.n; m >= 1; --m) {
        if (a.word[m - 1] != 0) {
            i = m;
            break;
        }
    }
    if (i == 0) throw std::domain_error("theta is undefined on the all-zero word");
    const int j = i + ((p.n - i) % p.k);
    const int q = p.n / j;

    Word block(a.word.begin(), a.word.begin() + i);
    block[i - 1] -= 1;
    block.resize(static_cast<std::size_t>(j), static_cast<Symbol>(p.s - 1));

    Word out;
    out.reserve(static_cast<std::size_t>(p.n));
    for (int t = 0; t < q; ++t) out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), a.word.begin(), a.word.begin() + (p.n - q * j));
    return {out, 0};
}

PairNK theta_preimage(const PairNK& a, const Params& p) {
    check_pair(a, p);
    require_residue_zero(a);
    const Symbol top = static_cast<Symbol>(p.s - 1);
    if (std::all_of(a.word.begin(), a.word.end(),
                    [&](Symbol x) { return x == top; }))
        throw std::domain_error("theta has no preimage at the all-(s-1) word");

    if (p.mode == Mode::NDividesK && p.n != p.k) {
        // theta is a bijection here: undo "decrement position u, fill the
        // tail with s-1" directly.
        int u = p.n;
        while (a.word[u - 1] == top) --u;
        Word out(a.word.begin(), a.word.begin() + u);
        out[u - 1] += 1;
        out.resize(static_cast<std::size_t>(p.n), 0);
        return {out, 0};
    }

    // k|n: find the smallest multiple r of k such that the word factors as
    // (A_r)^w A_v with A_r = A_u (s-1)^(r-u), a_u < s-1 and r-k <= u <= r;
    // the predecessor is then A_{u-1}(a_u + 1) 0^(n-u).
    for (int r = p.k; r <= p.n; r += p.k) {
        if (!has_period(a.word, r)) continue;
        int u = r;
        while (u >= 1 && a.word[u - 1] == top) --u;
        if (u < 1 || u < r - p.k) continue;
        Word out(a.word.begin(), a.word.begin() + u);
        out[u - 1] += 1;
        out.resize(static_cast<std::size_t>(p.n), 0);
        PairNK candidate{out, 0};
        if (theta(candidate, p).word == a.word) return candidate;
    }
    throw NoPredecessorError("no theta preimage: the pair admits no valid factorization");
}

}  // namespace perfect
