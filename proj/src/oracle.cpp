#include "perfect/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace perfect {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kMax / base) throw CapacityError("s^n overflows 64 bits");
        out *= base;
    }
    return out;
}

Word decode(std::uint64_t code, int n, int s) {
    Word w(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(code % s);
        code /= s;
    }
    return w;
}

// Greatest-rotation Lyndon word in the paper's convention: strictly greater
// than every nontrivial rotation (which also forces aperiodicity).
bool dominates_rotations(const Word& w) {
    const int d = static_cast<int>(w.size());
    for (int i = 1; i < d; ++i) {
        bool greater = false;
        for (int m = 0; m < d; ++m) {
            Symbol rot = w[(m + i) % d];
            if (w[m] != rot) {
                greater = w[m] > rot;
                break;
            }
        }
        if (!greater) return false;
    }
    return true;
}

// Steps an odometer word downward: 210 -> 20(s-1) style decrement. Returns
// false once the all-zero word rolls over.
bool prev_word(Word& w, int s) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        if (w[i] > 0) {
            w[i] -= 1;
            std::fill(w.begin() + i + 1, w.end(), static_cast<Symbol>(s - 1));
            return true;
        }
    }
    return false;
}

}  // namespace

PerfectnessReport check_perfect(const Word& x, const Params& p) {
    check_word(x, p);
    PerfectnessReport report{p};
    report.input_length = x.size();

    const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(p.s), p.n);
    std::uint64_t expected_len = words;
    if (expected_len > std::numeric_limits<std::uint64_t>::max() /
                           static_cast<std::uint64_t>(p.k))
        throw CapacityError("s^n*k overflows 64 bits");
    expected_len *= static_cast<std::uint64_t>(p.k);

    if (x.size() != expected_len) {
        report.violations.push_back({ViolationKind::WrongLength,
                                     {},
                                     {},
                                     x.size(),
                                     expected_len});
        return report;
    }

    const std::uint64_t len = x.size();
    // Rolling window codes over the circular input; exact, no hashing.
    std::vector<std::vector<std::uint64_t>> occ(words);
    std::uint64_t code = 0;
    for (int i = 0; i < p.n; ++i) code = code * p.s + x[i % len];
    const std::uint64_t high = words / static_cast<std::uint64_t>(p.s);
    for (std::uint64_t i = 0; i < len; ++i) {
        occ[code].push_back(i);
        code = (code - x[i] * high) * p.s + x[(i + p.n) % len];
    }

    for (std::uint64_t c = 0; c < words; ++c) {
        const auto& positions = occ[c];
        Word w = decode(c, p.n, p.s);
        if (!positions.empty()) report.occurrences[w] = positions;
        if (positions.size() != static_cast<std::size_t>(p.k)) {
            report.violations.push_back({ViolationKind::WrongCount, w, positions,
                                         positions.size(),
                                         static_cast<std::uint64_t>(p.k)});
            continue;
        }
        std::vector<char> seen(static_cast<std::size_t>(p.k), 0);
        bool collision = false;
        for (std::uint64_t pos : positions) {
            char& slot = seen[pos % p.k];
            if (slot) collision = true;
            slot = 1;
        }
        if (collision)
            report.violations.push_back({ViolationKind::ResidueCollision, w,
                                         positions, positions.size(),
                                         static_cast<std::uint64_t>(p.k)});
    }
    report.is_perfect = report.violations.empty();
    return report;
}

namespace {

struct Dfs {
    const Params& p;
    std::uint64_t len;
    std::uint64_t words;
    std::uint64_t high;  // s^(n-1)
    Word x;
    std::vector<char> used;  // (window code, residue) pairs already placed

    bool run(std::uint64_t depth, std::uint64_t code) {
        if (depth == len) return check_perfect(x, p).is_perfect;
        for (int a = p.s - 1; a >= 0; --a) {
            x[depth] = static_cast<Symbol>(a);
            std::uint64_t next_code = code;
            std::uint64_t slot = 0;
            bool placed = false;
            if (depth + 1 >= static_cast<std::uint64_t>(p.n)) {
                const std::uint64_t start = depth + 1 - p.n;
                next_code = code * p.s + a;
                if (depth + 1 > static_cast<std::uint64_t>(p.n))
                    next_code -= x[start - 1] * high * p.s;
                slot = next_code * p.k + start % p.k;
                if (used[slot]) continue;
                used[slot] = 1;
                placed = true;
            } else {
                next_code = code * p.s + a;
            }
            if (run(depth + 1, next_code)) return true;
            if (placed) used[slot] = 0;
        }
        return false;
    }
};

}  // namespace

Word brute_force_greatest(const Params& p, std::uint64_t budget) {
    const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(p.s), p.n);
    const std::uint64_t len = words * static_cast<std::uint64_t>(p.k);
    if (len > budget)
        throw CapacityError("necklace length " + std::to_string(len) +
                            " exceeds the search budget of " +
                            std::to_string(budget));
    Dfs dfs{p,
            len,
            words,
            words / static_cast<std::uint64_t>(p.s),
            Word(len),
            std::vector<char>(words * static_cast<std::uint64_t>(p.k), 0)};
    if (!dfs.run(0, 0))
        throw std::runtime_error(
            "search exhausted without finding a perfect necklace");
    return dfs.x;
}

Word filter_all_greatest(const Params& p, std::uint64_t budget) {
    const std::uint64_t words = checked_pow(static_cast<std::uint64_t>(p.s), p.n);
    const std::uint64_t len = words * static_cast<std::uint64_t>(p.k);
    if (len > budget)
        throw CapacityError("length " + std::to_string(len) +
                            " exceeds the filter budget of " +
                            std::to_string(budget));
    Word candidate(len, static_cast<Symbol>(p.s - 1));
    do {
        if (check_perfect(candidate, p).is_perfect) return candidate;
    } while (prev_word(candidate, p.s));
    throw std::runtime_error("no perfect necklace of the requested shape exists");
}

Word fkm_reference(int s, int n, std::uint64_t guard) {
    if (s < 2 || n < 1) throw std::invalid_argument("need s >= 2 and n >= 1");
    const std::uint64_t total = checked_pow(static_cast<std::uint64_t>(s), n);
    if (total > guard)
        throw CapacityError("de Bruijn length " + std::to_string(total) +
                            " exceeds the guard of " + std::to_string(guard));

    std::vector<Word> lyndon;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Word w(static_cast<std::size_t>(d), static_cast<Symbol>(s - 1));
        do {
            if (dominates_rotations(w)) lyndon.push_back(w);
        } while (prev_word(w, s));
    }
    // Order by the n-fold periodic extension, greatest first; distinct
    // aperiodic words never tie.
    std::sort(lyndon.begin(), lyndon.end(), [n](const Word& a, const Word& b) {
        Word ea, eb;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            ea.push_back(a[i % a.size()]);
            eb.push_back(b[i % b.size()]);
        }
        return eb < ea;
    });

    Word out;
    out.reserve(total);
    for (const Word& w : lyndon) out.insert(out.end(), w.begin(), w.end());
    return out;
}

}  // namespace perfect
