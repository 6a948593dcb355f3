#ifndef PERFECT_ORACLE_HPP
#define PERFECT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "perfect/types.hpp"

namespace perfect {

// Construction-agnostic perfectness verification and small-instance search.
// Everything here is deliberately independent of the generator module.

enum class ViolationKind {
    WrongLength,       // input length differs from s^n * k
    WrongCount,        // a word occurs a number of times != k
    ResidueCollision,  // two occurrences share the same residue mod k
};

struct Violation {
    ViolationKind kind;
    Word word;                       // empty for WrongLength
    std::vector<std::uint64_t> positions;
    std::uint64_t found = 0;         // occurrence count (WrongCount)
    std::uint64_t expected = 0;
};

struct PerfectnessReport {
    Params params;
    bool is_perfect = false;
    std::uint64_t input_length = 0;
    // Sorted circular start positions for every length-n word that occurs.
    std::map<Word, std::vector<std::uint64_t>> occurrences;
    std::vector<Violation> violations;
};

// Counts circular occurrences of every length-n word in x and checks that
// each occurs exactly k times at positions with pairwise distinct residues
// mod k. Positions are 0-based.
PerfectnessReport check_perfect(const Word& x, const Params& p);

// Exhaustive depth-first search for the lexicographically greatest perfect
// necklace, trying symbols in decreasing order and pruning any prefix that
// repeats a (window, residue) pair. budget caps the output length.
Word brute_force_greatest(const Params& p, std::uint64_t budget = 24);

// Same answer, computed the dumbest possible way: enumerate all s^(s^n*k)
// strings and keep the greatest one accepted by check_perfect. Usable up to
// length 16; it exists to cross-check brute_force_greatest.
Word filter_all_greatest(const Params& p, std::uint64_t budget = 16);

// Concatenation, in decreasing order, of all aperiodic words that dominate
// their rotations and whose length divides n: the greatest de Bruijn
// necklace of order n. Built by naive enumeration, not via the generator.
Word fkm_reference(int s, int n, std::uint64_t guard = 1u << 20);

}  // namespace perfect

#endif
