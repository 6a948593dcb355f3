#ifndef PERFECT_GENERATOR_HPP
#define PERFECT_GENERATOR_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "perfect/core.hpp"
#include "perfect/types.hpp"

namespace perfect {

inline constexpr std::uint64_t kDefaultEmissionGuard = 100'000'000;

// s^n * k with overflow checking.
std::uint64_t necklace_length(const Params& p);

// Walks the strictly decreasing chain theta^i <(s-1)^n, 0>, ending at
// <0^n, 0>. Holds only the current pair.
class ThetaChain {
public:
    explicit ThetaChain(const Params& p);

    bool done() const { return done_; }
    const PairNK& current() const { return current_; }
    std::uint64_t step_index() const { return step_; }

    // Moves to theta(current); marks the chain done once <0^n,0> has been
    // consumed.
    void advance();

private:
    Params params_;
    PairNK current_;
    std::uint64_t step_ = 0;
    bool done_ = false;
};

// The subsequence of the chain whose elements are maximal. Starts at
// <(s-1)^n,0>, ends at <0^n,0>.
class MaximalStream {
public:
    explicit MaximalStream(const Params& p);

    bool done() const { return chain_.done(); }
    const PairNK& current() const { return chain_.current(); }
    void advance();

private:
    Params params_;
    ThetaChain chain_;
};

// Maximal pairs mapped through reduce (k|n) or expand (n|k): the list of
// Lyndon pairs in strictly decreasing order of their source pairs.
class LyndonStream {
public:
    explicit LyndonStream(const Params& p);

    bool done() const { return done_; }
    const LyndonPair& current() const { return current_; }
    void advance();

private:
    Params params_;
    MaximalStream maximals_;
    LyndonPair current_;
    // Previous maximal word, kept to check the neighbor-prefix invariant.
    std::optional<PairNK> prev_maximal_;
    bool done_ = false;

    void load();
};

// Streams the symbols of the perfect necklace one Lyndon word at a time.
// Total output is exactly s^n * k symbols; memory stays O(n).
class NecklaceStream {
public:
    explicit NecklaceStream(const Params& p,
                            std::uint64_t guard = kDefaultEmissionGuard);

    // The next Lyndon word of the necklace, or nullopt when exhausted.
    std::optional<Word> next_word();

    std::uint64_t emitted() const { return emitted_; }
    std::uint64_t total_length() const { return total_; }

private:
    LyndonStream lyndons_;
    std::uint64_t emitted_ = 0;
    std::uint64_t total_;
};

// Convenience: the whole necklace in memory, guard-checked.
Word build_necklace(const Params& p,
                    std::uint64_t guard = kDefaultEmissionGuard);

std::vector<PairNK> collect_maximal(const Params& p);
std::vector<LyndonPair> collect_lyndon(const Params& p);

}  // namespace perfect

#endif
