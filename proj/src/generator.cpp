#include "perfect/generator.hpp"

#include <limits>
#include <string>

namespace perfect {

std::uint64_t necklace_length(const Params& p) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t len = 1;
    for (int i = 0; i < p.n; ++i) {
        if (len > kMax / static_cast<std::uint64_t>(p.s))
            throw CapacityError("necklace length s^n*k overflows 64 bits");
        len *= static_cast<std::uint64_t>(p.s);
    }
    if (len > kMax / static_cast<std::uint64_t>(p.k))
        throw CapacityError("necklace length s^n*k overflows 64 bits");
    return len * static_cast<std::uint64_t>(p.k);
}

ThetaChain::ThetaChain(const Params& p)
    : params_(p),
      current_{Word(static_cast<std::size_t>(p.n), static_cast<Symbol>(p.s - 1)), 0} {}

void ThetaChain::advance() {
    if (done_) return;
    bool at_bottom = true;
    for (Symbol x : current_.word)
        if (x != 0) {
            at_bottom = false;
            break;
        }
    if (at_bottom) {
        done_ = true;
        return;
    }
    current_ = theta(current_, params_);
    ++step_;
}

MaximalStream::MaximalStream(const Params& p) : params_(p), chain_(p) {
    // <(s-1)^n, 0> is always maximal; nothing to skip at the start.
}

void MaximalStream::advance() {
    chain_.advance();
    while (!chain_.done() && !is_maximal(chain_.current(), params_))
        chain_.advance();
}

LyndonStream::LyndonStream(const Params& p) : params_(p), maximals_(p) {
    load();
}

void LyndonStream::load() {
    if (maximals_.done()) {
        done_ = true;
        return;
    }
    const PairNK& m = maximals_.current();
    current_ = (params_.mode == Mode::KDividesN) ? reduce(m, params_)
                                                 : expand(m, params_);
    if (prev_maximal_) {
        // Neighbor invariant: the previous maximal word must be a prefix of
        // the concatenation of its Lyndon word and this one.
        const Word& a = prev_maximal_->word;
        const LyndonPair ra = (params_.mode == Mode::KDividesN)
                                  ? reduce(*prev_maximal_, params_)
                                  : expand(*prev_maximal_, params_);
        std::size_t pos = 0;
        bool ok = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            Symbol c = pos < ra.word.size()
                           ? ra.word[pos]
                           : current_.word[pos - ra.word.size()];
            if (c != a[i]) {
                ok = false;
                break;
            }
            ++pos;
        }
        if (!ok)
            throw std::logic_error(
                "neighbor-prefix invariant violated during generation");
    }
    prev_maximal_ = m;
}

void LyndonStream::advance() {
    maximals_.advance();
    load();
}

NecklaceStream::NecklaceStream(const Params& p, std::uint64_t guard)
    : lyndons_(p), total_(necklace_length(p)) {
    if (total_ > guard)
        throw CapacityError("necklace length " + std::to_string(total_) +
                            " exceeds the emission guard of " +
                            std::to_string(guard) + " symbols");
}

std::optional<Word> NecklaceStream::next_word() {
    if (lyndons_.done()) return std::nullopt;
    Word w = lyndons_.current().word;
    emitted_ += w.size();
    lyndons_.advance();
    return w;
}

Word build_necklace(const Params& p, std::uint64_t guard) {
    NecklaceStream stream(p, guard);
    Word out;
    out.reserve(stream.total_length());
    while (auto w = stream.next_word())
        out.insert(out.end(), w->begin(), w->end());
    return out;
}

std::vector<PairNK> collect_maximal(const Params& p) {
    std::vector<PairNK> out;
    for (MaximalStream ms(p); !ms.done(); ms.advance()) out.push_back(ms.current());
    return out;
}

std::vector<LyndonPair> collect_lyndon(const Params& p) {
    std::vector<LyndonPair> out;
    for (LyndonStream ls(p); !ls.done(); ls.advance()) out.push_back(ls.current());
    return out;
}

}  // namespace perfect
