#ifndef PERFECT_FORMAT_HPP
#define PERFECT_FORMAT_HPP

#include <string>

#include "perfect/oracle.hpp"
#include "perfect/types.hpp"

namespace perfect {

enum class OutputFormat {
    Plain,   // digit string for s <= 10, comma-separated integers otherwise
    Json,    // {"word": [...], "residue": u} / {"necklace": [...], ...}
    Blocks,  // Plain with '|' between Lyndon words
};

OutputFormat parse_format(const std::string& name);

std::string render_word(const Word& w, int s);
std::string render_pair(const PairNK& a, int s);

// Accepts a digit string (s <= 10) or comma-separated decimal integers;
// surrounding whitespace is tolerated. Throws std::invalid_argument on
// malformed text or out-of-range symbols.
Word parse_word(const std::string& text, int s);

std::string render_necklace_json(const Word& x, const Params& p);
std::string render_pair_json(const PairNK& a);
std::string render_report_json(const PerfectnessReport& report);
std::string render_report_text(const PerfectnessReport& report);

// Parses a word from either Plain or Json necklace text.
Word parse_necklace(const std::string& text, int s, OutputFormat format);

}  // namespace perfect

#endif
