#include "perfect/format.hpp"

#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

namespace perfect {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "json") return OutputFormat::Json;
    if (name == "blocks") return OutputFormat::Blocks;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_word(const Word& w, int s) {
    std::ostringstream out;
    if (s <= 10) {
        for (Symbol a : w) out << a;
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ',';
            out << w[i];
        }
    }
    return out.str();
}

std::string render_pair(const PairNK& a, int s) {
    return render_word(a.word, s) + " " + std::to_string(a.residue);
}

Word parse_word(const std::string& text, int s) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    const std::string body = text.substr(lo, hi - lo);

    Word out;
    if (s <= 10 && body.find(',') == std::string::npos) {
        for (char c : body) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c < '0' || c > '9')
                throw std::invalid_argument(std::string("unexpected character '") +
                                            c + "' in word");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
    } else {
        std::istringstream in(body);
        std::string token;
        while (std::getline(in, token, ',')) {
            std::size_t pos = 0;
            unsigned long v = std::stoul(token, &pos);
            while (pos < token.size() &&
                   std::isspace(static_cast<unsigned char>(token[pos])))
                ++pos;
            if (pos != token.size())
                throw std::invalid_argument("malformed symbol token: " + token);
            out.push_back(static_cast<Symbol>(v));
        }
    }
    for (Symbol a : out)
        if (a >= static_cast<Symbol>(s))
            throw std::invalid_argument("symbol " + std::to_string(a) +
                                        " out of range for s=" + std::to_string(s));
    return out;
}

std::string render_necklace_json(const Word& x, const Params& p) {
    json j;
    j["necklace"] = x;
    j["s"] = p.s;
    j["n"] = p.n;
    j["k"] = p.k;
    j["length"] = x.size();
    return j.dump();
}

std::string render_pair_json(const PairNK& a) {
    json j;
    j["word"] = a.word;
    j["residue"] = a.residue;
    return j.dump();
}

namespace {

const char* kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::WrongLength: return "WRONG_LENGTH";
        case ViolationKind::WrongCount: return "WRONG_COUNT";
        case ViolationKind::ResidueCollision: return "RESIDUE_COLLISION";
    }
    return "?";
}

}  // namespace

std::string render_report_json(const PerfectnessReport& report) {
    json j;
    j["s"] = report.params.s;
    j["n"] = report.params.n;
    j["k"] = report.params.k;
    j["perfect"] = report.is_perfect;
    j["input_length"] = report.input_length;
    j["violations"] = json::array();
    for (const Violation& v : report.violations) {
        json jv;
        jv["reason"] = kind_name(v.kind);
        jv["word"] = v.word;
        jv["positions"] = v.positions;
        jv["found"] = v.found;
        jv["expected"] = v.expected;
        j["violations"].push_back(jv);
    }
    return j.dump();
}

std::string render_report_text(const PerfectnessReport& report) {
    std::ostringstream out;
    out << (report.is_perfect ? "perfect" : "not perfect") << " (length "
        << report.input_length << ")\n";
    for (const Violation& v : report.violations) {
        out << "  " << kind_name(v.kind);
        if (!v.word.empty()) out << " word=" << render_word(v.word, report.params.s);
        out << " found=" << v.found << " expected=" << v.expected;
        if (!v.positions.empty()) {
            out << " positions=";
            for (std::size_t i = 0; i < v.positions.size(); ++i) {
                if (i) out << ',';
                out << v.positions[i];
            }
        }
        out << "\n";
    }
    return out.str();
}

Word parse_necklace(const std::string& text, int s, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j = json::parse(text);
        if (!j.contains("necklace") || !j["necklace"].is_array())
            throw std::invalid_argument("JSON input lacks a \"necklace\" array");
        Word out;
        for (const auto& v : j["necklace"]) {
            long long x = v.get<long long>();
            if (x < 0 || x >= s)
                throw std::invalid_argument("symbol out of range in JSON necklace");
            out.push_back(static_cast<Symbol>(x));
        }
        return out;
    }
    // Blocks input is Plain with cosmetic separators. For large alphabets a
    // block boundary also separates two symbols, so it becomes a comma.
    std::string cleaned;
    for (char c : text) {
        if (c == '|') {
            if (s > 10) cleaned.push_back(',');
        } else {
            cleaned.push_back(c);
        }
    }
    return parse_word(cleaned, s);
}

}  // namespace perfect
