// Command-line front end: generation, listings, verification, single theta
// steps, and the exhaustive small-instance oracle.
//
// Exit codes are a stable contract:
//   0 success / input is perfect      3 capacity or budget exceeded
//   1 input verified imperfect        4 no theta predecessor
//   2 invalid input or parameters     5 construction/oracle mismatch

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "perfect/format.hpp"
#include "perfect/generator.hpp"
#include "perfect/oracle.hpp"

using namespace perfect;

namespace {

std::uint64_t effective_guard(std::uint64_t flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("NECKLACE_EMISSION_GUARD")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(
                "NECKLACE_EMISSION_GUARD is not a valid integer");
        }
    }
    return kDefaultEmissionGuard;
}

int cmd_generate(int s, int n, int k, OutputFormat format, std::uint64_t guard) {
    Params p(s, n, k);
    NecklaceStream stream(p, guard);
    if (format == OutputFormat::Json) {
        Word all;
        all.reserve(stream.total_length());
        while (auto w = stream.next_word())
            all.insert(all.end(), w->begin(), w->end());
        std::cout << render_necklace_json(all, p) << "\n";
        return 0;
    }
    bool first = true;
    while (auto w = stream.next_word()) {
        if (!first) {
            if (format == OutputFormat::Blocks)
                std::cout << '|';
            else if (s > 10)
                std::cout << ',';  // keep comma-separated symbols parseable
        }
        std::cout << render_word(*w, s);
        first = false;
    }
    std::cout << "\n";
    return 0;
}

int cmd_listing(int s, int n, int k, OutputFormat format, bool lyndon) {
    Params p(s, n, k);
    std::uint64_t count = 0;
    if (format == OutputFormat::Json) {
        std::cout << "[";
        bool first = true;
        for (MaximalStream ms(p); !ms.done(); ms.advance()) {
            PairNK out = ms.current();
            if (lyndon)
                out = {(p.mode == Mode::KDividesN ? reduce(out, p) : expand(out, p)).word,
                       0};
            if (!first) std::cout << ",";
            std::cout << render_pair_json(out);
            first = false;
            ++count;
        }
        std::cout << "]\n";
    } else {
        for (MaximalStream ms(p); !ms.done(); ms.advance()) {
            if (lyndon) {
                const LyndonPair lp = p.mode == Mode::KDividesN
                                          ? reduce(ms.current(), p)
                                          : expand(ms.current(), p);
                std::cout << render_word(lp.word, s) << "\n";
            } else {
                std::cout << render_pair(ms.current(), s) << "\n";
            }
            ++count;
        }
    }
    std::cerr << count << (lyndon ? " Lyndon pairs\n" : " maximal pairs\n");
    return 0;
}

int cmd_verify(int s, int n, int k, OutputFormat format, const std::string& path) {
    Params p(s, n, k);
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    const Word x = parse_necklace(text, s, format);
    const PerfectnessReport report = check_perfect(x, p);
    if (format == OutputFormat::Json)
        std::cout << render_report_json(report);
    else
        std::cout << render_report_text(report);
    return report.is_perfect ? 0 : 1;
}

int cmd_theta(int s, int n, int k, const std::string& word_text, bool inverse) {
    Params p(s, n, k);
    Word w = parse_word(word_text, s);
    PairNK a{w, 0};
    PairNK out = inverse ? theta_preimage(a, p) : theta(a, p);
    std::cout << render_word(out.word, s) << "\n";
    return 0;
}

int cmd_oracle(int s, int n, int k, std::uint64_t budget, bool inject_fault) {
    Params p(s, n, k);
    const Word found = brute_force_greatest(p, budget);
    Word constructed = build_necklace(p);
    if (inject_fault && !constructed.empty())
        constructed[0] = (constructed[0] + 1) % p.s;
    const bool match = found == constructed;
    std::cout << render_word(found, s) << (match ? " MATCH" : " MISMATCH") << "\n";
    return match ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographically greatest perfect necklaces"};
    app.require_subcommand(1);

    int s = 2, n = 1, k = 1;
    std::string format_name = "plain";
    std::string word_text;
    std::string input_path;
    std::uint64_t guard = kDefaultEmissionGuard;
    std::uint64_t budget = 24;
    bool inverse = false;
    bool inject_fault = false;

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-s,--alphabet", s, "alphabet size")->required();
        cmd->add_option("-n,--length", n, "word length")->required();
        cmd->add_option("-k,--modulus", k, "residue modulus")->required();
    };

    auto* gen = app.add_subcommand("generate", "emit the greatest (n,k)-perfect necklace");
    add_params(gen);
    gen->add_option("-f,--format", format_name, "plain|json|blocks");
    auto* guard_opt = gen->add_option("--guard", guard, "emission guard in symbols");

    auto* lyn = app.add_subcommand("lyndon", "list the Lyndon pairs");
    add_params(lyn);
    lyn->add_option("-f,--format", format_name, "plain|json");

    auto* maxi = app.add_subcommand("maximal", "list the maximal pairs");
    add_params(maxi);
    maxi->add_option("-f,--format", format_name, "plain|json");

    auto* ver = app.add_subcommand("verify", "check a circular word for perfectness");
    add_params(ver);
    ver->add_option("-f,--format", format_name, "plain|json");
    ver->add_option("input", input_path, "input file, or - for stdin");

    auto* th = app.add_subcommand("theta", "apply the successor operator to a word");
    add_params(th);
    th->add_option("word", word_text, "residue-0 word of length n")->required();
    th->add_flag("-i,--inverse", inverse, "apply the chain predecessor instead");

    auto* ora = app.add_subcommand("oracle", "brute-force search and compare");
    add_params(ora);
    ora->add_option("--budget", budget, "maximum necklace length to search");
    ora->add_flag("--inject-fault", inject_fault)->group("");  // test hook

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(s, n, k, parse_format(format_name),
                                effective_guard(guard, guard_opt->count() > 0));
        if (lyn->parsed())
            return cmd_listing(s, n, k, parse_format(format_name), true);
        if (maxi->parsed())
            return cmd_listing(s, n, k, parse_format(format_name), false);
        if (ver->parsed())
            return cmd_verify(s, n, k, parse_format(format_name), input_path);
        if (th->parsed()) return cmd_theta(s, n, k, word_text, inverse);
        if (ora->parsed()) return cmd_oracle(s, n, k, budget, inject_fault);
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoPredecessorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
