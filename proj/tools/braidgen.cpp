#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "braidgen/automaton.hpp"
#include "braidgen/counting.hpp"
#include "braidgen/growth.hpp"
#include "braidgen/oracle.hpp"
#include "braidgen/prefixes.hpp"
#include "braidgen/sampler.hpp"
#include "braidgen/verify.hpp"
#include "braidgen/words.hpp"

namespace {

using braidgen::ArtinWord;
using braidgen::GrowthTables;
using braidgen::StrandCount;

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("BRAIDGEN_CACHE_DIR")) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "braidgen";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "braidgen";
    return std::filesystem::temp_directory_path() / "braidgen";
}

GrowthTables tables_for(int n, int k, const std::string& cache_flag) {
    if (k < 0) throw braidgen::Error("length must be non-negative");
    std::optional<std::filesystem::path> path;
    if (!cache_flag.empty())
        path = cache_flag;
    else
        path = default_cache_dir() / ("growth-n" + std::to_string(n) + ".txt");
    return braidgen::load_or_build(StrandCount(n), k, path);
}

void print_words(const std::vector<ArtinWord>& words, bool json) {
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ArtinWord& w : words) arr.push_back(braidgen::format_word(w));
        std::cout << arr.dump() << "\n";
    } else {
        for (const ArtinWord& w : words) std::cout << braidgen::format_word(w) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform sampling, counting and analysis of positive braids"};
    app.require_subcommand(1);

    int n = 0, k = 0, m = 0;
    long long count = 1;
    std::string rank_text, word_text, cache_flag, export_format;
    std::optional<std::uint64_t> seed;
    bool json = false, states_flag = false, check_minimal = false;

    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("-n,--strands", n, "number of strands (>= 2)")->required();
    };

    CLI::App* c_count = app.add_subcommand("count", "print the number of positive braids of length k");
    add_n(c_count);
    c_count->add_option("-k,--length", k, "braid length")->required();
    c_count->add_option("--cache", cache_flag, "growth table cache file");

    CLI::App* c_sample = app.add_subcommand("sample", "draw uniformly random positive braids");
    add_n(c_sample);
    c_sample->add_option("-k,--length", k, "braid length")->required();
    c_sample->add_option("-c,--count", count, "number of draws");
    c_sample->add_option("-s,--seed", seed, "seed for reproducible output");
    c_sample->add_option("--cache", cache_flag, "growth table cache file");
    c_sample->add_flag("--json", json, "emit a JSON array instead of one word per line");

    CLI::App* c_unrank = app.add_subcommand("unrank", "print the r-th lex-representative of length k");
    add_n(c_unrank);
    c_unrank->add_option("-k,--length", k, "braid length")->required();
    c_unrank->add_option("-r,--rank", rank_text, "1-based rank")->required();
    c_unrank->add_option("--cache", cache_flag, "growth table cache file");
    c_unrank->add_flag("--json", json, "emit a JSON array");

    CLI::App* c_rank = app.add_subcommand("rank", "print the 1-based rank of a lex-representative");
    add_n(c_rank);
    c_rank->add_option("word", word_text, "word as space-separated generator indices")->required();
    c_rank->add_option("--cache", cache_flag, "growth table cache file");

    CLI::App* c_prefix = app.add_subcommand(
        "count-prefix", "count length-k lex-representatives extending a prefix");
    add_n(c_prefix);
    c_prefix->add_option("-k,--length", k, "braid length")->required();
    c_prefix->add_option("-w,--word", word_text, "prefix word (may be empty)");
    c_prefix->add_option("-m,--skip", m, "exclude continuations starting with sigma_1..sigma_m")
        ->required();
    c_prefix->add_option("--cache", cache_flag, "growth table cache file");

    CLI::App* c_auto = app.add_subcommand("automaton", "build the lex-representative acceptor");
    add_n(c_auto);
    c_auto->add_flag("--states", states_flag, "print the number of accepted states");
    c_auto->add_flag("--check-minimal", check_minimal, "verify the acceptor is minimal");
    c_auto->add_option("--export", export_format, "write the acceptor to stdout (dot|json)");

    CLI::App* c_check = app.add_subcommand("check-word", "test lex-minimality of a word");
    add_n(c_check);
    c_check->add_option("word", word_text, "word as space-separated generator indices");

    CLI::App* c_oracle = app.add_subcommand("oracle", "brute-force reference computations");
    c_oracle->require_subcommand(1);
    CLI::App* c_enum = c_oracle->add_subcommand("enumerate", "list all lex-representatives of length k");
    add_n(c_enum);
    c_enum->add_option("-k,--length", k, "braid length")->required();
    c_enum->add_flag("--json", json, "emit a JSON array");
    CLI::App* c_norm = c_oracle->add_subcommand("normalize", "lex-representative of a positive word");
    add_n(c_norm);
    c_norm->add_option("word", word_text, "word as space-separated generator indices");

    CLI::App* c_verify = app.add_subcommand("verify", "run the desk-scale verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_count->parsed()) {
            GrowthTables g = tables_for(n, k, cache_flag);
            std::cout << g.x[k].get_str() << "\n";
        } else if (c_sample->parsed()) {
            GrowthTables g = tables_for(n, k, cache_flag);
            braidgen::SampleRequest req{StrandCount(n), k, count, seed};
            print_words(braidgen::sample(req, g), json);
        } else if (c_unrank->parsed()) {
            GrowthTables g = tables_for(n, k, cache_flag);
            mpz_class r;
            if (r.set_str(rank_text, 10) != 0) throw braidgen::Error("invalid rank: " + rank_text);
            print_words({braidgen::unrank(StrandCount(n), k, r, g)}, json);
        } else if (c_rank->parsed()) {
            const ArtinWord w = braidgen::parse_word(word_text, StrandCount(n));
            GrowthTables g = tables_for(n, static_cast<int>(w.size()), cache_flag);
            std::cout << braidgen::rank(w, g).get_str() << "\n";
        } else if (c_prefix->parsed()) {
            const ArtinWord w = braidgen::parse_word(word_text, StrandCount(n));
            GrowthTables g = tables_for(n, k, cache_flag);
            std::cout << braidgen::count_with_prefix(k, w, m, g).get_str() << "\n";
        } else if (c_auto->parsed()) {
            braidgen::LexAutomaton a = braidgen::build_automaton(StrandCount(n));
            bool printed = false;
            if (states_flag) {
                std::cout << a.accepted_count() << "\n";
                printed = true;
            }
            if (check_minimal) {
                std::cout << (braidgen::check_minimality(a) ? "true" : "false") << "\n";
                printed = true;
            }
            if (!export_format.empty()) {
                std::cout << braidgen::export_automaton(a, export_format);
                printed = true;
            }
            if (!printed) std::cout << a.accepted_count() << "\n";
        } else if (c_check->parsed()) {
            const ArtinWord w = braidgen::parse_word(word_text, StrandCount(n));
            auto f = braidgen::f_for_word(w);
            if (!f) {
                std::cout << "not a lex-representative\n";
            } else {
                std::cout << "lex-representative\n";
                std::cout << "f = [";
                for (std::size_t i = 0; i < f->values().size(); ++i)
                    std::cout << (i ? ", " : "") << f->values()[i];
                std::cout << "]\n";
                std::cout << "forbidden =";
                for (const ArtinWord& e : braidgen::f_to_set(*f))
                    std::cout << " {" << braidgen::format_word(e) << "}";
                std::cout << "\n";
            }
        } else if (c_enum->parsed()) {
            print_words(braidgen::oracle::enumerate_lex_reps(StrandCount(n), k), json);
        } else if (c_norm->parsed()) {
            const ArtinWord w = braidgen::parse_word(word_text, StrandCount(n));
            std::cout << braidgen::format_word(braidgen::oracle::normalize(w)) << "\n";
        } else if (c_verify->parsed()) {
            const auto results = braidgen::verify::run_acceptance(std::cout);
            return braidgen::verify::all_passed(results) ? 0 : 2;
        }
    } catch (const braidgen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
