#pragma once

// Shared fixture builders and process helpers for the test suites.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/refparse.hpp"
#include "rpys/wos.hpp"

namespace rpystest {

// ---------------------------------------------------------------------------
// Spectrogram-shaped corpus: three dominant historical years (1963, 1926,
// 1934) over a small filler background, with per-year compositions
//   1963: 213 + 82 + 41 + 17 + 306 singletons = 659
//   1926: 184 complete + 7 incomplete + 17 singletons = 208
//   1934:  99 complete + 7 incomplete + 30 singletons = 136
// and 2 + (t-1900)/10 singleton references for every other year 1900-1970.

inline void append_filler(std::vector<std::string>& crs, int year, int n) {
    for (int i = 0; i < n; ++i) {
        crs.push_back("REF" + std::to_string(year) + "X" + std::to_string(i) + " A, " + std::to_string(year) +
                      ", J FILLER STUD, V" + std::to_string(i + 1) + ", P" + std::to_string(i + 1));
    }
}

inline std::vector<std::string> year1963_cr_strings() {
    std::vector<std::string> crs;
    crs.insert(crs.end(), 213, "PRICE DJD, 1963, LITTLE SCI BIG SCI");
    crs.insert(crs.end(), 82, "KESSLER MM, 1963, AM DOC, V14, P10");
    crs.insert(crs.end(), 41, "GARFIELD E, 1963, AM DOC, V14, P195");
    crs.insert(crs.end(), 17, "GARFIELD E, 1963, AM DOC, V14, P289");
    append_filler(crs, 1963, 306);
    return crs;
}

inline std::vector<std::string> year1926_cr_strings() {
    std::vector<std::string> crs;
    crs.insert(crs.end(), 184, "LOTKA AJ, 1926, J WASHINGTON ACAD SC, V16, P317");
    crs.insert(crs.end(), 7, "LOTKA AJ, 1926");
    append_filler(crs, 1926, 17);
    return crs;
}

inline std::vector<std::string> year1934_cr_strings() {
    std::vector<std::string> crs;
    crs.insert(crs.end(), 99, "BRADFORD SC, 1934, ENGINEERING, V137, P85");
    crs.insert(crs.end(), 7, "BRADFORD SC, 1934");
    append_filler(crs, 1934, 30);
    return crs;
}

inline std::vector<std::string> spectrogram_cr_strings() {
    std::vector<std::string> crs;
    for (int year = 1900; year <= 1970; ++year) {
        switch (year) {
            case 1963: {
                auto y = year1963_cr_strings();
                crs.insert(crs.end(), y.begin(), y.end());
                break;
            }
            case 1926: {
                auto y = year1926_cr_strings();
                crs.insert(crs.end(), y.begin(), y.end());
                break;
            }
            case 1934: {
                auto y = year1934_cr_strings();
                crs.insert(crs.end(), y.begin(), y.end());
                break;
            }
            default:
                append_filler(crs, year, 2 + (year - 1900) / 10);
        }
    }
    return crs;
}

inline std::vector<rpys::CitedReference> refs_from_crs(const std::vector<std::string>& crs) {
    std::vector<rpys::CitedReference> refs;
    refs.reserve(crs.size());
    for (const auto& cr : crs) refs.push_back(rpys::parse_ref(cr));
    return refs;
}

// Packs reference strings into export records (chunks of `per_record`) and
// renders the corpus as a tab-delimited export string.
inline rpys::Corpus corpus_from_crs(const std::vector<std::string>& crs, std::size_t per_record = 40,
                                    std::string_view journal = "J FIXTURE STUD") {
    rpys::Corpus corpus;
    std::size_t i = 0;
    int ordinal = 0;
    while (i < crs.size()) {
        rpys::Record rec;
        rec.id = "FIX-" + std::to_string(100000 + ordinal);
        rec.journal = std::string(journal);
        rec.pub_year = 1983 + ordinal % 30;
        rec.title = "Fixture record " + std::to_string(ordinal);
        rec.doc_type = "Article";
        for (std::size_t j = 0; j < per_record && i < crs.size(); ++j, ++i) rec.raw_refs.push_back(crs[i]);
        corpus.records.push_back(std::move(rec));
        ++ordinal;
    }
    return corpus;
}

inline std::string export_from_crs(const std::vector<std::string>& crs, std::size_t per_record = 40) {
    std::ostringstream out;
    rpys::write_export(corpus_from_crs(crs, per_record), out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Filesystem and process helpers.

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path = std::filesystem::temp_directory_path() /
               ("rpys_test_" + std::to_string(rng()) + "_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

inline void write_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs a command line via the shell, capturing exit code and both streams.
inline CliResult run_cli(const std::string& command, const std::filesystem::path& scratch) {
    const auto out_path = scratch / "cli_stdout.txt";
    const auto err_path = scratch / "cli_stderr.txt";
    const std::string full = command + " >" + out_path.string() + " 2>" + err_path.string();
    const int status = std::system(full.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

// ---------------------------------------------------------------------------
// Minimal strict XML well-formedness check (tags balance, attributes are
// quoted, one root element). Enough to catch structural SVG mistakes.

inline bool xml_well_formed(std::string_view text, std::string* error = nullptr) {
    auto fail = [&](const std::string& why) {
        if (error) *error = why;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool seen_root = false;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            if (text[i] == '>') return fail("stray '>' in text content");
            ++i;
            continue;
        }
        if (text.compare(i, 5, "<?xml") == 0) {
            const auto end = text.find("?>", i);
            if (end == std::string_view::npos) return fail("unterminated declaration");
            i = end + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            const auto end = text.find("-->", i);
            if (end == std::string_view::npos) return fail("unterminated comment");
            i = end + 3;
            continue;
        }
        const auto close = text.find('>', i);
        if (close == std::string_view::npos) return fail("unterminated tag");
        std::string_view tag = text.substr(i + 1, close - i - 1);
        if (tag.empty()) return fail("empty tag");
        // No raw '<' inside a tag body.
        if (tag.find('<') != std::string_view::npos) return fail("nested '<' in tag");
        bool closing = tag.front() == '/';
        bool self_closing = tag.back() == '/';
        if (closing) tag.remove_prefix(1);
        if (self_closing && !closing) tag.remove_suffix(1);
        const auto name_end = tag.find_first_of(" \t\n");
        std::string name{tag.substr(0, name_end)};
        if (name.empty()) return fail("missing element name");
        if (closing) {
            if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
            stack.pop_back();
        } else {
            // Attribute section must have an even number of quotes and no '<'.
            std::string_view attrs = name_end == std::string_view::npos ? std::string_view{} : tag.substr(name_end);
            std::size_t quotes = 0;
            for (char c : attrs) {
                if (c == '"') ++quotes;
            }
            if (quotes % 2 != 0) return fail("unbalanced quotes in <" + name + ">");
            if (stack.empty()) {
                if (seen_root) return fail("multiple root elements");
                seen_root = true;
            }
            if (!self_closing) stack.push_back(name);
        }
        i = close + 1;
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    if (!seen_root) return fail("no root element");
    return true;
}

}  // namespace rpystest
