#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/classify.hpp"
#include "rpys/gen.hpp"
#include "rpys/refparse.hpp"
#include "rpys/util.hpp"

namespace rpys {

inline constexpr std::string_view kToolName = "rpys";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMissingInput = 3;
inline constexpr int kExitFormat = 4;
inline constexpr int kExitConfig = 5;
inline constexpr int kExitIo = 6;

/// Effective settings of one run, after flag/config/default resolution.
struct RunConfig {
    std::vector<std::filesystem::path> inputs;
    YearWindow window{1900, 1970};  // historical window
    int half_width = 2;
    std::size_t peaks_k = 10;
    double min_dev = 0.0;
    std::size_t top_works = 5;
    MatchPolicy match = MatchPolicy::exact;
    bool classify_filter = false;  // restrict spectroscopy to the subject set
    bool per_file = false;         // one output set per input file
    unsigned jobs = 1;
    std::filesystem::path out_dir = ".";
    ClassifierConfig classifier = default_classifier_config();
    GenSpec gen;
    std::string gen_output = "synthetic_export.txt";
};

/// "1900:1970" -> YearWindow. Throws std::invalid_argument.
YearWindow parse_year_window(std::string_view text);

/// "RPY|WEIGHT|CR string" -> Classic. Throws std::invalid_argument.
Classic parse_classic_spec(std::string_view text);

/// Canonical key=value dump of every effective setting; hashed into the
/// reproducibility header.
std::string canonical_config(const RunConfig& config, std::string_view command);
std::uint64_t config_hash(const RunConfig& config, std::string_view command);

// Subcommand drivers. Each writes its artifacts under config.out_dir,
// prints a reproducibility header and any ingest warnings to stderr, and
// returns one of the exit codes above after printing a one-line
// machine-readable error on failure.
int cmd_spectrum(const RunConfig& config);
int cmd_peaks(const RunConfig& config);
int cmd_classify(const RunConfig& config);
int cmd_gen(const RunConfig& config);
int cmd_validate(const RunConfig& config);

}  // namespace rpys
