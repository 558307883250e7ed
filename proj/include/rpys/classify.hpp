#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rpys/util.hpp"
#include "rpys/wos.hpp"

namespace rpys {

/// Two-criteria subject classifier: a title-word hit or a cited reference
/// to a marker journal admits a record, applied only from `min_year` on.
struct ClassifierConfig {
    enum class Mode { any, all };

    std::vector<std::string> title_terms;     // lowercase substrings
    std::vector<std::string> marker_sources;  // journal tokens, normalized on use
    int min_year = 1982;
    Mode mode = Mode::any;  // how the two criteria combine

    friend bool operator==(const ClassifierConfig&, const ClassifierConfig&) = default;
};

/// Shipped defaults; replace the term list wholesale via config or flags.
ClassifierConfig default_classifier_config();

/// Record ids split into the subject set, the remainder, and the records
/// excluded by the year gate (pub_year absent or before min_year). The three
/// lists are disjoint and cover the corpus.
struct Partition {
    std::vector<std::string> in_set;
    std::vector<std::string> out_set;
    std::vector<std::string> excluded;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Applies the classifier to every record. Throws std::invalid_argument when
/// config.title_terms or config.marker_sources is empty.
Partition classify_corpus(const Corpus& corpus, const ClassifierConfig& config);

struct ShareRow {
    int year = 0;
    std::size_t n_in = 0;
    std::size_t n_total = 0;  // in + out for this citing year
    Percent share;

    friend bool operator==(const ShareRow&, const ShareRow&) = default;
};

/// Per citing year: subject-set count, gated total, and percentage share.
/// Years with no gated records are omitted; rows ascend by year.
std::vector<ShareRow> subset_share_series(const Partition& partition, const Corpus& corpus);

}  // namespace rpys
