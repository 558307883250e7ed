#include "rpys/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "rpys/refparse.hpp"

namespace rpys {

ClassifierConfig default_classifier_config() {
    ClassifierConfig config;
    config.title_terms = {"citation",   "bibliometric", "scientometric", "informetric",
                          "webometric", "impact factor", "h-index",      "co-citation"};
    config.marker_sources = {"SCIENTOMETRICS", "J INFORMETR"};
    return config;
}

namespace {

bool title_hit(const Record& rec, const ClassifierConfig& config) {
    const auto title = lower_ascii(rec.title);
    return std::any_of(config.title_terms.begin(), config.title_terms.end(),
                       [&](const std::string& term) { return title.find(term) != std::string::npos; });
}

bool marker_hit(const Record& rec, const std::vector<std::string>& markers) {
    for (const auto& raw : rec.raw_refs) {
        const auto ref = parse_ref(raw);
        if (!ref.source) continue;
        for (const auto& marker : markers) {
            if (source_prefix_equal(*ref.source, marker)) return true;
        }
    }
    return false;
}

}  // namespace

Partition classify_corpus(const Corpus& corpus, const ClassifierConfig& config) {
    if (config.title_terms.empty()) throw std::invalid_argument("classify: no title terms configured");
    if (config.marker_sources.empty()) throw std::invalid_argument("classify: no marker sources configured");

    std::vector<std::string> markers;
    markers.reserve(config.marker_sources.size());
    for (const auto& m : config.marker_sources) markers.push_back(normalize_token(m));

    Partition partition;
    for (const auto& rec : corpus.records) {
        if (!rec.pub_year || *rec.pub_year < config.min_year) {
            partition.excluded.push_back(rec.id);
            continue;
        }
        const bool selected = config.mode == ClassifierConfig::Mode::any
                                  ? title_hit(rec, config) || marker_hit(rec, markers)
                                  : title_hit(rec, config) && marker_hit(rec, markers);
        (selected ? partition.in_set : partition.out_set).push_back(rec.id);
    }
    return partition;
}

std::vector<ShareRow> subset_share_series(const Partition& partition, const Corpus& corpus) {
    std::unordered_set<std::string_view> in_ids(partition.in_set.begin(), partition.in_set.end());
    std::unordered_set<std::string_view> out_ids(partition.out_set.begin(), partition.out_set.end());

    std::map<int, std::pair<std::size_t, std::size_t>> by_year;  // year -> (in, total)
    for (const auto& rec : corpus.records) {
        const bool is_in = in_ids.contains(rec.id);
        if (!is_in && !out_ids.contains(rec.id)) continue;  // excluded by the year gate
        if (!rec.pub_year) continue;                        // gated records always carry a year
        auto& [n_in, n_total] = by_year[*rec.pub_year];
        n_in += is_in ? 1 : 0;
        n_total += 1;
    }

    std::vector<ShareRow> rows;
    rows.reserve(by_year.size());
    for (const auto& [year, counts] : by_year) {
        rows.push_back({year, counts.first, counts.second, Percent::of(counts.first, counts.second)});
    }
    return rows;
}

}  // namespace rpys
