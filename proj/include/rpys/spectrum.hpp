#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rpys/refparse.hpp"
#include "rpys/util.hpp"

namespace rpys {

struct SpectrumRow {
    int year = 0;
    std::int64_t count = 0;
    double median = 0.0;     // window median of the counts around `year`
    double deviation = 0.0;  // count - median

    friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

/// Per-year cited-reference counts over a gapless year window, with the
/// deviation of each count from its local window median. Medians of integer
/// counts are always multiples of 0.5, so the double fields are exact.
struct Spectrum {
    int year_min = 0;
    int year_max = -1;  // empty when year_max < year_min
    std::vector<SpectrumRow> rows;

    bool empty() const { return rows.empty(); }
    std::int64_t total_count() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

struct MedianDev {
    double median = 0.0;
    double deviation = 0.0;

    friend bool operator==(const MedianDev&, const MedianDev&) = default;
};

/// Median filter over windows of `half_width` years on each side, truncated
/// at the series ends. Odd window: middle order statistic; even window:
/// midpoint of the two central order statistics. Deviation is count minus
/// median. Empty input gives empty output.
std::vector<MedianDev> median_deviation(std::span<const std::int64_t> counts, int half_width = 2);

/// Counts references per referenced publication year across `window`
/// (missing years zero-filled) and attaches window medians and deviations.
/// Throws std::invalid_argument on an inverted window.
Spectrum build_spectrum(std::span<const CitedReference> refs, const YearWindow& window, int half_width = 2);

/// One ranked cited work inside a peak year.
struct WorkShare {
    RefKey key;
    std::size_t count = 0;
    Percent share;  // of the year's total references

    friend bool operator==(const WorkShare&, const WorkShare&) = default;
};

struct Peak {
    int year = 0;
    std::int64_t count = 0;
    double deviation = 0.0;
    int rank = 0;  // 1-based
    std::vector<WorkShare> top_works;

    friend bool operator==(const Peak&, const Peak&) = default;
};

/// Local maxima of the deviation curve: d(t) > d(t-1) and d(t) >= d(t+1),
/// one-sided at the window edges, subject to d(t) >= min_dev. The top
/// `max_peaks` are returned ranked by deviation descending, ties by count
/// descending, then by older year first.
std::vector<Peak> detect_peaks(const Spectrum& spectrum, std::size_t max_peaks, double min_dev = 0.0);

/// Groups the references of one year via merge_variants and reports the
/// `top_n` works with counts and shares of that year's total.
std::vector<WorkShare> annotate_peak(int year, std::span<const CitedReference> refs, MatchPolicy policy,
                                     std::size_t top_n);

/// annotate_peak applied to every detected peak in place.
void annotate_peaks(std::vector<Peak>& peaks, std::span<const CitedReference> refs, MatchPolicy policy,
                    std::size_t top_n);

/// 100 * part / whole as a half-up one-decimal percentage.
/// Requires whole >= part; throws std::invalid_argument when whole == 0.
Percent share(std::uint64_t part, std::uint64_t whole);

}  // namespace rpys
