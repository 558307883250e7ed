#include "rpys/spectrum.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpys {

std::int64_t Spectrum::total_count() const {
    std::int64_t total = 0;
    for (const auto& row : rows) total += row.count;
    return total;
}

std::vector<MedianDev> median_deviation(std::span<const std::int64_t> counts, int half_width) {
    if (half_width < 0) throw std::invalid_argument("median_deviation: negative half width");
    std::vector<MedianDev> out;
    out.reserve(counts.size());
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(counts.size());
    std::vector<std::int64_t> window;
    window.reserve(static_cast<std::size_t>(half_width) * 2 + 1);
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half_width);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, i + half_width);
        window.assign(counts.begin() + lo, counts.begin() + hi + 1);
        std::sort(window.begin(), window.end());
        const std::size_t m = window.size();
        // Odd window: middle order statistic. Even (truncated at an edge):
        // midpoint of the two central order statistics, a multiple of 0.5.
        const double median = m % 2 == 1 ? static_cast<double>(window[m / 2])
                                         : (static_cast<double>(window[m / 2 - 1]) +
                                            static_cast<double>(window[m / 2])) /
                                               2.0;
        out.push_back({median, static_cast<double>(counts[i]) - median});
    }
    return out;
}

Spectrum build_spectrum(std::span<const CitedReference> refs, const YearWindow& window, int half_width) {
    if (!window.valid()) throw std::invalid_argument("build_spectrum: window min exceeds max");
    Spectrum spectrum;
    spectrum.year_min = window.min;
    spectrum.year_max = window.max;

    std::vector<std::int64_t> counts(static_cast<std::size_t>(window.span()), 0);
    for (const auto& ref : refs) {
        if (const auto year = extract_rpy(ref, window)) ++counts[static_cast<std::size_t>(*year - window.min)];
    }
    const auto meddev = median_deviation(counts, half_width);

    spectrum.rows.reserve(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        spectrum.rows.push_back(
            {window.min + static_cast<int>(i), counts[i], meddev[i].median, meddev[i].deviation});
    }
    return spectrum;
}

std::vector<Peak> detect_peaks(const Spectrum& spectrum, std::size_t max_peaks, double min_dev) {
    if (max_peaks < 1) throw std::invalid_argument("detect_peaks: max_peaks must be >= 1");
    if (min_dev < 0.0) throw std::invalid_argument("detect_peaks: min_dev must be >= 0");

    std::vector<Peak> peaks;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(spectrum.rows.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& row = spectrum.rows[static_cast<std::size_t>(i)];
        const bool rises = i == 0 || row.deviation > spectrum.rows[static_cast<std::size_t>(i - 1)].deviation;
        const bool holds = i == n - 1 || row.deviation >= spectrum.rows[static_cast<std::size_t>(i + 1)].deviation;
        if (rises && holds && row.deviation >= min_dev) peaks.push_back({row.year, row.count, row.deviation, 0, {}});
    }

    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.deviation != b.deviation) return a.deviation > b.deviation;
        if (a.count != b.count) return a.count > b.count;
        return a.year < b.year;  // older peaks first
    });
    if (peaks.size() > max_peaks) peaks.resize(max_peaks);
    for (std::size_t i = 0; i < peaks.size(); ++i) peaks[i].rank = static_cast<int>(i) + 1;
    return peaks;
}

std::vector<WorkShare> annotate_peak(int year, std::span<const CitedReference> refs, MatchPolicy policy,
                                     std::size_t top_n) {
    if (top_n < 1) throw std::invalid_argument("annotate_peak: top_n must be >= 1");
    std::vector<CitedReference> of_year;
    for (const auto& ref : refs) {
        if (ref.rpy == year) of_year.push_back(ref);
    }
    if (of_year.empty()) return {};

    auto groups = merge_variants(of_year, policy);
    if (groups.size() > top_n) groups.resize(top_n);

    std::vector<WorkShare> out;
    out.reserve(groups.size());
    for (auto& group : groups) {
        out.push_back({std::move(group.canonical), group.count, Percent::of(group.count, of_year.size())});
    }
    return out;
}

void annotate_peaks(std::vector<Peak>& peaks, std::span<const CitedReference> refs, MatchPolicy policy,
                    std::size_t top_n) {
    for (auto& peak : peaks) peak.top_works = annotate_peak(peak.year, refs, policy, top_n);
}

Percent share(std::uint64_t part, std::uint64_t whole) {
    if (whole == 0) throw std::invalid_argument("share: whole must be >= 1");
    if (part > whole) throw std::invalid_argument("share: part exceeds whole");
    return Percent::of(part, whole);
}

}  // namespace rpys
