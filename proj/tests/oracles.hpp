#pragma once

// Brute-force reference implementations used only to check the library.
// They share no code with the implementation paths they verify.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "rpys/refparse.hpp"
#include "rpys/spectrum.hpp"

namespace rpystest {

// Median by literally materializing and sorting each truncated window.
inline std::vector<rpys::MedianDev> median_oracle(std::span<const std::int64_t> counts, int half_width) {
    std::vector<rpys::MedianDev> out;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(counts.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> window;
        for (std::ptrdiff_t j = i - half_width; j <= i + half_width; ++j) {
            if (j >= 0 && j < n) window.push_back(counts[j]);
        }
        std::sort(window.begin(), window.end());
        const std::size_t m = window.size();
        double median = 0.0;
        if (m % 2 == 1) {
            median = static_cast<double>(window[m / 2]);
        } else {
            median = (static_cast<double>(window[m / 2 - 1]) + static_cast<double>(window[m / 2])) / 2.0;
        }
        out.push_back({median, static_cast<double>(counts[i]) - median});
    }
    return out;
}

// Plain multiset grouping by RefKey, the contract of the exact policy.
inline std::vector<rpys::VariantGroup> grouping_oracle(std::span<const rpys::CitedReference> refs) {
    std::map<rpys::RefKey, std::size_t> counts;
    for (const auto& ref : refs) ++counts[rpys::key_of(ref)];
    std::vector<rpys::VariantGroup> out;
    for (const auto& [key, count] : counts) out.push_back({key, count});
    std::sort(out.begin(), out.end(), [](const rpys::VariantGroup& a, const rpys::VariantGroup& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.canonical < b.canonical;
    });
    return out;
}

// Exhaustive scan for deviation-curve local maxima, restating the peak
// definition directly over the rows.
inline std::vector<rpys::Peak> peak_scan_oracle(const rpys::Spectrum& spectrum, std::size_t max_peaks,
                                                double min_dev) {
    std::vector<rpys::Peak> candidates;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(spectrum.rows.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& row = spectrum.rows[static_cast<std::size_t>(i)];
        const bool left_ok = i == 0 || row.deviation > spectrum.rows[static_cast<std::size_t>(i - 1)].deviation;
        const bool right_ok =
            i == n - 1 || row.deviation >= spectrum.rows[static_cast<std::size_t>(i + 1)].deviation;
        if (left_ok && right_ok && row.deviation >= min_dev) {
            candidates.push_back({row.year, row.count, row.deviation, 0, {}});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const rpys::Peak& a, const rpys::Peak& b) {
        if (a.deviation != b.deviation) return a.deviation > b.deviation;
        if (a.count != b.count) return a.count > b.count;
        return a.year < b.year;
    });
    if (candidates.size() > max_peaks) candidates.resize(max_peaks);
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i].rank = static_cast<int>(i) + 1;
    return candidates;
}

}  // namespace rpystest
