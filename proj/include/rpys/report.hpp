#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "rpys/classify.hpp"
#include "rpys/spectrum.hpp"
#include "rpys/wos.hpp"

namespace rpys {

// All writers are pure serialization: identical inputs give byte-identical
// output (LF line endings, no timestamps).

/// "year,count,median,deviation", one row per year ascending, medians and
/// deviations printed with one decimal.
void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out);
void write_spectrum_csv(const Spectrum& spectrum, const std::filesystem::path& path);

/// Parses write_spectrum_csv output back into an identical Spectrum.
/// Throws format_error on any other input.
Spectrum read_spectrum_csv(std::istream& in);
Spectrum read_spectrum_csv_file(const std::filesystem::path& path);

/// One JSON array of peaks: year, count, deviation, rank, top_works
/// [{author, rpy, source, volume, page, count, share_pct}], keys in that
/// order, shares with one decimal.
void write_peaks_json(std::span<const Peak> peaks, std::ostream& out);
void write_peaks_json(std::span<const Peak> peaks, const std::filesystem::path& path);

/// Two-curve spectrogram (raw counts and median deviation) with decade
/// ticks and the peak years labeled. Deterministic geometry. Throws
/// std::invalid_argument on an empty spectrum.
void render_spectrogram_svg(const Spectrum& spectrum, std::span<const Peak> peaks, std::ostream& out);
void render_spectrogram_svg(const Spectrum& spectrum, std::span<const Peak> peaks,
                            const std::filesystem::path& path);

/// "id,pub_year,set" with set one of in|out|excluded, rows sorted by id.
void write_partition_csv(const Partition& partition, const Corpus& corpus, std::ostream& out);
void write_partition_csv(const Partition& partition, const Corpus& corpus, const std::filesystem::path& path);

/// "year,n_in,n_total,share_pct", rows ascending by year.
void write_share_csv(std::span<const ShareRow> rows, std::ostream& out);
void write_share_csv(std::span<const ShareRow> rows, const std::filesystem::path& path);

}  // namespace rpys
