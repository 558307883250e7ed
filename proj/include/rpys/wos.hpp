#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/util.hpp"

namespace rpys {

/// One citing publication as read from an export file.
struct Record {
    std::string id;                  // UT field, else "<file>:<line>"
    std::string journal;             // SO
    std::optional<int> pub_year;     // PY
    std::string title;               // TI
    std::string doc_type;            // DT, falling back to PT
    std::vector<std::string> raw_refs;  // CR split on "; "

    friend bool operator==(const Record&, const Record&) = default;
};

struct CorpusCounts {
    std::size_t n_records = 0;
    std::size_t n_raw_refs = 0;

    friend bool operator==(const CorpusCounts&, const CorpusCounts&) = default;
};

struct Corpus {
    std::vector<Record> records;
    std::vector<std::string> provenance;  // source file names, first-seen order

    CorpusCounts counts() const;

    friend bool operator==(const Corpus&, const Corpus&) = default;
};

struct IngestWarning {
    std::string file;
    std::size_t line = 0;
    std::string reason;

    /// "WARN <file>:<line>: <reason>" per the warning contract.
    std::string str() const;

    friend bool operator==(const IngestWarning&, const IngestWarning&) = default;
};

struct IngestOptions {
    /// Validity range applied to the PY column; a present but out-of-range
    /// or unparseable PY marks the row malformed.
    YearWindow pub_year_validity = default_year_validity();
};

struct IngestResult {
    Corpus corpus;
    std::vector<IngestWarning> warnings;
};

/// Parses one export stream. Two flavors are recognized: the tab-delimited
/// export (optional FN/VR preamble, a header row naming columns, one record
/// per row) and the older FN/VR field-tag plain-text format, selected by a
/// leading "FN " token when no tab-delimited header follows it.
///
/// Malformed rows are skipped and reported as warnings; rows repeating the
/// header (concatenated exports) are skipped silently. Duplicate record ids
/// keep the first occurrence and warn on the rest. Throws format_error when
/// no header can be found or the header names neither CR nor PY; throws
/// io_error when the stream cannot be read.
IngestResult parse_export(std::istream& in, std::string_view filename, const IngestOptions& options = {});

IngestResult parse_export_file(const std::filesystem::path& path, const IngestOptions& options = {});

/// Union of the parts with cross-part id deduplication (first occurrence
/// wins) and provenance concatenated without repeats. Counts follow from the
/// records. One duplicate warning per dropped record when `duplicate_warnings`
/// is given.
Corpus merge_corpora(std::span<const Corpus> parts, std::vector<IngestWarning>* duplicate_warnings = nullptr);

/// Parses every file (up to `jobs` in parallel) and merges in argument
/// order, so the result does not depend on scheduling.
IngestResult ingest_files(std::span<const std::filesystem::path> paths, const IngestOptions& options = {},
                          unsigned jobs = 1);

/// Writes a tab-delimited export readable by parse_export. Record ids land
/// in UT, so a round trip through parse_export reproduces the records.
void write_export(const Corpus& corpus, std::ostream& out);
void write_export_file(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace rpys
