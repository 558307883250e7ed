#include "rpys/wos.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace rpys {

CorpusCounts Corpus::counts() const {
    CorpusCounts c;
    c.n_records = records.size();
    for (const auto& rec : records) c.n_raw_refs += rec.raw_refs.size();
    return c;
}

std::string IngestWarning::str() const {
    return "WARN " + file + ":" + std::to_string(line) + ": " + reason;
}

namespace {

constexpr std::string_view kKnownTags[] = {"UT", "PT", "DT", "AU", "TI", "SO", "PY", "CR"};

bool known_tag(std::string_view tok) {
    return std::find(std::begin(kKnownTags), std::end(kKnownTags), tok) != std::end(kKnownTags);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool blank(std::string_view s) { return trim(s).empty(); }

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

// CR field entries are joined with "; " (semicolon + space); bare
// semicolons inside titles stay untouched.
std::vector<std::string> split_refs(std::string_view field) {
    std::vector<std::string> refs;
    std::size_t start = 0;
    while (start <= field.size()) {
        const auto pos = field.find("; ", start);
        std::string_view piece =
            pos == std::string_view::npos ? field.substr(start) : field.substr(start, pos - start);
        piece = trim(piece);
        if (!piece.empty() && piece != ";") {
            // Drop a trailing separator semicolon left on the last entry.
            if (piece.back() == ';') piece.remove_suffix(1);
            piece = trim(piece);
            if (!piece.empty()) refs.emplace_back(piece);
        }
        if (pos == std::string_view::npos) break;
        start = pos + 2;
    }
    return refs;
}

std::optional<int> parse_int_strict(std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

struct NumberedLine {
    std::string text;
    std::size_t number = 0;  // 1-based
};

std::vector<NumberedLine> read_lines(std::istream& in) {
    std::string all;
    {
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw io_error("unreadable input stream");
        all = std::move(buf).str();
    }
    // Strip a UTF-8 BOM, then sanitize the byte stream as a whole.
    if (all.rfind("\xEF\xBB\xBF", 0) == 0) all.erase(0, 3);
    all = sanitize_utf8(all);

    std::vector<NumberedLine> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start <= all.size()) {
        auto pos = all.find('\n', start);
        std::string line =
            pos == std::string::npos ? all.substr(start) : all.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back({std::move(line), number++});
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    while (!lines.empty() && blank(lines.back().text)) lines.pop_back();
    return lines;
}

class RecordSink {
  public:
    RecordSink(Corpus& corpus, std::vector<IngestWarning>& warnings, std::string filename,
               const IngestOptions& options)
        : corpus_(corpus), warnings_(warnings), filename_(std::move(filename)), options_(options) {}

    void warn(std::size_t line, std::string reason) {
        warnings_.push_back({filename_, line, std::move(reason)});
    }

    // Validates PY and id, then either stores the record or warns and skips.
    void finish(Record&& rec, std::string_view py_field, std::string_view ut_field, std::size_t line) {
        const auto py = trim(py_field);
        if (!py.empty()) {
            const auto year = parse_int_strict(py);
            if (!year || !options_.pub_year_validity.contains(*year)) {
                warn(line, "invalid publication year '" + std::string(py) + "'");
                return;
            }
            rec.pub_year = *year;
        }
        rec.id = ut_field.empty() ? filename_ + ":" + std::to_string(line) : std::string(trim(ut_field));
        if (!seen_ids_.insert(rec.id).second) {
            warn(line, "duplicate record id '" + rec.id + "'");
            return;
        }
        corpus_.records.push_back(std::move(rec));
    }

    const std::string& filename() const { return filename_; }

  private:
    Corpus& corpus_;
    std::vector<IngestWarning>& warnings_;
    std::string filename_;
    IngestOptions options_;
    std::unordered_set<std::string> seen_ids_;
};

void parse_tab_delimited(const std::vector<NumberedLine>& lines, std::size_t header_index, RecordSink& sink) {
    const std::string& header_text = lines[header_index].text;
    const auto header = split(header_text, '\t');
    std::unordered_map<std::string_view, std::size_t> columns;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto tag = trim(header[i]);
        if (known_tag(tag)) columns.emplace(tag, i);
    }
    if (!columns.contains("CR") && !columns.contains("PY"))
        throw format_error(sink.filename() + ": header names neither CR nor PY");

    for (std::size_t li = header_index + 1; li < lines.size(); ++li) {
        const auto& [text, number] = lines[li];
        if (blank(text)) continue;
        if (text == header_text) continue;  // repeated header from concatenated exports
        if (text.find('\t') == std::string::npos) {
            if (text.rfind("FN ", 0) == 0 || text.rfind("VR ", 0) == 0 || trim(text) == "EF") continue;
            if (header.size() >= 2) {
                sink.warn(number, "row has no field separators");
                continue;
            }
        }

        auto fields = split(text, '\t');
        if (fields.size() > header.size()) {
            const bool extras_empty = std::all_of(fields.begin() + static_cast<std::ptrdiff_t>(header.size()),
                                                  fields.end(), [](std::string_view f) { return blank(f); });
            if (!extras_empty) {
                sink.warn(number, "row has " + std::to_string(fields.size()) + " fields, header has " +
                                      std::to_string(header.size()));
                continue;
            }
            fields.resize(header.size());
        }
        auto field = [&](std::string_view tag) -> std::string_view {
            const auto it = columns.find(tag);
            if (it == columns.end() || it->second >= fields.size()) return {};
            return trim(fields[it->second]);
        };
        const bool any_known = std::any_of(std::begin(kKnownTags), std::end(kKnownTags),
                                           [&](std::string_view tag) { return !field(tag).empty(); });
        if (!any_known) {
            sink.warn(number, "row has no recognized fields");
            continue;
        }

        Record rec;
        rec.journal = field("SO");
        rec.title = field("TI");
        rec.doc_type = field("DT").empty() ? std::string(field("PT")) : std::string(field("DT"));
        rec.raw_refs = split_refs(field("CR"));
        sink.finish(std::move(rec), field("PY"), field("UT"), number);
    }
}

// The older plain-text flavor: two-letter field tags at line starts,
// indented continuation lines, ER terminating each record.
void parse_field_tagged(const std::vector<NumberedLine>& lines, RecordSink& sink) {
    Record rec;
    std::string py_field;
    std::string ut_field;
    std::string current_tag;
    bool in_record = false;
    std::size_t record_line = 0;

    auto flush = [&](std::size_t line) {
        if (in_record) sink.finish(std::move(rec), py_field, ut_field, line);
        rec = {};
        py_field.clear();
        ut_field.clear();
        current_tag.clear();
        in_record = false;
    };

    for (const auto& [text, number] : lines) {
        if (blank(text)) continue;
        const bool continuation = text[0] == ' ' || text[0] == '\t';
        if (continuation) {
            const auto value = std::string(trim(text));
            if (current_tag == "CR") {
                if (!value.empty()) rec.raw_refs.push_back(value);
            } else if (current_tag == "TI") {
                rec.title += rec.title.empty() ? value : " " + value;
            }
            continue;
        }
        const std::string_view line = text;
        const std::string tag{line.substr(0, line.find(' '))};
        const auto value = line.size() > tag.size() ? std::string(trim(line.substr(tag.size() + 1))) : "";

        if (tag == "FN" || tag == "VR" || tag == "EF") continue;
        if (tag == "ER") {
            flush(record_line);
            continue;
        }
        if (!in_record) {
            in_record = true;
            record_line = number;
        }
        current_tag = tag;
        if (tag == "TI") {
            rec.title = value;
        } else if (tag == "SO") {
            rec.journal = value;
        } else if (tag == "DT") {
            rec.doc_type = value;
        } else if (tag == "PT") {
            if (rec.doc_type.empty()) rec.doc_type = value;
        } else if (tag == "PY") {
            py_field = value;
        } else if (tag == "UT") {
            ut_field = value;
        } else if (tag == "CR") {
            if (!value.empty()) rec.raw_refs.push_back(value);
        }
        // Other tags are consumed and ignored, continuations included.
    }
    flush(record_line);
}

}  // namespace

IngestResult parse_export(std::istream& in, std::string_view filename, const IngestOptions& options) {
    const auto lines = read_lines(in);
    IngestResult result;
    result.corpus.provenance.emplace_back(filename);
    RecordSink sink(result.corpus, result.warnings, std::string(filename), options);

    // Locate the first meaningful line, skipping an FN/VR preamble. A tab in
    // that line means a column header; otherwise a leading FN token selects
    // the field-tagged reader.
    bool saw_fn = false;
    std::size_t first = 0;
    while (first < lines.size()) {
        const auto& text = lines[first].text;
        if (blank(text)) {
            ++first;
            continue;
        }
        if (text.rfind("FN ", 0) == 0 || text.rfind("VR ", 0) == 0) {
            saw_fn = saw_fn || text.rfind("FN ", 0) == 0;
            ++first;
            continue;
        }
        break;
    }
    if (first >= lines.size()) {
        if (saw_fn) return result;  // preamble only: an empty export
        throw format_error(std::string(filename) + ": no header row found");
    }

    const auto& first_line = lines[first].text;
    if (first_line.find('\t') != std::string::npos) {
        parse_tab_delimited(lines, first, sink);
    } else if (saw_fn) {
        parse_field_tagged(lines, sink);
    } else if (known_tag(trim(first_line))) {
        parse_tab_delimited(lines, first, sink);  // single-column export
    } else {
        throw format_error(std::string(filename) + ": unrecognized export format");
    }
    return result;
}

IngestResult parse_export_file(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    return parse_export(in, path.string(), options);
}

Corpus merge_corpora(std::span<const Corpus> parts, std::vector<IngestWarning>* duplicate_warnings) {
    Corpus merged;
    std::unordered_set<std::string> seen_ids;
    std::unordered_set<std::string> seen_files;
    for (const auto& part : parts) {
        for (const auto& file : part.provenance) {
            if (seen_files.insert(file).second) merged.provenance.push_back(file);
        }
        for (const auto& rec : part.records) {
            if (seen_ids.insert(rec.id).second) {
                merged.records.push_back(rec);
            } else if (duplicate_warnings) {
                duplicate_warnings->push_back(
                    {part.provenance.empty() ? "<merge>" : part.provenance.front(), 0,
                     "duplicate record id '" + rec.id + "' across corpora"});
            }
        }
    }
    return merged;
}

IngestResult ingest_files(std::span<const std::filesystem::path> paths, const IngestOptions& options,
                          unsigned jobs) {
    std::vector<IngestResult> parts(paths.size());
    std::vector<std::exception_ptr> failures(paths.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i) parts[i] = parse_export_file(paths[i], options);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= paths.size()) return;
                try {
                    parts[i] = parse_export_file(paths[i], options);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        // Report the first failure in argument order, independent of timing.
        for (auto& failure : failures) {
            if (failure) std::rethrow_exception(failure);
        }
    }

    IngestResult result;
    std::vector<Corpus> corpora;
    corpora.reserve(parts.size());
    for (auto& part : parts) {
        result.warnings.insert(result.warnings.end(), part.warnings.begin(), part.warnings.end());
        corpora.push_back(std::move(part.corpus));
    }
    result.corpus = merge_corpora(corpora, &result.warnings);
    return result;
}

namespace {

std::string field_safe(std::string_view value) {
    std::string out{value};
    for (char& c : out) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

}  // namespace

void write_export(const Corpus& corpus, std::ostream& out) {
    out << "PT\tTI\tSO\tDT\tPY\tCR\tUT\n";
    for (const auto& rec : corpus.records) {
        std::string cr;
        for (std::size_t i = 0; i < rec.raw_refs.size(); ++i) {
            if (i > 0) cr += "; ";
            cr += rec.raw_refs[i];
        }
        out << "J\t" << field_safe(rec.title) << '\t' << field_safe(rec.journal) << '\t'
            << field_safe(rec.doc_type) << '\t' << (rec.pub_year ? std::to_string(*rec.pub_year) : "") << '\t'
            << field_safe(cr) << '\t' << field_safe(rec.id) << '\n';
    }
}

void write_export_file(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    write_export(corpus, out);
    out.flush();
    if (!out) throw io_error("write failed: " + path.string());
}

}  // namespace rpys
