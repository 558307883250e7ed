#include "rpys/refparse.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace rpys {

namespace {

std::vector<std::string_view> split_tokens(std::string_view raw) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (start <= raw.size()) {
        const auto sep = raw.find(", ", start);
        std::string_view tok = sep == std::string_view::npos ? raw.substr(start) : raw.substr(start, sep - start);
        // Trim surrounding whitespace and a trailing period.
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '.')) tok.remove_suffix(1);
        tokens.push_back(tok);
        if (sep == std::string_view::npos) break;
        start = sep + 2;
    }
    return tokens;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool all_alnum(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
           });
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

bool is_volume_token(std::string_view tok) { return tok.size() >= 2 && tok[0] == 'V' && all_digits(tok.substr(1)); }

bool is_page_token(std::string_view tok) { return tok.size() >= 2 && tok[0] == 'P' && all_alnum(tok.substr(1)); }

bool is_doi_token(std::string_view tok) { return tok.rfind("DOI ", 0) == 0 && tok.size() > 4; }

}  // namespace

CitedReference parse_ref(std::string_view raw, const YearWindow& validity) {
    CitedReference ref;
    ref.raw = std::string(raw);
    const auto tokens = split_tokens(raw);

    // The year is the first bare 4-digit token inside the validity range;
    // "P1926" stays a page.
    std::size_t year_index = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].size() == 4 && all_digits(tokens[i])) {
            const auto year = parse_int(tokens[i]);
            if (year && validity.contains(*year)) {
                year_index = i;
                ref.rpy = *year;
                break;
            }
        }
    }

    // A lone token ("ANONYMOUS") carries nothing extractable.
    if (tokens.size() >= 2 && year_index != 0) {
        auto author = normalize_token(tokens[0]);
        if (!author.empty()) ref.author = std::move(author);
    }

    for (std::size_t i = year_index + 1; i < tokens.size() && !ref.source; ++i) {
        const auto tok = tokens[i];
        if (is_volume_token(tok) || is_page_token(tok) || is_doi_token(tok)) continue;
        auto source = normalize_token(tok);
        if (!source.empty()) ref.source = std::move(source);
    }

    for (const auto tok : tokens) {
        if (!ref.volume && is_volume_token(tok)) ref.volume = parse_int(tok.substr(1));
        if (!ref.page && is_page_token(tok)) ref.page = std::string(tok.substr(1));
        if (!ref.doi && is_doi_token(tok)) ref.doi = std::string(tok.substr(4));
    }
    return ref;
}

RefKey key_of(const CitedReference& ref) { return {ref.author, ref.rpy, ref.source, ref.volume, ref.page}; }

std::optional<int> extract_rpy(const CitedReference& ref, const YearWindow& window) {
    if (ref.rpy && window.contains(*ref.rpy)) return ref.rpy;
    return std::nullopt;
}

namespace {

bool is_complete(const RefKey& key) { return key.volume.has_value() && key.page.has_value(); }

bool sources_compatible(const RefKey& a, const RefKey& b) {
    if (!a.source || !b.source) return true;
    return source_prefix_equal(*a.source, *b.source);
}

}  // namespace

std::vector<VariantGroup> merge_variants(std::span<const CitedReference> refs, MatchPolicy policy) {
    std::map<RefKey, std::size_t> groups;
    for (const auto& ref : refs) ++groups[key_of(ref)];

    if (policy == MatchPolicy::fuzzy) {
        std::vector<RefKey> complete;
        for (const auto& [key, count] : groups) {
            if (is_complete(key)) complete.push_back(key);
        }
        // Absorb each incomplete group into the unique complete group that
        // agrees on author, year and source prefix; ambiguity leaves it alone.
        for (auto it = groups.begin(); it != groups.end();) {
            const RefKey& key = it->first;
            if (is_complete(key) || !key.author || !key.rpy) {
                ++it;
                continue;
            }
            const RefKey* target = nullptr;
            bool ambiguous = false;
            for (const auto& candidate : complete) {
                if (candidate.author == key.author && candidate.rpy == key.rpy &&
                    sources_compatible(key, candidate)) {
                    if (target) {
                        ambiguous = true;
                        break;
                    }
                    target = &candidate;
                }
            }
            if (target && !ambiguous) {
                groups[*target] += it->second;
                it = groups.erase(it);
            } else {
                ++it;
            }
        }
    }

    std::vector<VariantGroup> out;
    out.reserve(groups.size());
    for (const auto& [key, count] : groups) out.push_back({key, count});
    std::sort(out.begin(), out.end(), [](const VariantGroup& a, const VariantGroup& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.canonical < b.canonical;
    });
    return out;
}

}  // namespace rpys
