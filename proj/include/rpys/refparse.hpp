#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpys/util.hpp"

namespace rpys {

/// One cited-reference string, parsed into its conventional fields.
/// The raw string is always preserved; every other field may be absent.
struct CitedReference {
    std::string raw;
    std::optional<std::string> author;  // normalized first-author token
    std::optional<int> rpy;             // referenced publication year
    std::optional<std::string> source;  // normalized source/journal token
    std::optional<int> volume;
    std::optional<std::string> page;    // first page token, digits or alnum
    std::optional<std::string> doi;

    friend bool operator==(const CitedReference&, const CitedReference&) = default;
};

/// Normalized identity of a cited work. Two references with equal keys are
/// counted as the same work. Ordering is lexicographic over the fields with
/// absent values sorting first.
struct RefKey {
    std::optional<std::string> author;
    std::optional<int> rpy;
    std::optional<std::string> source;
    std::optional<int> volume;
    std::optional<std::string> page;

    friend auto operator<=>(const RefKey&, const RefKey&) = default;
};

RefKey key_of(const CitedReference& ref);

enum class MatchPolicy { exact, fuzzy };

struct VariantGroup {
    RefKey canonical;
    std::size_t count = 0;

    friend bool operator==(const VariantGroup&, const VariantGroup&) = default;
};

/// Parses a cited-reference string of the "AUTHOR, YEAR, SOURCE, Vn, Pn,
/// DOI ..." shape. Total: the worst case is a reference with only `raw` set.
/// A 4-digit token is taken as the year only when it lies inside `validity`.
CitedReference parse_ref(std::string_view raw, const YearWindow& validity = default_year_validity());

/// The reference's year when present and inside `window` (both ends
/// inclusive), otherwise nothing.
std::optional<int> extract_rpy(const CitedReference& ref, const YearWindow& window);

/// Groups references denoting the same work.
///
/// `exact` groups on equal RefKeys. `fuzzy` additionally absorbs a group
/// missing volume or page into a complete group when author and year match,
/// the sources agree on their normalized 10-character prefix (an absent
/// source matches anything), and exactly one such complete group exists.
/// Output is sorted by count descending, ties by RefKey ascending; counts
/// always sum to the number of input references.
std::vector<VariantGroup> merge_variants(std::span<const CitedReference> refs, MatchPolicy policy);

}  // namespace rpys
