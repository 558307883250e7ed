#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rpys {

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inclusive calendar-year interval.
struct YearWindow {
    int min = 1500;
    int max = 2100;

    bool contains(int year) const { return year >= min && year <= max; }
    bool valid() const { return min <= max; }
    int span() const { return max - min + 1; }

    friend bool operator==(const YearWindow&, const YearWindow&) = default;
};

/// Calendar year of the host clock (UTC).
int current_year();

/// Validity range applied to publication years: [1500, current_year + 1].
YearWindow default_year_validity();

/// A percentage stored as tenths, rounded half-up from the exact ratio.
/// Keeps display arithmetic away from binary floating point.
class Percent {
  public:
    Percent() = default;

    /// 100 * part / whole. Throws std::invalid_argument when whole == 0.
    static Percent of(std::uint64_t part, std::uint64_t whole);

    static Percent from_tenths(std::int64_t tenths);

    std::int64_t tenths() const { return tenths_; }
    /// Nearest whole percent (half-up), e.g. 91.8 -> 92.
    std::int64_t rounded() const { return (tenths_ + 5) / 10; }
    double value() const { return static_cast<double>(tenths_) / 10.0; }
    std::string str() const;  // "32.3"

    friend auto operator<=>(const Percent&, const Percent&) = default;

  private:
    std::int64_t tenths_ = 0;
};

/// Uppercases ASCII letters, folds punctuation to spaces, collapses runs of
/// whitespace and trims. "J. Washington Acad. Sc." -> "J WASHINGTON ACAD SC".
std::string normalize_token(std::string_view text);

std::string lower_ascii(std::string_view text);

/// Compares two already-normalized source names on their leading
/// `prefix_len` characters.
bool source_prefix_equal(std::string_view a, std::string_view b, std::size_t prefix_len = 10);

/// Replaces invalid UTF-8 sequences with U+FFFD; valid input passes through.
std::string sanitize_utf8(std::string_view bytes);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rpys
