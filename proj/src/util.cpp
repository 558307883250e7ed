#include "rpys/util.hpp"

#include <cstdio>
#include <ctime>

namespace rpys {

int current_year() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    return utc.tm_year + 1900;
}

YearWindow default_year_validity() { return {1500, current_year() + 1}; }

Percent Percent::of(std::uint64_t part, std::uint64_t whole) {
    if (whole == 0) throw std::invalid_argument("Percent::of: whole must be nonzero");
    // floor(1000 * part / whole + 1/2), i.e. half-up in tenths of a percent.
    const std::uint64_t tenths = (2000 * part + whole) / (2 * whole);
    return from_tenths(static_cast<std::int64_t>(tenths));
}

Percent Percent::from_tenths(std::int64_t tenths) {
    Percent p;
    p.tenths_ = tenths;
    return p;
}

std::string Percent::str() const {
    char buf[32];
    const char* sign = tenths_ < 0 ? "-" : "";
    const std::int64_t abs = tenths_ < 0 ? -tenths_ : tenths_;
    std::snprintf(buf, sizeof(buf), "%s%lld.%lld", sign, static_cast<long long>(abs / 10),
                  static_cast<long long>(abs % 10));
    return buf;
}

namespace {

bool ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

}  // namespace

std::string normalize_token(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (unsigned char c : text) {
        if (ascii_alnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c));
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::string lower_ascii(std::string_view text) {
    std::string out{text};
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

bool source_prefix_equal(std::string_view a, std::string_view b, std::size_t prefix_len) {
    return a.substr(0, prefix_len) == b.substr(0, prefix_len);
}

std::string sanitize_utf8(std::string_view bytes) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";  // U+FFFD
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (c < 0x80) {
            len = 1;
        } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
            len = 2;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
        } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
            len = 4;
        } else {
            out += kReplacement;
            ++i;
            continue;
        }
        if (len == 1) {
            out.push_back(bytes[i]);
            ++i;
            continue;
        }
        bool ok = i + len <= n;
        for (std::size_t j = 1; ok && j < len; ++j) {
            ok = (static_cast<unsigned char>(bytes[i + j]) & 0xC0) == 0x80;
        }
        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out += kReplacement;
            ++i;
        }
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

}  // namespace rpys
