#pragma once

// Small shared helpers: ASCII string utilities, hex, SHA-256, base64 and
// the civil-time conversions used by the mail layer.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

namespace poseidon {

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return s.substr(b, e - b);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

inline bool is_printable_ascii(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u >= 0x20 && u <= 0x7e;
    });
}

// Shallow address syntax shared by the form validator and the mail layer:
// exactly one '@', non-empty local part, domain containing a dot.
inline bool is_valid_email(std::string_view s) {
    size_t at = s.find('@');
    if (at == std::string_view::npos || at == 0) return false;
    if (s.find('@', at + 1) != std::string_view::npos) return false;
    std::string_view domain = s.substr(at + 1);
    return !domain.empty() && domain.find('.') != std::string_view::npos;
}

inline std::string to_hex(const unsigned char* data, size_t len) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (size_t i = 0; i < len; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0x0f]);
    }
    return out;
}

inline std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    return to_hex(digest, len);
}

// ---------------------------------------------------------------- base64

inline std::string base64_encode(std::string_view data, size_t line_length = 0) {
    static constexpr char alphabet[] =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve(((data.size() + 2) / 3) * 4 + (line_length ? data.size() / 32 : 0));
    size_t col = 0;
    auto put = [&](char c) {
        if (line_length && col == line_length) {
            out += "\r\n";
            col = 0;
        }
        out.push_back(c);
        ++col;
    };
    size_t i = 0;
    for (; i + 3 <= data.size(); i += 3) {
        uint32_t n = (static_cast<unsigned char>(data[i]) << 16) |
                     (static_cast<unsigned char>(data[i + 1]) << 8) |
                     static_cast<unsigned char>(data[i + 2]);
        put(alphabet[(n >> 18) & 63]);
        put(alphabet[(n >> 12) & 63]);
        put(alphabet[(n >> 6) & 63]);
        put(alphabet[n & 63]);
    }
    size_t rest = data.size() - i;
    if (rest == 1) {
        uint32_t n = static_cast<unsigned char>(data[i]) << 16;
        put(alphabet[(n >> 18) & 63]);
        put(alphabet[(n >> 12) & 63]);
        put('=');
        put('=');
    } else if (rest == 2) {
        uint32_t n = (static_cast<unsigned char>(data[i]) << 16) |
                     (static_cast<unsigned char>(data[i + 1]) << 8);
        put(alphabet[(n >> 18) & 63]);
        put(alphabet[(n >> 12) & 63]);
        put(alphabet[(n >> 6) & 63]);
        put('=');
    }
    return out;
}

// Lenient decoder: characters outside the alphabet (line breaks, padding
// noise) are skipped, which is what mail transfer decoding needs.
inline std::string base64_decode(std::string_view text) {
    auto value = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    std::string out;
    out.reserve(text.size() / 4 * 3);
    uint32_t acc = 0;
    int bits = 0;
    for (char c : text) {
        if (c == '=') break;
        int v = value(c);
        if (v < 0) continue;
        acc = (acc << 6) | static_cast<uint32_t>(v);
        bits += 6;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<char>((acc >> bits) & 0xff));
        }
    }
    return out;
}

// ------------------------------------------------------------- civil time

// Days/civil conversions (proleptic Gregorian), self-contained so message
// dates never depend on the host timezone database.
inline int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    int64_t era = (y >= 0 ? y : y - 399) / 400;
    unsigned yoe = static_cast<unsigned>(y - era * 400);
    unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 + static_cast<unsigned>(d) - 1;
    unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

struct CivilTime {
    int year = 1970;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    int second = 0;
};

inline CivilTime civil_from_epoch(int64_t t) {
    int64_t days = t / 86400;
    int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int64_t z = days + 719468;
    int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    unsigned doe = static_cast<unsigned>(z - era * 146097);
    unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    int64_t y = static_cast<int64_t>(yoe) + era * 400;
    unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    unsigned mp = (5 * doy + 2) / 153;
    unsigned d = doy - (153 * mp + 2) / 5 + 1;
    unsigned m = mp + (mp < 10 ? 3 : -9);
    CivilTime c;
    c.year = static_cast<int>(y + (m <= 2));
    c.month = static_cast<int>(m);
    c.day = static_cast<int>(d);
    c.hour = static_cast<int>(rem / 3600);
    c.minute = static_cast<int>((rem / 60) % 60);
    c.second = static_cast<int>(rem % 60);
    return c;
}

inline int64_t epoch_from_civil(const CivilTime& c) {
    return days_from_civil(c.year, c.month, c.day) * 86400 + c.hour * 3600 + c.minute * 60 + c.second;
}

inline std::string pad2(int v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

inline std::string format_iso8601(int64_t epoch) {
    CivilTime c = civil_from_epoch(epoch);
    return std::to_string(c.year) + "-" + pad2(c.month) + "-" + pad2(c.day) + "T" +
           pad2(c.hour) + ":" + pad2(c.minute) + ":" + pad2(c.second) + "Z";
}

inline constexpr const char* kMonthNames[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                              "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
inline constexpr const char* kDayNames[] = {"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};

inline std::string format_rfc5322_date(int64_t epoch) {
    CivilTime c = civil_from_epoch(epoch);
    int64_t days = days_from_civil(c.year, c.month, c.day);
    // 1970-01-01 was a Thursday.
    int dow = static_cast<int>(((days % 7) + 11) % 7);
    return std::string(kDayNames[dow]) + ", " + pad2(c.day) + " " + kMonthNames[c.month - 1] +
           " " + std::to_string(c.year) + " " + pad2(c.hour) + ":" + pad2(c.minute) + ":" +
           pad2(c.second) + " +0000";
}

// Accepts the common RFC 5322 date shape: optional day-of-week, 1-2 digit
// day, month name, 4-digit year, HH:MM[:SS], numeric zone or GMT/UT/UTC.
inline std::optional<int64_t> parse_rfc5322_date(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    size_t i = 0;
    if (!tokens.empty() && !tokens[0].empty() && tokens[0].back() == ',') ++i;
    if (tokens.size() < i + 5) return std::nullopt;

    auto to_int = [](std::string_view s) -> std::optional<int> {
        if (s.empty() || s.size() > 9) return std::nullopt;
        int v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };

    auto day = to_int(tokens[i]);
    if (!day || *day < 1 || *day > 31) return std::nullopt;
    int month = 0;
    for (int m = 0; m < 12; ++m)
        if (iequals(tokens[i + 1], kMonthNames[m])) month = m + 1;
    if (month == 0) return std::nullopt;
    auto year = to_int(tokens[i + 2]);
    if (!year || tokens[i + 2].size() != 4) return std::nullopt;

    const std::string& clock = tokens[i + 3];
    auto c1 = clock.find(':');
    if (c1 == std::string::npos) return std::nullopt;
    auto c2 = clock.find(':', c1 + 1);
    auto hour = to_int(std::string_view(clock).substr(0, c1));
    std::optional<int> minute, second = 0;
    if (c2 == std::string::npos) {
        minute = to_int(std::string_view(clock).substr(c1 + 1));
    } else {
        minute = to_int(std::string_view(clock).substr(c1 + 1, c2 - c1 - 1));
        second = to_int(std::string_view(clock).substr(c2 + 1));
    }
    if (!hour || !minute || !second) return std::nullopt;
    if (*hour > 23 || *minute > 59 || *second > 60) return std::nullopt;

    const std::string& zone = tokens[i + 4];
    int offset = 0;
    if (iequals(zone, "GMT") || iequals(zone, "UT") || iequals(zone, "UTC")) {
        offset = 0;
    } else if (zone.size() == 5 && (zone[0] == '+' || zone[0] == '-')) {
        auto zh = to_int(std::string_view(zone).substr(1, 2));
        auto zm = to_int(std::string_view(zone).substr(3, 2));
        if (!zh || !zm || *zm > 59) return std::nullopt;
        offset = (*zh * 3600 + *zm * 60) * (zone[0] == '-' ? -1 : 1);
    } else {
        return std::nullopt;
    }

    CivilTime c;
    c.year = *year;
    c.month = month;
    c.day = *day;
    c.hour = *hour;
    c.minute = *minute;
    c.second = *second;
    return epoch_from_civil(c) - offset;
}

}  // namespace poseidon
