#include "mentioncast/time.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "mentioncast/errors.hpp"

namespace mentioncast {

namespace {

// Civil-date <-> day-count conversions (proleptic Gregorian, epoch 1970-01-01).
int64_t days_from_civil(int year, unsigned month, unsigned day) {
    year -= month <= 2;
    const int64_t era = (year >= 0 ? year : year - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(year - era * 400);
    const unsigned doy = (153 * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int& year, unsigned& month, unsigned& day) {
    z += 719468;
    const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int64_t y = static_cast<int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    day = doy - (153 * mp + 2) / 5 + 1;
    month = mp + (mp < 10 ? 3 : -9);
    year = static_cast<int>(y + (month <= 2));
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

unsigned days_in_month(int year, unsigned month) {
    static constexpr std::array<unsigned, 12> lengths{31, 28, 31, 30, 31, 30,
                                                      31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap(year)) return 29;
    return lengths[month - 1];
}

int parse_digits(std::string_view text, size_t pos, size_t len, std::string_view whole) {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = first + len;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ValidationError("invalid UTC timestamp '" + std::string(whole) +
                              "': expected digits at offset " + std::to_string(pos));
    }
    for (size_t i = 0; i < len; ++i) {
        const char c = text[pos + i];
        if (c < '0' || c > '9') {
            throw ValidationError("invalid UTC timestamp '" + std::string(whole) +
                                  "': expected digits at offset " + std::to_string(pos));
        }
    }
    return value;
}

}  // namespace

UtcTime UtcTime::parse(std::string_view s) {
    // YYYY-MM-DDThh:mm:ssZ is exactly 20 characters.
    if (s.size() != 20 || s[4] != '-' || s[7] != '-' || s[10] != 'T' ||
        s[13] != ':' || s[16] != ':' || s[19] != 'Z') {
        throw ValidationError("invalid UTC timestamp '" + std::string(s) +
                              "': expected YYYY-MM-DDThh:mm:ssZ");
    }
    const int year = parse_digits(s, 0, 4, s);
    const int month = parse_digits(s, 5, 2, s);
    const int day = parse_digits(s, 8, 2, s);
    const int hour = parse_digits(s, 11, 2, s);
    const int minute = parse_digits(s, 14, 2, s);
    const int second = parse_digits(s, 17, 2, s);

    if (month < 1 || month > 12) {
        throw ValidationError("invalid UTC timestamp '" + std::string(s) + "': month out of range");
    }
    if (day < 1 || static_cast<unsigned>(day) > days_in_month(year, static_cast<unsigned>(month))) {
        throw ValidationError("invalid UTC timestamp '" + std::string(s) + "': day out of range");
    }
    if (hour > 23 || minute > 59 || second > 59) {
        throw ValidationError("invalid UTC timestamp '" + std::string(s) + "': time out of range");
    }

    const int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                         static_cast<unsigned>(day));
    return UtcTime::from_unix(days * 86400 + hour * 3600 + minute * 60 + second);
}

std::string UtcTime::to_iso8601() const {
    int64_t days = secs_ / 86400;
    int64_t rem = secs_ % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int year = 0;
    unsigned month = 0, day = 0;
    civil_from_days(days, year, month, day);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", year, month, day,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

}  // namespace mentioncast
