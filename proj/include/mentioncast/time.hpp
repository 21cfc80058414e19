#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mentioncast {

// A UTC wall-clock instant with second resolution.
//
// The only accepted textual form is ISO-8601 "YYYY-MM-DDThh:mm:ssZ". All
// cutoff/resolution comparisons in the engine happen on this type, so the
// timezone question never comes up twice.
class UtcTime {
public:
    UtcTime() = default;

    static UtcTime from_unix(int64_t seconds) { return UtcTime(seconds); }

    // Throws ValidationError on anything that is not strict
    // "YYYY-MM-DDThh:mm:ssZ" with in-range fields.
    static UtcTime parse(std::string_view iso8601);

    std::string to_iso8601() const;

    int64_t unix_seconds() const { return secs_; }

    UtcTime plus_seconds(int64_t s) const { return UtcTime(secs_ + s); }
    UtcTime plus_days(int days) const { return UtcTime(secs_ + int64_t{86400} * days); }

    auto operator<=>(const UtcTime&) const = default;

private:
    explicit UtcTime(int64_t seconds) : secs_(seconds) {}
    int64_t secs_ = 0;
};

}  // namespace mentioncast
