#ifndef TVG_TIME_HPP
#define TVG_TIME_HPP

#include <chrono>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace tvg {

// Discrete time at day granularity: days since 1970-01-01.
struct TimeInstant {
    std::int64_t value = 0;

    constexpr auto operator<=>(const TimeInstant&) const = default;

    static constexpr TimeInstant infinity() {
        return TimeInstant{std::numeric_limits<std::int64_t>::max()};
    }
    constexpr bool is_infinite() const { return *this == infinity(); }
};

constexpr TimeInstant operator+(TimeInstant t, std::int64_t days) {
    return TimeInstant{t.value + days};
}
constexpr std::int64_t operator-(TimeInstant a, TimeInstant b) {
    return a.value - b.value;
}

TimeInstant from_date(int year, unsigned month, unsigned day);

struct CivilDate {
    int year;
    unsigned month;
    unsigned day;
};
CivilDate to_date(TimeInstant t);

// "YYYY-MM-DD" -> day index; rejects malformed or non-existent dates.
std::optional<TimeInstant> parse_iso_date(std::string_view s);

// Day index -> "YYYY-MM-DD".
std::string format_iso_date(TimeInstant t);

} // namespace tvg

#endif // TVG_TIME_HPP
