#include "tvg/time.hpp"

#include <charconv>
#include <cstdio>

namespace tvg {

TimeInstant from_date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    const sys_days d = sys_days{std::chrono::year{year} / std::chrono::month{month} /
                                std::chrono::day{day}};
    return TimeInstant{d.time_since_epoch().count()};
}

CivilDate to_date(TimeInstant t) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{days{t.value}}};
    return CivilDate{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
}

std::optional<TimeInstant> parse_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    int y = 0;
    unsigned m = 0, d = 0;
    auto num = [](std::string_view part, auto& out) {
        const auto res = std::from_chars(part.data(), part.data() + part.size(), out);
        return res.ec == std::errc{} && res.ptr == part.data() + part.size();
    };
    if (!num(s.substr(0, 4), y) || !num(s.substr(5, 2), m) || !num(s.substr(8, 2), d))
        return std::nullopt;
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{m},
                                          std::chrono::day{d}};
    if (!ymd.ok()) return std::nullopt;
    return from_date(y, m, d);
}

std::string format_iso_date(TimeInstant t) {
    const CivilDate c = to_date(t);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
    return buf;
}

} // namespace tvg
