#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace habfuse {

/// Calendar day (UTC).
class Date {
public:
    Date() = default;
    explicit Date(std::chrono::sys_days days) : days_(days) {}
    Date(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD"; throws std::invalid_argument on anything else.
    static Date parse(std::string_view text);

    std::string str() const;
    int year() const;
    unsigned month() const;
    unsigned day() const;

    Date plus_days(int n) const { return Date(days_ + std::chrono::days{n}); }
    int days_since_epoch() const { return static_cast<int>(days_.time_since_epoch().count()); }
    std::chrono::sys_days sys_days() const { return days_; }

    auto operator<=>(const Date&) const = default;

private:
    std::chrono::sys_days days_{};
};

/// Inclusive date interval.
struct DateRange {
    Date first;
    Date last;

    bool contains(const Date& d) const { return first <= d && d <= last; }
    bool overlaps(const DateRange& other) const {
        return !(last < other.first || other.last < first);
    }
};

}  // namespace habfuse
