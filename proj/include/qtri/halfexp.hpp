#pragma once

#include <cstdint>
#include <string>

namespace qtri {

/* Exponent of q measured in units of 1/2. The value is stored doubled, so
 * q^{3/2} has twice() == 3 and q^2 has twice() == 4. Keeping the doubled
 * value avoids rational arithmetic while still covering every half-integer
 * power that shows up in refined-trinomial prefactors. */
class HalfExp {
public:
    constexpr HalfExp() noexcept : twice_(0) {}

    static constexpr HalfExp from_twice(std::int64_t t) noexcept { return HalfExp(t); }
    static constexpr HalfExp whole(std::int64_t e) noexcept { return HalfExp(2 * e); }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

    /* Only valid when is_integer(). */
    constexpr std::int64_t whole_part() const noexcept { return twice_ / 2; }

    constexpr HalfExp operator+(HalfExp o) const noexcept { return HalfExp(twice_ + o.twice_); }
    constexpr HalfExp operator-(HalfExp o) const noexcept { return HalfExp(twice_ - o.twice_); }
    constexpr HalfExp operator-() const noexcept { return HalfExp(-twice_); }
    constexpr HalfExp operator*(std::int64_t k) const noexcept { return HalfExp(twice_ * k); }

    constexpr bool operator==(const HalfExp&) const noexcept = default;
    constexpr auto operator<=>(const HalfExp&) const noexcept = default;

    /* "3", "-2", "7/2", "-1/2" */
    std::string str() const;

private:
    explicit constexpr HalfExp(std::int64_t t) noexcept : twice_(t) {}

    std::int64_t twice_;
};

} // namespace qtri
