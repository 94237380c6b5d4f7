#include "qtri/partitions.hpp"

#include <vector>

#include "qtri/error.hpp"

namespace qtri {

namespace {

bool part_allowed_mod6(std::int64_t p) {
    const std::int64_t r = p % 6;
    return r != 1 && r != 5;
}

/* Difference rule between a part and the next smaller one. */
bool gap_ok(std::int64_t larger, std::int64_t smaller) {
    const std::int64_t d = larger - smaller;
    if (d >= 4) return true;
    if (d == 3) return smaller % 3 == 0;                       /* 3k, 3k+3 */
    if (d == 2) return smaller % 3 == 2 && larger % 3 == 1;    /* 3k-1, 3k+1 */
    return false;
}

std::int64_t count_gap_partitions(std::int64_t remaining, std::int64_t prev) {
    if (remaining == 0) return 1;
    std::int64_t total = 0;
    for (std::int64_t part = std::min(remaining, prev); part >= 2; --part) {
        if (!gap_ok(prev, part)) continue;
        total += count_gap_partitions(remaining - part, part);
    }
    return total;
}

} // namespace

std::int64_t count_capparelli_product_side(std::int64_t n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (std::int64_t part = 2; part <= n; ++part) {
        if (!part_allowed_mod6(part)) continue;
        for (std::int64_t w = n; w >= part; --w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
    }
    return dp[static_cast<std::size_t>(n)];
}

std::int64_t count_capparelli_gap_side(std::int64_t n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    std::int64_t total = 0;
    for (std::int64_t largest = 2; largest <= n; ++largest)
        total += count_gap_partitions(n - largest, largest);
    return total;
}

std::int64_t partition_count(std::int64_t n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        std::int64_t acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p[static_cast<std::size_t>(n)];
}

namespace {

/* Number of pairs (A, B) of partitions with |A| + |B| = n, A using parts of
 * size <= m and B using parts from {3, 6, ..., 3k}. Models the coefficient
 * of q^n in 1 / ((q;q)_m (q^3;q^3)_k). */
std::int64_t two_color_count(std::int64_t n, std::int64_t m, std::int64_t k) {
    std::vector<std::int64_t> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (std::int64_t part = 1; part <= std::min(n, m); ++part)
        for (std::int64_t w = part; w <= n; ++w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
    for (std::int64_t part = 3; part <= std::min(n, 3 * k); part += 3)
        for (std::int64_t w = part; w <= n; ++w)
            dp[static_cast<std::size_t>(w)] += dp[static_cast<std::size_t>(w - part)];
    return dp[static_cast<std::size_t>(n)];
}

} // namespace

std::int64_t series_coefficient_oracle(const std::string& id, std::int64_t n) {
    if (id == "kr1_product") return count_capparelli_product_side(n);
    if (id == "pentagonal_partitions") return partition_count(n);
    if (id == "kr1_sum") {
        /* coefficient of q^n in the double sum of
         * q^{2m^2+6mn'+6n'^2} / ((q;q)_m (q^3;q^3)_{n'}) */
        std::int64_t total = 0;
        for (std::int64_t m = 0; 2 * m * m <= n; ++m)
            for (std::int64_t np = 0;; ++np) {
                const std::int64_t w = 2 * m * m + 6 * m * np + 6 * np * np;
                if (w > n) break;
                total += two_color_count(n - w, m, np);
            }
        return total;
    }
    raise(errc::unknown_oracle, "no series oracle named '" + id + "'");
}

} // namespace qtri
