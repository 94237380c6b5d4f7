#pragma once

#include <cstdint>
#include <string>

namespace qtri {

/* Partitions of n into distinct parts, none congruent to +-1 mod 6. */
std::int64_t count_capparelli_product_side(std::int64_t n);

/* Partitions of n into parts != 1 where consecutive parts differ by at
 * least 2, and by at least 4 unless the pair is (3k, 3k+3) or
 * (3k-1, 3k+1). */
std::int64_t count_capparelli_gap_side(std::int64_t n);

/* p(n), the number of unrestricted partitions, via Euler's pentagonal
 * recurrence. */
std::int64_t partition_count(std::int64_t n);

/* Independent combinatorial oracles for series coefficients:
 *   "kr1_product"          - distinct parts avoiding +-1 mod 6
 *   "kr1_sum"              - lattice sum over (m, n) of 2m^2+6mn+6n^2-shifted
 *                            two-colored partition counts
 *   "pentagonal_partitions" - p(n)
 * Throws unknown_oracle for any other id. */
std::int64_t series_coefficient_oracle(const std::string& id, std::int64_t n);

} // namespace qtri
