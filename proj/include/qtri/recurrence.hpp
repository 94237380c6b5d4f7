#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "qtri/laurent.hpp"
#include "qtri/qseries.hpp"

namespace qtri {

/* Summand of the bounded m-sum side of the seed identity, indexed by
 * k = (L - m)/2:
 *
 *   G(L,M,k) = q^{(L-2k)^2} [3M over L-2k]_{q^2} [2M+k over k]_{q^6}.
 *
 * Vanishes for k < 0, L-2k < 0 or L-2k > 3M. */
LaurentPoly summand_G(std::int64_t L, std::int64_t M, std::int64_t k);

/* Summand of the trinomial side, indexed by k = (L - j - n)/2:
 *
 *   F(L,M,k,j) = q^{3j^2+2j+3(L-j-2k)^2} [M over L-j-2k]_{q^6}
 *                [M+j+k over k]_{q^6} [M+k over k+j]_{q^6}.
 */
LaurentPoly summand_F(std::int64_t L, std::int64_t M, std::int64_t k, std::int64_t j);

enum class SeedSide { lhs, rhs };

/* The two sides of the seed identity evaluated by full summation of their
 * summands; equal by the seed theorem. */
LaurentPoly seed_side(SeedSide side, std::int64_t L, std::int64_t M);

/* Six-term recurrence combination for G at shifted arguments; identically
 * zero for all L, M, k >= 0. */
LaurentPoly g_recurrence_residual(std::int64_t L, std::int64_t M, std::int64_t k);
bool check_G_recurrence(std::int64_t L, std::int64_t M, std::int64_t k);

/* Ten-term recurrence combination for F; identically zero. */
LaurentPoly f_recurrence_residual(std::int64_t L, std::int64_t M, std::int64_t k,
                                  std::int64_t j);
bool check_F_recurrence(std::int64_t L, std::int64_t M, std::int64_t k, std::int64_t j);

/* The summed recurrence satisfied by either side of the seed identity. */
LaurentPoly sum_recurrence_residual(SeedSide side, std::int64_t L, std::int64_t M);
bool check_sum_recurrence(SeedSide side, std::int64_t L, std::int64_t M);

/* Boundary rows: S(L,0) = (1+(-1)^L)/2, S(0,M) = 1, S(1,M) = q [3M over 1]_{q^2},
 * S(2,M) = [2M+1 over 1]_{q^6} + q^4 [3M over 2]_{q^2}, on both sides. */
bool check_boundaries(std::int64_t L_max = 20, std::int64_t M_max = 10);

/* Closed forms of the boundary rows, used by the reconstruction. */
LaurentPoly boundary_row(std::int64_t L, std::int64_t M);

using SeedGrid = std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly>;

/* Rebuilds the whole window 0 <= L <= L_max, 0 <= M <= M_max from the summed
 * recurrence plus the boundary rows L in {0,1,2} and the row M = 0 alone,
 * solving each step for the S(L+3, M+1) term by exact division by
 * (1 - q^{12+24M}). Throws non_exact_division if any step fails, which would
 * falsify the uniqueness argument. */
SeedGrid reconstruct_S(std::int64_t L_max, std::int64_t M_max);

} // namespace qtri
