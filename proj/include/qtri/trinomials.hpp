#pragma once

#include <cstdint>

#include "qtri/laurent.hpp"
#include "qtri/qseries.hpp"

namespace qtri {

/* Round q-trinomial coefficient in the variable q^base:
 *
 *   (L, b; a)_2 = sum_{n>=0} q^{base*n(n+b)} (Q;Q)_L /
 *                 ((Q;Q)_n (Q;Q)_{n+a} (Q;Q)_{L-2n-a})
 *
 * Terms whose Pochhammer index goes negative vanish. Each summand is a
 * polynomial; it is computed by exact division with a zero-remainder
 * assertion. */
LaurentPoly round_trinomial(std::int64_t L, std::int64_t b, std::int64_t a, HalfExp base);

/* T0 trinomial: q^{base(L^2-a^2)/2} times the round trinomial (L, a; a) at
 * the reciprocal base. Always a polynomial with nonnegative exponents;
 * vanishes when |a| > L. */
LaurentPoly t_zero(std::int64_t L, std::int64_t a, HalfExp base);

/* Refined two-parameter trinomial
 *
 *   T(L, M; a, b) = sum over n >= 0 with n = L - a (mod 2) of
 *     q^{base*n^2/2} [M n] [M+b+(L-a-n)/2 over M+b] [M-b+(L+a-n)/2 over M-b]
 *
 * with every binomial in q^base. Half-integer exponents appear when base is
 * an odd multiple of 1/2 and n is odd. Vanishes when |a| > L or |b| > M. */
LaurentPoly refined_T(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                      HalfExp base);

/* Refined S-trinomial
 *
 *   S(L, M; a, b) = sum_{n>=0} q^{base*n(n+a)}
 *     [M+L-a-2n over M] [M-a+b over n] [M+a-b over n+a].
 */
LaurentPoly refined_S(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                      HalfExp base);

/* Variants with q^{base*C(n,2)} (variant = +1) or q^{base*C(n+1,2)}
 * (variant = -1) in place of the q^{base*n^2/2} prefactor. */
LaurentPoly refined_T_pm(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                         HalfExp base, int variant);

/* The four M -> infinity / L -> infinity limit formulas for T and S are
 * series limits: the polynomials never become constant in the growing
 * parameter, but their low-order coefficients do. Each check below verifies
 * the cleared-denominator identity through an analytic agreement window
 * (derived per summand from the first exponent where a Gaussian binomial can
 * deviate from its limit), plus a stabilization witness: the next admissible
 * parameter value agrees through the same window. Throws bad_argument when
 * the parameters are outside the stabilized regime. */

/* T(L, M_big; a, b) * (Q;Q)_L matches T0(L; a) through the window. */
bool check_T_M_stabilization(std::int64_t L, std::int64_t a, std::int64_t b,
                             HalfExp base, std::int64_t M_big);

/* 2 T(L_big, M; a, b) (Q;Q)_{2M} matches
 * ((-Q^{1/2};Q)_M + (-1)^sigma (Q^{1/2};Q)_M) [2M over M-b] through the
 * window, along L_big = a + sigma (mod 2). */
bool check_T_L_stabilization(std::int64_t M, std::int64_t a, std::int64_t b,
                             HalfExp base, int sigma, std::int64_t L_big);

enum class SLimitKind { M_limit, L_limit };

/* S(L, M; a, b) * (Q;Q)_L matches the round trinomial (L, a; a) for
 * M_limit; S(L, M; a, b) * (Q;Q)_M matches [2M over M-b] for L_limit. */
bool check_S_limits(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                    HalfExp base, SLimitKind which);

} // namespace qtri
