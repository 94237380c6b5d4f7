#pragma once

#include <cstdint>
#include <initializer_list>

#include "qtri/laurent.hpp"

namespace qtri {

/* A Pochhammer / theta argument of the form sign * q^exp. These monomials
 * are the only non-polynomial parameters any identity here specializes. */
struct MonomialArg {
    int sign;    /* +1 or -1 */
    HalfExp exp; /* may be negative or half-integer */

    MonomialArg negated() const { return {-sign, exp}; }
    /* sign * q^(step - exp), i.e. -(q^step)/this up to the leading minus. */
};

inline MonomialArg plus_q(HalfExp e) { return {+1, e}; }
inline MonomialArg minus_q(HalfExp e) { return {-1, e}; }

/* (a; Q)_n with Q = q^step: the product of (1 - a*Q^i) for 0 <= i < n.
 * n = 0 gives 1. Negative n is rejected (the reciprocal extension is not a
 * polynomial); the vanishing convention for 1/(q;q)_{n<0} lives inside the
 * binomials and summation drivers instead. */
LaurentPoly poch_finite(MonomialArg a, HalfExp step, std::int64_t n);

/* (Q; Q)_n with Q = q^step. */
LaurentPoly poch_q(HalfExp step, std::int64_t n);

/* (a; Q)_infinity truncated at the given order; factors entirely above the
 * order are skipped. Requires step > 0 and a.exp > 0. */
TruncatedSeries poch_infinite(MonomialArg a, HalfExp step, HalfExp order);

/* Product of several infinite Pochhammers over the same base. */
TruncatedSeries poch_infinite_multi(std::initializer_list<MonomialArg> args,
                                    HalfExp step, HalfExp order);

/* Gaussian binomial [top choose bottom] in the variable q^base. Zero when
 * bottom < 0 or top - bottom < 0; otherwise a polynomial with nonnegative
 * coefficients. */
LaurentPoly qbinom(std::int64_t top, std::int64_t bottom, HalfExp base);

/* Sum over n of q^{base*C(n,2)} z^n [L choose n]_{q^base}; equals
 * poch_finite(-z, base, L). */
LaurentPoly qexp_sum(std::int64_t L, MonomialArg z, HalfExp base);

/* The same sum restricted to n congruent to sigma mod 2; equals
 * ((-z;Q)_L + (-1)^sigma (z;Q)_L) / 2 with the halving checked exact. */
LaurentPoly qexp_sum_parity(std::int64_t L, MonomialArg z, HalfExp base, int sigma);

/* Sum over |j| <= M of q^{base*j^2} z^j [2M choose M+j]_{q^{2 base}}. */
LaurentPoly finite_jtp_lhs(std::int64_t M, MonomialArg z, HalfExp base);

/* The matching product side (-z q^base, -q^base / z; q^{2 base})_M. */
LaurentPoly finite_jtp_rhs(std::int64_t M, MonomialArg z, HalfExp base);

/* Theta sum over all integers j of z^j q^{base*j^2}, truncated. The exponent
 * base*j^2 + exp(z)*j must grow without bound in both directions. */
TruncatedSeries jtp_theta(MonomialArg z, HalfExp base, HalfExp order);

/* The triple-product form (q^{2 base}, -z q^base, -q^base/z; q^{2 base})_inf
 * truncated at the given order. */
TruncatedSeries jtp_product(MonomialArg z, HalfExp base, HalfExp order);

/* The summation kernel q^{r^2} (q;q)_{2L} / ((q;q)_{L-r} (q;q)_{2r}) without
 * its q^{r^2} prefactor, computed by exact division (always a polynomial). */
LaurentPoly binomial_transform_factor(std::int64_t L, std::int64_t r);

} // namespace qtri
