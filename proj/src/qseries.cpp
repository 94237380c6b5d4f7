#include "qtri/qseries.hpp"

#include <vector>

namespace qtri {

namespace {

void require_step(HalfExp step) {
    if (step <= HalfExp()) raise(errc::bad_argument, "Pochhammer base must be positive");
}

} // namespace

LaurentPoly poch_finite(MonomialArg a, HalfExp step, std::int64_t n) {
    require_step(step);
    if (a.sign != 1 && a.sign != -1) raise(errc::bad_argument, "monomial sign must be +-1");
    if (n < 0)
        raise(errc::negative_index_non_polynomial,
              "(a;q)_n with n < 0 is not a polynomial");
    LaurentPoly acc = LaurentPoly::one();
    for (std::int64_t i = 0; i < n; ++i) {
        const HalfExp e = a.exp + step * i;
        acc -= acc.shifted(e).coeff_scaled(a.sign);
    }
    return acc;
}

LaurentPoly poch_q(HalfExp step, std::int64_t n) {
    return poch_finite({+1, step}, step, n);
}

TruncatedSeries poch_infinite(MonomialArg a, HalfExp step, HalfExp order) {
    require_step(step);
    if (a.sign != 1 && a.sign != -1) raise(errc::bad_argument, "monomial sign must be +-1");
    if (a.exp <= HalfExp())
        raise(errc::divergent_product,
              "(a;q)_inf needs a = sign*q^e with e > 0 to stabilize");

    const std::int64_t n2 = order.twice();
    if (n2 < 0) return TruncatedSeries(LaurentPoly::one(), order);

    /* Dense coefficients over doubled exponents; each factor 1 - sign*q^e is
     * applied in place, descending so old values are read. */
    std::vector<Int> c(static_cast<std::size_t>(n2) + 1);
    c[0] = 1;
    for (HalfExp e = a.exp; e <= order; e = e + step) {
        const std::int64_t e2 = e.twice();
        for (std::int64_t k = n2; k >= e2; --k) {
            auto& slot = c[static_cast<std::size_t>(k)];
            const auto& src = c[static_cast<std::size_t>(k - e2)];
            if (a.sign > 0) slot -= src; else slot += src;
        }
    }
    std::vector<std::pair<HalfExp, Int>> out;
    for (std::int64_t k = 0; k <= n2; ++k)
        if (c[static_cast<std::size_t>(k)] != 0)
            out.emplace_back(HalfExp::from_twice(k), std::move(c[static_cast<std::size_t>(k)]));
    return TruncatedSeries(LaurentPoly::from_terms(std::move(out)), order);
}

TruncatedSeries poch_infinite_multi(std::initializer_list<MonomialArg> args,
                                    HalfExp step, HalfExp order) {
    TruncatedSeries acc(LaurentPoly::one(), order);
    for (const auto& a : args) acc = acc * poch_infinite(a, step, order);
    return acc;
}

LaurentPoly qbinom(std::int64_t top, std::int64_t bottom, HalfExp base) {
    require_step(base);
    if (bottom < 0 || top - bottom < 0) return {};
    std::int64_t k = std::min(bottom, top - bottom);
    /* [top choose k] = prod_{i=1..k} (1 - Q^{top-k+i}) / (1 - Q^i); every
     * partial product is itself a Gaussian binomial, so the division is
     * exact at each step. */
    LaurentPoly acc = LaurentPoly::one();
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc - acc.shifted(base * (top - k + i));
        acc = divide_exact(acc, LaurentPoly::one() - LaurentPoly::power(base * i));
    }
    return acc;
}

LaurentPoly qexp_sum(std::int64_t L, MonomialArg z, HalfExp base) {
    require_step(base);
    LaurentPoly acc;
    for (std::int64_t n = 0; n <= L; ++n) {
        /* q^{base*n(n-1)/2} z^n */
        const HalfExp e = HalfExp::from_twice(base.twice() * (n * (n - 1) / 2) + z.exp.twice() * n);
        const int sgn = (z.sign < 0 && n % 2 != 0) ? -1 : 1;
        acc += qbinom(L, n, base).shifted(e).coeff_scaled(sgn);
    }
    return acc;
}

LaurentPoly qexp_sum_parity(std::int64_t L, MonomialArg z, HalfExp base, int sigma) {
    require_step(base);
    if (sigma != 0 && sigma != 1) raise(errc::bad_argument, "sigma must be 0 or 1");
    LaurentPoly acc;
    for (std::int64_t n = sigma; n <= L; n += 2) {
        const HalfExp e = HalfExp::from_twice(base.twice() * (n * (n - 1) / 2) + z.exp.twice() * n);
        const int sgn = (z.sign < 0 && n % 2 != 0) ? -1 : 1;
        acc += qbinom(L, n, base).shifted(e).coeff_scaled(sgn);
    }
    /* Cross-check against the closed form; the halving must be exact. */
    LaurentPoly closed = poch_finite(z.negated(), base, L);
    if (sigma == 0)
        closed += poch_finite(z, base, L);
    else
        closed -= poch_finite(z, base, L);
    closed = divide_exact_int(closed, 2, errc::odd_coefficient);
    if (!(closed == acc))
        raise(errc::odd_coefficient, "parity split disagrees with its closed form");
    return acc;
}

LaurentPoly finite_jtp_lhs(std::int64_t M, MonomialArg z, HalfExp base) {
    require_step(base);
    LaurentPoly acc;
    for (std::int64_t j = -M; j <= M; ++j) {
        const HalfExp e = HalfExp::from_twice(base.twice() * j * j + z.exp.twice() * j);
        int sgn = 1;
        if (z.sign < 0 && ((j % 2) != 0)) sgn = -1;
        acc += qbinom(2 * M, M + j, base * 2).shifted(e).coeff_scaled(sgn);
    }
    return acc;
}

LaurentPoly finite_jtp_rhs(std::int64_t M, MonomialArg z, HalfExp base) {
    require_step(base);
    const MonomialArg a1{-z.sign, z.exp + base};  /* -z q^base   */
    const MonomialArg a2{-z.sign, base - z.exp};  /* -q^base / z */
    return poch_finite(a1, base * 2, M) * poch_finite(a2, base * 2, M);
}

TruncatedSeries jtp_theta(MonomialArg z, HalfExp base, HalfExp order) {
    if (base <= HalfExp())
        raise(errc::divergent_theta, "theta exponent must grow in both directions");
    std::vector<std::pair<HalfExp, Int>> out;
    for (int dir : {+1, -1}) {
        for (std::int64_t j = (dir > 0) ? 0 : -1;; j += dir) {
            const std::int64_t e2 = base.twice() * j * j + z.exp.twice() * j;
            if (e2 > order.twice()) {
                /* base > 0 makes the exponent eventually increase
                 * monotonically along each direction. */
                if (dir * 2 * base.twice() * j + dir * z.exp.twice() > 0) break;
                continue;
            }
            const int sgn = (z.sign < 0 && ((j % 2) != 0)) ? -1 : 1;
            out.emplace_back(HalfExp::from_twice(e2), Int(sgn));
        }
    }
    return TruncatedSeries(LaurentPoly::from_terms(std::move(out)), order);
}

TruncatedSeries jtp_product(MonomialArg z, HalfExp base, HalfExp order) {
    const MonomialArg a1{+1, base * 2};
    const MonomialArg a2{-z.sign, z.exp + base};
    const MonomialArg a3{-z.sign, base - z.exp};
    return poch_infinite_multi({a1, a2, a3}, base * 2, order);
}

LaurentPoly binomial_transform_factor(std::int64_t L, std::int64_t r) {
    if (r < 0 || r > L) return {};
    const HalfExp q = HalfExp::whole(1);
    return divide_exact(poch_q(q, 2 * L), poch_q(q, L - r) * poch_q(q, 2 * r));
}

} // namespace qtri
