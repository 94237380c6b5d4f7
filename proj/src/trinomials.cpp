#include "qtri/trinomials.hpp"

#include <algorithm>
#include <limits>

namespace qtri {

namespace {

std::int64_t parity_of(std::int64_t x) { return ((x % 2) + 2) % 2; }

/* q^{base*num/den} as a doubled exponent, checked integral. */
HalfExp scaled_exp(HalfExp base, std::int64_t num, std::int64_t den) {
    const std::int64_t t = base.twice() * num;
    if (t % den != 0)
        raise(errc::bad_argument, "exponent is not a half-integer at this base");
    return HalfExp::from_twice(t / den);
}

constexpr std::int64_t kNoWindow = std::numeric_limits<std::int64_t>::max();

} // namespace

LaurentPoly round_trinomial(std::int64_t L, std::int64_t b, std::int64_t a, HalfExp base) {
    if (L < 0) raise(errc::bad_argument, "round trinomial needs L >= 0");
    LaurentPoly acc;
    for (std::int64_t n = std::max<std::int64_t>(0, -a); 2 * n <= L - a; ++n) {
        const auto num = poch_q(base, L);
        const auto den = poch_q(base, n) * poch_q(base, n + a) * poch_q(base, L - 2 * n - a);
        acc += divide_exact(num, den).shifted(scaled_exp(base, n * (n + b), 1));
    }
    return acc;
}

LaurentPoly t_zero(std::int64_t L, std::int64_t a, HalfExp base) {
    if (L < 0) raise(errc::bad_argument, "T0 needs L >= 0");
    const auto mirror = round_trinomial(L, a, a, base).substituted_power(-1);
    const auto r = mirror.shifted(scaled_exp(base, L * L - a * a, 2));
    if (!r.is_zero() && r.min_exp() < HalfExp())
        raise(errc::negative_exponent_result, "T0 normalization did not clear q^(-k)");
    return r;
}

LaurentPoly refined_T(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                      HalfExp base) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "refined T needs L, M >= 0");
    LaurentPoly acc;
    for (std::int64_t n = parity_of(L - a); n <= std::min(M, L - a); n += 2) {
        const std::int64_t h1 = (L - a - n) / 2;
        const std::int64_t h2 = (L + a - n) / 2;
        if (h2 < 0) continue;
        auto term = qbinom(M, n, base) * qbinom(M + b + h1, M + b, base);
        if (term.is_zero()) continue;
        term *= qbinom(M - b + h2, M - b, base);
        acc += term.shifted(scaled_exp(base, n * n, 2));
    }
    return acc;
}

LaurentPoly refined_S(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                      HalfExp base) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "refined S needs L, M >= 0");
    LaurentPoly acc;
    std::int64_t n_max = std::min(M - a + b, M - b);
    if (L - a >= 0) n_max = std::min(n_max, (L - a) / 2); else n_max = -1;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        auto term = qbinom(M + L - a - 2 * n, M, base) * qbinom(M - a + b, n, base);
        if (term.is_zero()) continue;
        term *= qbinom(M + a - b, n + a, base);
        acc += term.shifted(scaled_exp(base, n * (n + a), 1));
    }
    return acc;
}

LaurentPoly refined_T_pm(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                         HalfExp base, int variant) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "refined T variant needs L, M >= 0");
    if (variant != 1 && variant != -1)
        raise(errc::bad_argument, "variant must be +1 or -1");
    LaurentPoly acc;
    for (std::int64_t n = parity_of(L - a); n <= std::min(M, L - a); n += 2) {
        const std::int64_t h1 = (L - a - n) / 2;
        const std::int64_t h2 = (L + a - n) / 2;
        if (h2 < 0) continue;
        auto term = qbinom(M, n, base) * qbinom(M + b + h1, M + b, base);
        if (term.is_zero()) continue;
        term *= qbinom(M - b + h2, M - b, base);
        const std::int64_t c2 = (variant > 0) ? n * (n - 1) / 2 : n * (n + 1) / 2;
        acc += term.shifted(scaled_exp(base, c2, 1));
    }
    return acc;
}

namespace {

bool agree_through(const LaurentPoly& x, const LaurentPoly& y, std::int64_t window2) {
    const auto mm = first_mismatch(x, y);
    if (!mm) return true;
    if (window2 == kNoWindow) return false;
    return mm->exp.twice() >= window2;
}

} // namespace

bool check_T_M_stabilization(std::int64_t L, std::int64_t a, std::int64_t b,
                             HalfExp base, std::int64_t M_big) {
    if (L < 0 || M_big < 0) raise(errc::bad_argument, "stabilization needs L, M >= 0");
    /* Agreement window: summand n first deviates from its limit at
     * n^2/2 + min(M-n, M+b, M-b) + 1 in base units; every n contributing to
     * the limit must sit inside the regime. */
    std::int64_t window2 = kNoWindow;
    for (std::int64_t n = parity_of(L - a); n <= L - a; n += 2) {
        if ((L + a - n) / 2 < 0) continue;
        const std::int64_t slack = std::min({M_big - n, M_big + b, M_big - b});
        if (slack < 0)
            raise(errc::bad_argument, "M_big below the stabilized regime");
        window2 = std::min(window2,
                           scaled_exp(base, n * n, 2).twice() + base.twice() * (slack + 1));
    }
    const auto lhs = refined_T(L, M_big, a, b, base) * poch_q(base, L);
    if (!agree_through(lhs, t_zero(L, a, base), window2)) return false;
    /* witness: the next admissible M agrees with M_big through the window */
    return agree_through(refined_T(L, M_big, a, b, base),
                         refined_T(L, M_big + 1, a, b, base), window2);
}

bool check_T_L_stabilization(std::int64_t M, std::int64_t a, std::int64_t b,
                             HalfExp base, int sigma, std::int64_t L_big) {
    if (M < 0) raise(errc::bad_argument, "stabilization needs M >= 0");
    if (sigma != 0 && sigma != 1) raise(errc::bad_argument, "sigma must be 0 or 1");
    if (parity_of(L_big - a) != sigma)
        raise(errc::bad_argument, "L_big must have parity a + sigma");
    if (base.twice() % 2 != 0)
        raise(errc::bad_argument, "limit along L needs Q^{1/2} in Z[q^{1/2}]");

    const std::int64_t abs_a = a < 0 ? -a : a;
    std::int64_t window2 = kNoWindow;
    for (std::int64_t n = sigma; n <= M; n += 2) {
        const std::int64_t slack = (L_big - abs_a - n) / 2;
        if (L_big - abs_a - n < 0)
            raise(errc::bad_argument, "L_big below the stabilized regime");
        window2 = std::min(window2,
                           scaled_exp(base, n * n, 2).twice() + base.twice() * (slack + 1));
    }

    const HalfExp half_base = HalfExp::from_twice(base.twice() / 2);
    auto even_odd = poch_finite({-1, half_base}, base, M);
    const auto alt = poch_finite({+1, half_base}, base, M);
    if (sigma == 0) even_odd += alt; else even_odd -= alt;
    const auto rhs = even_odd * qbinom(2 * M, M - b, base);

    const auto tv = refined_T(L_big, M, a, b, base);
    const auto lhs = (tv * poch_q(base, 2 * M)).coeff_scaled(2);
    if (!agree_through(lhs, rhs, window2)) return false;
    return agree_through(tv, refined_T(L_big + 2, M, a, b, base), window2);
}

bool check_S_limits(std::int64_t L, std::int64_t M, std::int64_t a, std::int64_t b,
                    HalfExp base, SLimitKind which) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "stabilization needs L, M >= 0");
    const std::int64_t n_lo = std::max<std::int64_t>(0, -a);

    if (which == SLimitKind::M_limit) {
        std::int64_t window2 = kNoWindow;
        for (std::int64_t n = n_lo; 2 * n <= L - a; ++n) {
            const std::int64_t slack = std::min({M, M - a + b - n, M - b - n});
            if (slack < 0) raise(errc::bad_argument, "M below the stabilized regime");
            window2 = std::min(window2, base.twice() * (n * (n + a) + slack + 1));
        }
        const auto lhs = refined_S(L, M, a, b, base) * poch_q(base, L);
        if (!agree_through(lhs, round_trinomial(L, a, a, base), window2)) return false;
        return agree_through(refined_S(L, M, a, b, base),
                             refined_S(L, M + 1, a, b, base), window2);
    }

    /* The L-limit collapses onto a q-Vandermonde sum, which needs both
     * column counts M-a+b and M+a-b nonnegative to hold. */
    if (M - a + b < 0 || M + a - b < 0)
        raise(errc::bad_argument, "L-limit formula needs |a-b| <= M");
    std::int64_t window2 = kNoWindow;
    for (std::int64_t n = n_lo; n <= std::min(M - a + b, M - b); ++n) {
        const std::int64_t slack = L - a - 2 * n;
        if (slack < 0) raise(errc::bad_argument, "L below the stabilized regime");
        window2 = std::min(window2, base.twice() * (n * (n + a) + slack + 1));
    }
    const auto lhs = refined_S(L, M, a, b, base) * poch_q(base, M);
    if (!agree_through(lhs, qbinom(2 * M, M - b, base), window2)) return false;
    return agree_through(refined_S(L, M, a, b, base),
                         refined_S(L + 1, M, a, b, base), window2);
}

} // namespace qtri
