#include "qtri/catalog.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace qtri {

namespace {

const HalfExp q1 = HalfExp::whole(1);
const HalfExp q2 = HalfExp::whole(2);
const HalfExp q3 = HalfExp::whole(3);
const HalfExp q5 = HalfExp::whole(5);
const HalfExp q6 = HalfExp::whole(6);

std::int64_t get(const Binding& b, const char* name) {
    const auto it = b.find(name);
    if (it == b.end()) raise(errc::schema_violation, std::string("missing parameter ") + name);
    return it->second;
}

HalfExp order_of(const Binding& b) { return HalfExp::whole(get(b, "order")); }

std::int64_t isqrt(std::int64_t x) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

/* Bilateral sum driver: walks j = 0, 1, 2, ... and j = -1, -2, ... and stops
 * a direction after three consecutive zero summands past the analytic
 * bound, so correctness never depends on a hand-derived support range. */
LaurentPoly sum_over_j(std::int64_t bound_hint,
                       const std::function<LaurentPoly(std::int64_t)>& term) {
    LaurentPoly acc;
    for (int dir : {+1, -1}) {
        int zeros = 0;
        for (std::int64_t j = (dir > 0) ? 0 : -1;; j += dir) {
            const auto t = term(j);
            if (t.is_zero()) {
                if (++zeros >= 3 && (j > bound_hint || j < -bound_hint)) break;
            } else {
                zeros = 0;
                acc += t;
            }
        }
    }
    return acc;
}

/* All tuples (n_1..n_nu) of nonnegative integers with sum <= cap_linear and
 * weighted sum (sum of k*n_k) <= cap_weighted. */
void for_each_tuple(std::int64_t nu, std::int64_t cap_linear, std::int64_t cap_weighted,
                    const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> ns(static_cast<std::size_t>(nu), 0);
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t k, std::int64_t lin, std::int64_t wgt) {
            if (k > nu) {
                fn(ns);
                return;
            }
            for (std::int64_t n = 0; lin + n <= cap_linear && wgt + k * n <= cap_weighted; ++n) {
                ns[static_cast<std::size_t>(k - 1)] = n;
                rec(k + 1, lin + n, wgt + k * n);
            }
        };
    rec(1, 0, 0);
}

struct TupleSums {
    std::vector<std::int64_t> N;      /* suffix sums N_k = n_k + ... + n_nu */
    std::vector<std::int64_t> prefix; /* prefix[j] = N_1 + ... + N_j (1-based) */
    std::int64_t N1;
    std::int64_t total;               /* sum of all N_k */
    std::int64_t square_sum;          /* sum of all N_k^2 */
};

TupleSums tuple_sums(const std::vector<std::int64_t>& ns) {
    TupleSums s;
    const std::size_t nu = ns.size();
    s.N.assign(nu, 0);
    std::int64_t run = 0;
    for (std::size_t k = nu; k-- > 0;) {
        run += ns[k];
        s.N[k] = run;
    }
    s.prefix.assign(nu + 1, 0);
    s.total = 0;
    s.square_sum = 0;
    for (std::size_t k = 0; k < nu; ++k) {
        s.total += s.N[k];
        s.square_sum += s.N[k] * s.N[k];
        s.prefix[k + 1] = s.prefix[k] + s.N[k];
    }
    s.N1 = nu > 0 ? s.N[0] : 0;
    return s;
}

/* Inverse series 1/(Q;Q)_k for k = 0..k_max at the given order. */
std::vector<TruncatedSeries> poch_inverse_table(HalfExp step, std::int64_t k_max,
                                                HalfExp order) {
    std::vector<TruncatedSeries> tbl;
    tbl.reserve(static_cast<std::size_t>(k_max) + 1);
    TruncatedSeries acc(LaurentPoly::one(), order);
    tbl.push_back(acc);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const auto factor = LaurentPoly::one() - LaurentPoly::power(step * k);
        acc = acc * series_inverse(TruncatedSeries(factor, order));
        tbl.push_back(acc);
    }
    return tbl;
}

/* ---- seed identity and its outlook variants ---- */

/* exponent_tweak: 0 gives q^{m^2}, +1 gives q^{m^2-m}, -1 gives q^{m^2+m} */
LaurentPoly seed_lhs(std::int64_t L, std::int64_t M, int exponent_tweak) {
    LaurentPoly acc;
    for (std::int64_t m = L % 2; m <= std::min(3 * M, L); m += 2) {
        const std::int64_t e = m * m - exponent_tweak * m;
        acc += (qbinom(3 * M, m, q2) * qbinom(2 * M + (L - m) / 2, 2 * M, q6))
                   .shifted(HalfExp::whole(e));
    }
    return acc;
}

LaurentPoly seed_rhs(std::int64_t L, std::int64_t M) {
    return sum_over_j(std::min(L, M) + 1, [&](std::int64_t j) {
        return refined_T(L, M, j, j, q6).shifted(HalfExp::whole(3 * j * j + 2 * j));
    });
}

LaurentPoly outlook_rhs(std::int64_t L, std::int64_t M, int variant) {
    return sum_over_j(std::min(L, M) + 1, [&](std::int64_t j) {
        return refined_T_pm(L, M, j, j, q6, variant).shifted(HalfExp::whole(3 * j * j + j));
    });
}

/* ---- first hierarchy ---- */

LaurentPoly t_hierarchy_lhs(std::int64_t nu, std::int64_t L, std::int64_t M) {
    LaurentPoly acc;
    for_each_tuple(nu, M, L, [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        const std::int64_t n_last = ns.back();
        LaurentPoly levels = qbinom(L + M - s.N1, L, q6);
        for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
            levels *= qbinom(L - s.prefix[static_cast<std::size_t>(j)] +
                                 ns[static_cast<std::size_t>(j - 1)],
                             ns[static_cast<std::size_t>(j - 1)], q6);
        if (levels.is_zero()) return;
        for (std::int64_t m = ((L + s.total) % 2 + 2) % 2;
             m <= std::min(3 * n_last, L - s.total); m += 2) {
            const auto term =
                levels * qbinom(3 * n_last, m, q2) *
                qbinom(2 * n_last + (L - m - s.total) / 2, 2 * n_last, q6);
            acc += term.shifted(HalfExp::whole(m * m + 3 * s.square_sum));
        }
    });
    return acc;
}

LaurentPoly t_hierarchy_rhs(std::int64_t nu, std::int64_t L, std::int64_t M) {
    return sum_over_j(std::min(L, M) + 1, [&](std::int64_t j) {
        return refined_T(L, M, (nu + 1) * j, j, q6)
            .shifted(HalfExp::whole(3 * (nu + 1) * j * j + 2 * j));
    });
}

LaurentPoly t_hierarchy_limit_M_lhs(std::int64_t nu, std::int64_t L) {
    LaurentPoly acc;
    for_each_tuple(nu, L, L, [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        const std::int64_t n_last = ns.back();
        LaurentPoly levels = LaurentPoly::one();
        for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
            levels *= qbinom(L - s.prefix[static_cast<std::size_t>(j)] +
                                 ns[static_cast<std::size_t>(j - 1)],
                             ns[static_cast<std::size_t>(j - 1)], q6);
        if (levels.is_zero()) return;
        for (std::int64_t m = ((L + s.total) % 2 + 2) % 2;
             m <= std::min(3 * n_last, L - s.total); m += 2) {
            const auto term =
                levels * qbinom(3 * n_last, m, q2) *
                qbinom(2 * n_last + (L - m - s.total) / 2, 2 * n_last, q6);
            acc += term.shifted(HalfExp::whole(m * m + 3 * s.square_sum));
        }
    });
    return acc;
}

LaurentPoly t_hierarchy_limit_M_rhs(std::int64_t nu, std::int64_t L) {
    return sum_over_j(L + 1, [&](std::int64_t j) {
        return t_zero(L, (nu + 1) * j, q6)
            .shifted(HalfExp::whole(3 * (nu + 1) * j * j + 2 * j));
    });
}

TruncatedSeries t_hierarchy_limit_L_lhs(std::int64_t nu, std::int64_t M, HalfExp order) {
    const auto inv6 = poch_inverse_table(q6, 2 * M, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for_each_tuple(nu, M, std::numeric_limits<std::int64_t>::max() / 4,
                   [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        if (3 * s.square_sum > order.whole_part()) return;
        const std::int64_t n_last = ns.back();
        auto numer = poch_finite(minus_q(q1), q2, 3 * n_last)
                         .shifted(HalfExp::whole(3 * s.square_sum));
        auto term = inv6[static_cast<std::size_t>(M - s.N1)].times_poly(numer);
        for (std::int64_t k = 1; k <= nu - 1; ++k)
            term = term * inv6[static_cast<std::size_t>(ns[static_cast<std::size_t>(k - 1)])];
        term = term * inv6[static_cast<std::size_t>(2 * n_last)];
        acc = acc + term;
    });
    return acc;
}

TruncatedSeries t_hierarchy_limit_L_rhs(std::int64_t nu, std::int64_t M, HalfExp order) {
    LaurentPoly theta;
    for (std::int64_t j = -M; j <= M; ++j)
        theta += qbinom(2 * M, M + j, q6)
                     .shifted(HalfExp::whole(3 * (nu + 1) * j * j + 2 * j));
    const auto pre = poch_finite(minus_q(q3), q6, M) * theta;
    return series_inverse(TruncatedSeries(poch_q(q6, 2 * M), order)).times_poly(pre);
}

TruncatedSeries end_of_t_lhs(std::int64_t nu, HalfExp order) {
    const std::int64_t cap = isqrt(order.whole_part() / 3) + 1;
    const auto inv6 = poch_inverse_table(q6, 2 * cap, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for_each_tuple(nu, cap, std::numeric_limits<std::int64_t>::max() / 4,
                   [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        if (3 * s.square_sum > order.whole_part()) return;
        const std::int64_t n_last = ns.back();
        const auto numer = poch_finite(minus_q(q1), q2, 3 * n_last)
                               .shifted(HalfExp::whole(3 * s.square_sum));
        auto term = inv6[static_cast<std::size_t>(2 * n_last)].times_poly(numer);
        for (std::int64_t k = 1; k <= nu - 1; ++k)
            term = term * inv6[static_cast<std::size_t>(ns[static_cast<std::size_t>(k - 1)])];
        acc = acc + term;
    });
    return acc;
}

TruncatedSeries end_of_t_rhs(std::int64_t nu, HalfExp order) {
    const auto front = poch_infinite(minus_q(q3), q3, order) *
                       series_inverse(poch_infinite(plus_q(HalfExp::whole(12)),
                                                    HalfExp::whole(12), order));
    const HalfExp step = HalfExp::whole(6 * (nu + 1));
    return front * poch_infinite_multi({plus_q(step),
                                        minus_q(HalfExp::whole(3 * nu + 1)),
                                        minus_q(HalfExp::whole(3 * nu + 5))},
                                       step, order);
}

/* ---- second hierarchy ---- */

LaurentPoly nu0_s_lhs(std::int64_t L, std::int64_t M) {
    LaurentPoly acc;
    for (std::int64_t i = 0; i <= std::min(L, M); ++i) {
        const auto outer = qbinom(L + M - i, L, q3);
        for (std::int64_t m = i % 2; m <= std::min(3 * (L - i), i); m += 2) {
            const auto term = outer * qbinom(3 * (L - i), m, q1) *
                              qbinom(2 * (L - i) + (i - m) / 2, 2 * (L - i), q3);
            acc += term.shifted(HalfExp::from_twice(m * m + 3 * i * i));
        }
    }
    return acc;
}

LaurentPoly nu0_s_rhs(std::int64_t L, std::int64_t M) {
    return sum_over_j(L + M + 1, [&](std::int64_t j) {
        return refined_S(L, M, 2 * j, j, q3).shifted(HalfExp::whole(3 * j * j + j));
    });
}

LaurentPoly s_hierarchy_lhs(std::int64_t nu, std::int64_t L, std::int64_t M) {
    LaurentPoly acc;
    for_each_tuple(nu, L, std::min(L, M), [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        const std::int64_t n_last = ns.back();
        for (std::int64_t i = s.total; i <= std::min(M, L - s.N1); ++i) {
            auto levels = qbinom(L + M - i, L, q3) * qbinom(L - s.N1, i, q3);
            for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
                levels *= qbinom(i - s.prefix[static_cast<std::size_t>(j)] +
                                     ns[static_cast<std::size_t>(j - 1)],
                                 ns[static_cast<std::size_t>(j - 1)], q3);
            if (levels.is_zero()) continue;
            for (std::int64_t m = ((i + s.total) % 2 + 2) % 2;
                 m <= std::min(3 * n_last, i - s.total); m += 2) {
                const auto term =
                    levels * qbinom(3 * n_last, m, q1) *
                    qbinom(2 * n_last + (i - m - s.total) / 2, 2 * n_last, q3);
                acc += term.shifted(
                    HalfExp::from_twice(m * m + 3 * (i * i + s.square_sum)));
            }
        }
    });
    return acc;
}

LaurentPoly s_hierarchy_rhs(std::int64_t nu, std::int64_t L, std::int64_t M) {
    const std::int64_t c = (nu + 1) * (nu + 2) / 2;
    return sum_over_j(L + M + 1, [&](std::int64_t j) {
        return refined_S(L, M, (nu + 2) * j, (nu + 1) * j, q3)
            .shifted(HalfExp::whole(3 * c * j * j + j));
    });
}

LaurentPoly s_hierarchy_limit_M_lhs(std::int64_t nu, std::int64_t L) {
    LaurentPoly acc;
    for_each_tuple(nu, L, L, [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        const std::int64_t n_last = ns.back();
        for (std::int64_t i = s.total; i <= L - s.N1; ++i) {
            auto levels = qbinom(L - s.N1, i, q3);
            for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
                levels *= qbinom(i - s.prefix[static_cast<std::size_t>(j)] +
                                     ns[static_cast<std::size_t>(j - 1)],
                                 ns[static_cast<std::size_t>(j - 1)], q3);
            if (levels.is_zero()) continue;
            for (std::int64_t m = ((i + s.total) % 2 + 2) % 2;
                 m <= std::min(3 * n_last, i - s.total); m += 2) {
                const auto term =
                    levels * qbinom(3 * n_last, m, q1) *
                    qbinom(2 * n_last + (i - m - s.total) / 2, 2 * n_last, q3);
                acc += term.shifted(
                    HalfExp::from_twice(m * m + 3 * (i * i + s.square_sum)));
            }
        }
    });
    return acc;
}

LaurentPoly s_hierarchy_limit_M_rhs(std::int64_t nu, std::int64_t L) {
    const std::int64_t c = (nu + 1) * (nu + 2) / 2;
    return sum_over_j(L + 1, [&](std::int64_t j) {
        return round_trinomial(L, (nu + 2) * j, (nu + 2) * j, q3)
            .shifted(HalfExp::whole(3 * c * j * j + j));
    });
}

LaurentPoly s_hierarchy_limit_L_lhs(std::int64_t nu, std::int64_t M) {
    LaurentPoly acc;
    for_each_tuple(nu, M, M, [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        const std::int64_t n_last = ns.back();
        for (std::int64_t i = s.total; i <= M; ++i) {
            auto levels = qbinom(M, i, q3);
            for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
                levels *= qbinom(i - s.prefix[static_cast<std::size_t>(j)] +
                                     ns[static_cast<std::size_t>(j - 1)],
                                 ns[static_cast<std::size_t>(j - 1)], q3);
            if (levels.is_zero()) continue;
            for (std::int64_t m = ((i + s.total) % 2 + 2) % 2;
                 m <= std::min(3 * n_last, i - s.total); m += 2) {
                const auto term =
                    levels * qbinom(3 * n_last, m, q1) *
                    qbinom(2 * n_last + (i - m - s.total) / 2, 2 * n_last, q3);
                acc += term.shifted(
                    HalfExp::from_twice(m * m + 3 * (i * i + s.square_sum)));
            }
        }
    });
    return acc;
}

LaurentPoly s_hierarchy_limit_L_rhs(std::int64_t nu, std::int64_t M) {
    const std::int64_t c = (nu + 1) * (nu + 2) / 2;
    return sum_over_j(M + 1, [&](std::int64_t j) {
        return qbinom(2 * M, M + (nu + 1) * j, q3)
            .shifted(HalfExp::whole(3 * c * j * j + j));
    });
}

TruncatedSeries end_of_s_lhs(std::int64_t nu, HalfExp order) {
    const std::int64_t i_max = isqrt(order.twice() / 3);
    const auto inv3 = poch_inverse_table(q3, i_max, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for_each_tuple(nu, i_max, std::numeric_limits<std::int64_t>::max() / 4,
                   [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        if (3 * s.square_sum > order.twice()) return;
        const std::int64_t n_last = ns.back();
        for (std::int64_t i = s.total; 3 * i * i + 3 * s.square_sum <= order.twice(); ++i) {
            LaurentPoly levels = LaurentPoly::one();
            for (std::int64_t j = 1; j <= nu - 1 && !levels.is_zero(); ++j)
                levels *= qbinom(i - s.prefix[static_cast<std::size_t>(j)] +
                                     ns[static_cast<std::size_t>(j - 1)],
                                 ns[static_cast<std::size_t>(j - 1)], q3);
            if (levels.is_zero()) continue;
            LaurentPoly inner;
            for (std::int64_t m = ((i + s.total) % 2 + 2) % 2;
                 m <= std::min(3 * n_last, i - s.total); m += 2) {
                const auto term =
                    levels * qbinom(3 * n_last, m, q1) *
                    qbinom(2 * n_last + (i - m - s.total) / 2, 2 * n_last, q3);
                inner += term.shifted(
                    HalfExp::from_twice(m * m + 3 * (i * i + s.square_sum)));
            }
            if (!inner.is_zero()) acc = acc + inv3[static_cast<std::size_t>(i)].times_poly(inner);
        }
    });
    return acc;
}

TruncatedSeries end_of_s_rhs(std::int64_t nu, HalfExp order) {
    const std::int64_t c = (nu + 1) * (nu + 2) / 2;
    const HalfExp step = HalfExp::whole(6 * c);
    const auto prod = poch_infinite_multi({plus_q(step),
                                           minus_q(HalfExp::whole(3 * c + 1)),
                                           minus_q(HalfExp::whole(3 * c - 1))},
                                          step, order);
    return prod * series_inverse(poch_infinite(plus_q(q3), q3, order));
}

/* ---- limits of the terminal identity ---- */

LaurentPoly limit_andrews_k_lhs(std::int64_t L) {
    LaurentPoly acc;
    for (std::int64_t n = 0; 2 * n <= L; ++n)
        for (std::int64_t m = 0; 2 * n + m <= L; ++m) {
            const auto term = qbinom(3 * (L - 2 * n - m), m, q1) *
                              qbinom(2 * (L - 2 * n - m) + n, n, q3);
            if (term.is_zero()) continue;
            acc += term.shifted(
                HalfExp::whole(2 * m * m + 6 * m * n + 6 * n * n));
        }
    return acc;
}

LaurentPoly limit_andrews_k_rhs(std::int64_t L) {
    return sum_over_j(L + 1, [&](std::int64_t j) {
        return round_trinomial(L, 2 * j, 2 * j, q3).shifted(HalfExp::whole(3 * j * j + j));
    });
}

TruncatedSeries limit_andrews_dk_lhs(std::int64_t M, HalfExp order) {
    const auto numer = poch_q(q3, M);
    const auto inv1 = poch_inverse_table(q1, M, order);
    const auto inv3 = poch_inverse_table(q3, M, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for (std::int64_t n = 0; 2 * n <= M; ++n)
        for (std::int64_t m = 0; 2 * n + m <= M; ++m) {
            const std::int64_t w = 2 * m * m + 6 * m * n + 6 * n * n;
            if (w > order.whole_part()) continue;
            auto term = inv1[static_cast<std::size_t>(m)] *
                        inv3[static_cast<std::size_t>(n)] *
                        inv3[static_cast<std::size_t>(M - 2 * n - m)];
            acc = acc + term.times_poly(numer.shifted(HalfExp::whole(w)));
        }
    return acc;
}

TruncatedSeries limit_andrews_dk_rhs(std::int64_t M, HalfExp order) {
    LaurentPoly acc;
    for (std::int64_t j = -M; j <= M; ++j)
        acc += qbinom(2 * M, M + j, q3).shifted(HalfExp::whole(3 * j * j + j));
    return TruncatedSeries(acc, order);
}

TruncatedSeries kr1_lhs(HalfExp order) {
    const std::int64_t m_max = isqrt(order.whole_part() / 2);
    const std::int64_t n_max = isqrt(order.whole_part() / 6);
    const auto inv1 = poch_inverse_table(q1, m_max, order);
    const auto inv3 = poch_inverse_table(q3, n_max, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for (std::int64_t m = 0; m <= m_max; ++m)
        for (std::int64_t n = 0; n <= n_max; ++n) {
            const std::int64_t w = 2 * m * m + 6 * m * n + 6 * n * n;
            if (w > order.whole_part()) continue;
            const auto term = inv1[static_cast<std::size_t>(m)] *
                              inv3[static_cast<std::size_t>(n)];
            acc = acc + term.times_poly(LaurentPoly::power(HalfExp::whole(w)));
        }
    return acc;
}

TruncatedSeries kr1_rhs(HalfExp order) {
    return poch_infinite_multi({minus_q(q2), minus_q(HalfExp::whole(4))}, q6, order) *
           poch_infinite(minus_q(q3), q3, order);
}

/* ---- warm-up chain ---- */

LaurentPoly first_iteration_lhs(std::int64_t L) {
    return divide_exact(poch_q(q1, 2 * L), poch_q(q1, L));
}

LaurentPoly first_iteration_rhs(std::int64_t L) {
    LaurentPoly acc;
    for (std::int64_t j = -L; j <= L; ++j)
        acc += qbinom(2 * L, L + j, q1)
                   .shifted(HalfExp::whole(j * j + j * (j - 1) / 2))
                   .coeff_scaled((j % 2) != 0 ? -1 : 1);
    return acc;
}

LaurentPoly second_iteration_lhs(std::int64_t L) {
    LaurentPoly inner;
    for (std::int64_t r = 0; r <= L; ++r)
        inner += qbinom(L, r, q1).shifted(HalfExp::whole(r * r));
    return first_iteration_lhs(L) * inner;
}

LaurentPoly second_iteration_rhs(std::int64_t L) {
    LaurentPoly acc;
    for (std::int64_t j = -L; j <= L; ++j)
        acc += qbinom(2 * L, L + j, q1)
                   .shifted(HalfExp::whole(2 * j * j + j * (j - 1) / 2))
                   .coeff_scaled((j % 2) != 0 ? -1 : 1);
    return acc;
}

TruncatedSeries andrews_gordon_lhs(std::int64_t nu, HalfExp order) {
    const std::int64_t cap = isqrt(order.whole_part()) + 1;
    const auto inv1 = poch_inverse_table(q1, cap, order);
    TruncatedSeries acc(LaurentPoly(), order);
    for_each_tuple(nu, cap, std::numeric_limits<std::int64_t>::max() / 4,
                   [&](const std::vector<std::int64_t>& ns) {
        const auto s = tuple_sums(ns);
        if (s.square_sum > order.whole_part()) return;
        TruncatedSeries term(LaurentPoly::power(HalfExp::whole(s.square_sum)), order);
        for (const auto n : ns) term = term * inv1[static_cast<std::size_t>(n)];
        acc = acc + term;
    });
    return acc;
}

TruncatedSeries andrews_gordon_rhs(std::int64_t nu, HalfExp order) {
    const std::int64_t mod = 2 * nu + 3;
    TruncatedSeries prod(LaurentPoly::one(), order);
    for (std::int64_t n = 1; n <= order.whole_part(); ++n) {
        const std::int64_t r = n % mod;
        if (r == 0 || r == nu + 1 || r == nu + 2) continue;
        prod = prod.times_poly(LaurentPoly::one() - LaurentPoly::power(HalfExp::whole(n)));
    }
    return series_inverse(prod);
}

/* ---- M -> infinity companion of the seed ---- */

LaurentPoly thm39_lhs(std::int64_t L) {
    LaurentPoly acc;
    for (std::int64_t m = L % 2; m <= L; m += 2) {
        const auto factor =
            divide_exact(poch_q(q6, L), poch_q(q2, m) * poch_q(q6, (L - m) / 2));
        acc += factor.shifted(HalfExp::whole(m * m));
    }
    return acc;
}

LaurentPoly thm39_rhs(std::int64_t L) {
    return sum_over_j(L + 1, [&](std::int64_t j) {
        return t_zero(L, j, q6).shifted(HalfExp::whole(3 * j * j + 2 * j));
    });
}

LaurentPoly t_limit_L_of_seed_lhs(std::int64_t M, std::int64_t sigma) {
    auto r = poch_finite(minus_q(q1), q2, 3 * M);
    const auto alt = poch_finite(plus_q(q1), q2, 3 * M);
    if (sigma == 0) r += alt; else r -= alt;
    return r;
}

LaurentPoly t_limit_L_of_seed_rhs(std::int64_t M, std::int64_t sigma) {
    LaurentPoly plain, alternating;
    for (std::int64_t j = -M; j <= M; ++j) {
        const auto b = qbinom(2 * M, M + j, q6).shifted(HalfExp::whole(3 * j * j + 2 * j));
        plain += b;
        alternating += b.coeff_scaled((j % 2) != 0 ? -1 : 1);
    }
    auto r = poch_finite(minus_q(q3), q6, M) * plain;
    const auto second = poch_finite(plus_q(q3), q6, M) * alternating;
    if (sigma == 0) r += second; else r -= second;
    return r;
}

} // namespace

/* ---- public hierarchy sides ---- */

std::pair<LaurentPoly, LaurentPoly> t_hierarchy_sides(std::int64_t nu, std::int64_t L,
                                                      std::int64_t M) {
    if (nu < 1) raise(errc::bad_argument, "hierarchy depth nu must be >= 1");
    return {t_hierarchy_lhs(nu, L, M), t_hierarchy_rhs(nu, L, M)};
}

std::pair<LaurentPoly, LaurentPoly> s_hierarchy_sides(std::int64_t nu, std::int64_t L,
                                                      std::int64_t M) {
    if (nu < 1) raise(errc::bad_argument, "hierarchy depth nu must be >= 1");
    return {s_hierarchy_lhs(nu, L, M), s_hierarchy_rhs(nu, L, M)};
}

/* ---- trinomial pair machinery ---- */

namespace {

void check_pair_expansion(const TrinomialPair& p) {
    for (std::int64_t L = 0; L <= p.L_max; ++L)
        for (std::int64_t M = 0; M <= p.M_max; ++M) {
            const auto direct = sum_over_j(
                std::max(p.L_max, p.M_max) + 1, [&](std::int64_t j) {
                    return p.alpha(j) *
                           refined_T(L, M, p.a_mult * j, p.b_mult * j, p.base);
                });
            if (!(direct ==
                  p.F[static_cast<std::size_t>(L)][static_cast<std::size_t>(M)]))
                raise(errc::bad_argument,
                      "trinomial pair fails its defining expansion");
        }
}

} // namespace

TrinomialPair seed_trinomial_pair(std::int64_t L_max, std::int64_t M_max) {
    if (L_max < 0 || M_max < 0) raise(errc::bad_argument, "window must be nonnegative");
    TrinomialPair p;
    p.base = q6;
    p.a_mult = 1;
    p.b_mult = 1;
    p.L_max = L_max;
    p.M_max = M_max;
    p.F.assign(static_cast<std::size_t>(L_max) + 1, {});
    for (std::int64_t L = 0; L <= L_max; ++L) {
        auto& row = p.F[static_cast<std::size_t>(L)];
        row.reserve(static_cast<std::size_t>(M_max) + 1);
        for (std::int64_t M = 0; M <= M_max; ++M) row.push_back(seed_lhs(L, M, 0));
    }
    p.alpha = [](std::int64_t j) {
        return LaurentPoly::power(HalfExp::whole(3 * j * j + 2 * j));
    };
    check_pair_expansion(p);
    return p;
}

TrinomialPair halved_base(const TrinomialPair& p) {
    TrinomialPair h;
    if (p.base.twice() % 2 != 0)
        raise(errc::bad_argument, "cannot halve an odd doubled base");
    h.base = HalfExp::from_twice(p.base.twice() / 2);
    h.a_mult = p.a_mult;
    h.b_mult = p.b_mult;
    h.L_max = p.L_max;
    h.M_max = p.M_max;
    h.F.assign(p.F.size(), {});
    for (std::size_t L = 0; L < p.F.size(); ++L) {
        h.F[L].reserve(p.F[L].size());
        for (const auto& f : p.F[L]) h.F[L].push_back(f.halved_exponents());
    }
    const auto alpha = p.alpha;
    h.alpha = [alpha](std::int64_t j) { return alpha(j).halved_exponents(); };
    check_pair_expansion(h);
    return h;
}

LaurentPoly transform_T_step(const TrinomialPair& p, std::int64_t L, std::int64_t M) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "transform needs L, M >= 0");
    if (L > p.L_max || std::min(L, M) > p.M_max)
        raise(errc::window_too_small, "pair window does not cover the requested step");
    LaurentPoly acc;
    for (std::int64_t i = 0; i <= std::min(L, M); ++i) {
        const std::int64_t e2 = p.base.twice() * i * i;
        if (e2 % 2 != 0) raise(errc::bad_argument, "transform prefactor not half-integral");
        acc += (qbinom(L + M - i, L, p.base) *
                p.F[static_cast<std::size_t>(L - i)][static_cast<std::size_t>(i)])
                   .shifted(HalfExp::from_twice(e2 / 2));
    }
    return acc;
}

TrinomialPair transform_T(const TrinomialPair& p, std::int64_t L_max, std::int64_t M_max) {
    if (L_max > p.L_max || M_max > p.M_max)
        raise(errc::window_too_small, "transformed window exceeds the source window");
    TrinomialPair t;
    t.base = p.base;
    t.a_mult = p.a_mult + p.b_mult;
    t.b_mult = p.b_mult;
    t.L_max = L_max;
    t.M_max = M_max;
    t.F.assign(static_cast<std::size_t>(L_max) + 1, {});
    for (std::int64_t L = 0; L <= L_max; ++L) {
        auto& row = t.F[static_cast<std::size_t>(L)];
        row.reserve(static_cast<std::size_t>(M_max) + 1);
        for (std::int64_t M = 0; M <= M_max; ++M) row.push_back(transform_T_step(p, L, M));
    }
    const auto alpha = p.alpha;
    const auto base2 = p.base.twice();
    const auto bm = p.b_mult;
    t.alpha = [alpha, base2, bm](std::int64_t j) {
        const std::int64_t e2 = base2 * (bm * j) * (bm * j);
        if (e2 % 2 != 0) raise(errc::bad_argument, "alpha prefactor not half-integral");
        return alpha(j).shifted(HalfExp::from_twice(e2 / 2));
    };
    check_pair_expansion(t);
    return t;
}

LaurentPoly transform_S_step(const TrinomialPair& p, std::int64_t L, std::int64_t M) {
    if (L < 0 || M < 0) raise(errc::bad_argument, "transform needs L, M >= 0");
    if (std::min(L, M) > p.L_max || L > p.M_max)
        raise(errc::window_too_small, "pair window does not cover the requested step");
    LaurentPoly acc;
    for (std::int64_t i = 0; i <= std::min(L, M); ++i) {
        const std::int64_t e2 = p.base.twice() * i * i;
        if (e2 % 2 != 0) raise(errc::bad_argument, "transform prefactor not half-integral");
        acc += (qbinom(L + M - i, L, p.base) *
                p.F[static_cast<std::size_t>(i)][static_cast<std::size_t>(L - i)])
                   .shifted(HalfExp::from_twice(e2 / 2));
    }
    return acc;
}

/* ---- catalog ---- */

namespace {

ParamSpec pL(std::int64_t lo, std::int64_t hi) { return {"L", 0, std::nullopt, lo, hi}; }
ParamSpec pM(std::int64_t lo, std::int64_t hi) { return {"M", 0, std::nullopt, lo, hi}; }
ParamSpec pNu(std::int64_t hi) { return {"nu", 1, 8, 1, hi}; }
ParamSpec pOrder(std::int64_t dflt) { return {"order", 0, 5000, dflt, dflt}; }

} // namespace

Catalog::Catalog() {
    auto add_poly = [&](std::string id, std::string description,
                        std::vector<ParamSpec> params,
                        std::function<LaurentPoly(const Binding&)> lhs,
                        std::function<LaurentPoly(const Binding&)> rhs) {
        IdentityDescriptor d;
        d.id = std::move(id);
        d.kind = IdentityKind::polynomial;
        d.description = std::move(description);
        d.params = std::move(params);
        d.poly_lhs = std::move(lhs);
        d.poly_rhs = std::move(rhs);
        index_[d.id] = entries_.size();
        entries_.push_back(std::move(d));
    };
    auto add_series = [&](std::string id, std::string description,
                          std::vector<ParamSpec> params,
                          std::function<TruncatedSeries(const Binding&)> lhs,
                          std::function<TruncatedSeries(const Binding&)> rhs) {
        IdentityDescriptor d;
        d.id = std::move(id);
        d.kind = IdentityKind::series;
        d.description = std::move(description);
        d.params = std::move(params);
        d.series_lhs = std::move(lhs);
        d.series_rhs = std::move(rhs);
        index_[d.id] = entries_.size();
        entries_.push_back(std::move(d));
    };

    add_poly("intro_transform", "binomial summation kernel acting on a shifted binomial",
             {pL(0, 8), {"j", 0, std::nullopt, 0, 4}},
             [](const Binding& b) {
                 const auto L = get(b, "L");
                 const auto j = get(b, "j");
                 LaurentPoly acc;
                 for (std::int64_t r = 0; r <= L; ++r)
                     acc += (binomial_transform_factor(L, r) * qbinom(2 * r, r - j, q1))
                                .shifted(HalfExp::whole(r * r));
                 return acc;
             },
             [](const Binding& b) {
                 const auto L = get(b, "L");
                 const auto j = get(b, "j");
                 return qbinom(2 * L, L - j, q1).shifted(HalfExp::whole(j * j));
             });

    add_poly("kronecker_delta", "alternating binomial sum collapsing to a delta",
             {pL(0, 10)},
             [](const Binding& b) {
                 const auto L = get(b, "L");
                 LaurentPoly acc;
                 for (std::int64_t j = -L; j <= L; ++j)
                     acc += qbinom(2 * L, L + j, q1)
                                .shifted(HalfExp::whole(j * (j - 1) / 2))
                                .coeff_scaled((j % 2) != 0 ? -1 : 1);
                 return acc;
             },
             [](const Binding& b) {
                 return get(b, "L") == 0 ? LaurentPoly::one() : LaurentPoly();
             });

    add_poly("warmup_first_iteration",
             "(q;q)_{2L}/(q;q)_L as an alternating binomial sum", {pL(0, 10)},
             [](const Binding& b) { return first_iteration_lhs(get(b, "L")); },
             [](const Binding& b) { return first_iteration_rhs(get(b, "L")); });

    add_poly("warmup_second_iteration", "bounded form of the first Rogers-Ramanujan identity",
             {pL(0, 10)},
             [](const Binding& b) { return second_iteration_lhs(get(b, "L")); },
             [](const Binding& b) { return second_iteration_rhs(get(b, "L")); });

    add_series("pentagonal", "Euler pentagonal number theorem", {pOrder(100)},
               [](const Binding& b) {
                   return jtp_theta({-1, HalfExp::from_twice(1)}, HalfExp::from_twice(3),
                                    order_of(b));
               },
               [](const Binding& b) { return poch_infinite(plus_q(q1), q1, order_of(b)); });

    add_series("rogers_ramanujan_1", "first Rogers-Ramanujan identity", {pOrder(80)},
               [](const Binding& b) {
                   const auto order = order_of(b);
                   const std::int64_t r_max = isqrt(order.whole_part());
                   const auto inv1 = poch_inverse_table(q1, r_max, order);
                   TruncatedSeries acc(LaurentPoly(), order);
                   for (std::int64_t r = 0; r <= r_max; ++r)
                       acc = acc + inv1[static_cast<std::size_t>(r)].times_poly(
                                       LaurentPoly::power(HalfExp::whole(r * r)));
                   return acc;
               },
               [](const Binding& b) {
                   return series_inverse(poch_infinite_multi(
                       {plus_q(q1), plus_q(HalfExp::whole(4))}, q5, order_of(b)));
               });

    add_series("andrews_gordon", "Andrews-Gordon hierarchy", {pNu(3), pOrder(60)},
               [](const Binding& b) {
                   return andrews_gordon_lhs(get(b, "nu"), order_of(b));
               },
               [](const Binding& b) {
                   return andrews_gordon_rhs(get(b, "nu"), order_of(b));
               });

    add_poly("finite_jtp", "bounded Jacobi triple product over monomials z = +-q^s",
             {pM(0, 8), {"s", -10, 10, -3, 3}, {"neg", 0, 1, 0, 1}},
             [](const Binding& b) {
                 const MonomialArg z{get(b, "neg") != 0 ? -1 : +1,
                                     HalfExp::whole(get(b, "s"))};
                 return finite_jtp_lhs(get(b, "M"), z, q1);
             },
             [](const Binding& b) {
                 const MonomialArg z{get(b, "neg") != 0 ? -1 : +1,
                                     HalfExp::whole(get(b, "s"))};
                 return finite_jtp_rhs(get(b, "M"), z, q1);
             });

    add_poly("fin_jtp_156", "bounded triple product at z = q^2 over base q^3", {pM(0, 10)},
             [](const Binding& b) {
                 return finite_jtp_lhs(get(b, "M"), plus_q(q2), q3);
             },
             [](const Binding& b) {
                 const auto M = get(b, "M");
                 return poch_finite(minus_q(q1), q6, M) * poch_finite(minus_q(q5), q6, M);
             });

    add_series("jtp", "Jacobi triple product over monomials z = +-q^s",
               {{"s", -10, 10, 0, 1}, {"neg", 0, 1, 0, 1}, {"base", 1, 10, 2, 3},
                pOrder(40)},
               [](const Binding& b) {
                   const std::int64_t s = get(b, "s");
                   const std::int64_t base = get(b, "base");
                   if (s >= base || -s >= base)
                       raise(errc::schema_violation, "jtp needs |s| < base");
                   const MonomialArg z{get(b, "neg") != 0 ? -1 : +1, HalfExp::whole(s)};
                   return jtp_theta(z, HalfExp::whole(base), order_of(b));
               },
               [](const Binding& b) {
                   const std::int64_t s = get(b, "s");
                   const std::int64_t base = get(b, "base");
                   if (s >= base || -s >= base)
                       raise(errc::schema_violation, "jtp needs |s| < base");
                   const MonomialArg z{get(b, "neg") != 0 ? -1 : +1, HalfExp::whole(s)};
                   return jtp_product(z, HalfExp::whole(base), order_of(b));
               });

    add_poly("seed", "doubly bounded seed identity expanded over refined T",
             {pL(0, 10), pM(0, 5)},
             [](const Binding& b) { return seed_lhs(get(b, "L"), get(b, "M"), 0); },
             [](const Binding& b) { return seed_rhs(get(b, "L"), get(b, "M")); });

    add_poly("thm39_cap2", "companion of the seed identity with M removed", {pL(0, 10)},
             [](const Binding& b) { return thm39_lhs(get(b, "L")); },
             [](const Binding& b) { return thm39_rhs(get(b, "L")); });

    add_poly("t_limit_L_of_seed", "parity split of the seed identity with L removed",
             {pM(0, 8), {"sigma", 0, 1, 0, 1}},
             [](const Binding& b) {
                 return t_limit_L_of_seed_lhs(get(b, "M"), get(b, "sigma"));
             },
             [](const Binding& b) {
                 return t_limit_L_of_seed_rhs(get(b, "M"), get(b, "sigma"));
             });

    add_poly("t_hierarchy", "first doubly bounded hierarchy", {pNu(2), pL(0, 5), pM(0, 5)},
             [](const Binding& b) {
                 return t_hierarchy_lhs(get(b, "nu"), get(b, "L"), get(b, "M"));
             },
             [](const Binding& b) {
                 return t_hierarchy_rhs(get(b, "nu"), get(b, "L"), get(b, "M"));
             });

    add_series("t_hierarchy_limit_L", "first hierarchy with L removed",
               {pNu(2), pM(0, 4), pOrder(60)},
               [](const Binding& b) {
                   return t_hierarchy_limit_L_lhs(get(b, "nu"), get(b, "M"), order_of(b));
               },
               [](const Binding& b) {
                   return t_hierarchy_limit_L_rhs(get(b, "nu"), get(b, "M"), order_of(b));
               });

    add_series("fin_analog_67", "first hierarchy with L removed at depth one",
               {pM(0, 6), pOrder(60)},
               [](const Binding& b) {
                   const auto M = get(b, "M");
                   const auto order = order_of(b);
                   const auto inv6 = poch_inverse_table(q6, 2 * M, order);
                   TruncatedSeries acc(LaurentPoly(), order);
                   for (std::int64_t n = 0; n <= M; ++n) {
                       if (3 * n * n > order.whole_part()) break;
                       const auto numer = poch_finite(minus_q(q1), q2, 3 * n)
                                              .shifted(HalfExp::whole(3 * n * n));
                       acc = acc + (inv6[static_cast<std::size_t>(M - n)] *
                                    inv6[static_cast<std::size_t>(2 * n)])
                                       .times_poly(numer);
                   }
                   return acc;
               },
               [](const Binding& b) {
                   const auto M = get(b, "M");
                   const auto order = order_of(b);
                   LaurentPoly theta;
                   for (std::int64_t j = -M; j <= M; ++j)
                       theta += qbinom(2 * M, M + j, q6)
                                    .shifted(HalfExp::whole(6 * j * j + 2 * j));
                   const auto pre = poch_finite(minus_q(q3), q6, M) * theta;
                   return series_inverse(TruncatedSeries(poch_q(q6, 2 * M), order))
                       .times_poly(pre);
               });

    add_poly("t_hierarchy_limit_M", "first hierarchy with M removed",
             {pNu(2), pL(0, 8)},
             [](const Binding& b) {
                 return t_hierarchy_limit_M_lhs(get(b, "nu"), get(b, "L"));
             },
             [](const Binding& b) {
                 return t_hierarchy_limit_M_rhs(get(b, "nu"), get(b, "L"));
             });

    add_series("end_of_t_hierarchy", "product form of the first hierarchy",
               {pNu(3), pOrder(60)},
               [](const Binding& b) { return end_of_t_lhs(get(b, "nu"), order_of(b)); },
               [](const Binding& b) { return end_of_t_rhs(get(b, "nu"), order_of(b)); });

    add_poly("nu0_s", "terminal S-expansion of the seed identity", {pL(0, 8), pM(0, 8)},
             [](const Binding& b) { return nu0_s_lhs(get(b, "L"), get(b, "M")); },
             [](const Binding& b) { return nu0_s_rhs(get(b, "L"), get(b, "M")); });

    add_poly("s_hierarchy", "second doubly bounded hierarchy",
             {pNu(2), pL(0, 4), pM(0, 4)},
             [](const Binding& b) {
                 return s_hierarchy_lhs(get(b, "nu"), get(b, "L"), get(b, "M"));
             },
             [](const Binding& b) {
                 return s_hierarchy_rhs(get(b, "nu"), get(b, "L"), get(b, "M"));
             });

    add_poly("limit_andrews_k", "terminal identity with M removed", {pL(0, 10)},
             [](const Binding& b) { return limit_andrews_k_lhs(get(b, "L")); },
             [](const Binding& b) { return limit_andrews_k_rhs(get(b, "L")); });

    add_series("limit_andrews_dk", "terminal identity with L removed",
               {pM(0, 8), pOrder(60)},
               [](const Binding& b) {
                   return limit_andrews_dk_lhs(get(b, "M"), order_of(b));
               },
               [](const Binding& b) {
                   return limit_andrews_dk_rhs(get(b, "M"), order_of(b));
               });

    add_series("kr1", "series form of Capparelli's first partition theorem",
               {pOrder(100)},
               [](const Binding& b) { return kr1_lhs(order_of(b)); },
               [](const Binding& b) { return kr1_rhs(order_of(b)); });

    add_poly("s_hierarchy_lim_M", "second hierarchy with M removed", {pNu(2), pL(0, 6)},
             [](const Binding& b) {
                 return s_hierarchy_limit_M_lhs(get(b, "nu"), get(b, "L"));
             },
             [](const Binding& b) {
                 return s_hierarchy_limit_M_rhs(get(b, "nu"), get(b, "L"));
             });

    add_poly("s_hierarchy_lim_L", "second hierarchy with L removed", {pNu(2), pM(0, 6)},
             [](const Binding& b) {
                 return s_hierarchy_limit_L_lhs(get(b, "nu"), get(b, "M"));
             },
             [](const Binding& b) {
                 return s_hierarchy_limit_L_rhs(get(b, "nu"), get(b, "M"));
             });

    add_series("end_of_s_hierarchy", "product form of the second hierarchy",
               {pNu(2), pOrder(60)},
               [](const Binding& b) { return end_of_s_lhs(get(b, "nu"), order_of(b)); },
               [](const Binding& b) { return end_of_s_rhs(get(b, "nu"), order_of(b)); });

    add_poly("outlook_seed_plus", "seed variant with the C(n,2) prefactor",
             {pL(0, 10), pM(0, 5)},
             [](const Binding& b) { return seed_lhs(get(b, "L"), get(b, "M"), +1); },
             [](const Binding& b) { return outlook_rhs(get(b, "L"), get(b, "M"), +1); });

    add_poly("outlook_seed_minus", "seed variant with the C(n+1,2) prefactor",
             {pL(0, 10), pM(0, 5)},
             [](const Binding& b) { return seed_lhs(get(b, "L"), get(b, "M"), -1); },
             [](const Binding& b) { return outlook_rhs(get(b, "L"), get(b, "M"), -1); });

    /* harness self-check: perturb=1 shifts the right side by +1 so failure
     * reporting (first mismatch, exit codes) can be exercised end to end */
    add_poly("selfcheck", "reporting self-check; perturb=1 forces a mismatch at q^0",
             {pL(0, 4), {"perturb", 0, 1, 0, 0}},
             [](const Binding& b) { return qbinom(2 * get(b, "L"), get(b, "L"), q1); },
             [](const Binding& b) {
                 auto r = qbinom(2 * get(b, "L"), get(b, "L"), q1);
                 if (get(b, "perturb") != 0) r += LaurentPoly::one();
                 return r;
             });
}

const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

const IdentityDescriptor* Catalog::find(const std::string& id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const IdentityDescriptor& Catalog::at(const std::string& id) const {
    const auto* d = find(id);
    if (!d) raise(errc::unknown_identity, "no identity named '" + id + "'");
    return *d;
}

void Catalog::validate(const IdentityDescriptor& desc, const Binding& binding) const {
    for (const auto& p : desc.params) {
        const auto it = binding.find(p.name);
        if (it == binding.end())
            raise(errc::schema_violation, desc.id + ": missing parameter " + p.name);
        if (it->second < p.min || (p.max && it->second > *p.max))
            raise(errc::schema_violation,
                  desc.id + ": parameter " + p.name + "=" + std::to_string(it->second) +
                      " out of range");
    }
    for (const auto& [name, value] : binding) {
        (void)value;
        bool known = false;
        for (const auto& p : desc.params) known = known || p.name == name;
        if (!known)
            raise(errc::schema_violation, desc.id + ": unknown parameter " + name);
    }
}

PolyPair Catalog::evaluate_poly(const std::string& id, const Binding& binding) const {
    const auto& d = at(id);
    if (d.kind != IdentityKind::polynomial)
        raise(errc::bad_argument, id + " is a series identity");
    validate(d, binding);
    return {d.poly_lhs(binding), d.poly_rhs(binding)};
}

SeriesPair Catalog::evaluate_series(const std::string& id, const Binding& binding) const {
    const auto& d = at(id);
    if (d.kind != IdentityKind::series)
        raise(errc::bad_argument, id + " is a polynomial identity");
    validate(d, binding);
    return {d.series_lhs(binding), d.series_rhs(binding)};
}

InstanceReport Catalog::verify(const std::string& id, const Binding& binding) const {
    const auto& d = at(id);
    validate(d, binding);
    const auto start = std::chrono::steady_clock::now();
    std::optional<Mismatch> mismatch;
    if (d.kind == IdentityKind::polynomial) {
        mismatch = first_mismatch(d.poly_lhs(binding), d.poly_rhs(binding));
    } else {
        const auto lhs = d.series_lhs(binding);
        const auto rhs = d.series_rhs(binding);
        const HalfExp order = std::min(lhs.order(), rhs.order());
        mismatch = first_mismatch(lhs.poly().truncated(order), rhs.poly().truncated(order));
    }
    const auto stop = std::chrono::steady_clock::now();
    InstanceReport r;
    r.pass = !mismatch.has_value();
    r.mismatch = mismatch;
    r.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

} // namespace qtri
