#include "qtri/recurrence.hpp"

namespace qtri {

namespace {

const HalfExp q2 = HalfExp::whole(2);
const HalfExp q6 = HalfExp::whole(6);

LaurentPoly mono(std::int64_t e) { return LaurentPoly::power(HalfExp::whole(e)); }

/* 1 - q^e */
LaurentPoly one_minus(std::int64_t e) { return LaurentPoly::one() - mono(e); }

/* 1 + q^2 + q^4 */
LaurentPoly triple() {
    return LaurentPoly::one() + mono(2) + mono(4);
}

} // namespace

LaurentPoly summand_G(std::int64_t L, std::int64_t M, std::int64_t k) {
    const auto b = qbinom(3 * M, L - 2 * k, q2) * qbinom(2 * M + k, k, q6);
    if (b.is_zero()) return {};
    const std::int64_t m = L - 2 * k;
    return b.shifted(HalfExp::whole(m * m));
}

LaurentPoly summand_F(std::int64_t L, std::int64_t M, std::int64_t k, std::int64_t j) {
    auto b = qbinom(M, L - j - 2 * k, q6) * qbinom(M + j + k, k, q6);
    if (b.is_zero()) return {};
    b *= qbinom(M + k, k + j, q6);
    if (b.is_zero()) return {};
    const std::int64_t n = L - j - 2 * k;
    return b.shifted(HalfExp::whole(3 * j * j + 2 * j + 3 * n * n));
}

LaurentPoly seed_side(SeedSide side, std::int64_t L, std::int64_t M) {
    LaurentPoly acc;
    if (side == SeedSide::lhs) {
        for (std::int64_t k = 0; 2 * k <= L; ++k) acc += summand_G(L, M, k);
    } else {
        for (std::int64_t k = 0; k <= L; ++k)
            for (std::int64_t j = -k; j + 2 * k <= L; ++j) acc += summand_F(L, M, k, j);
    }
    return acc;
}

LaurentPoly g_recurrence_residual(std::int64_t L, std::int64_t M, std::int64_t k) {
    LaurentPoly r;
    r += (one_minus(12 + 6 * L + 6 * M) * summand_G(L, M, k)).shifted(HalfExp::whole(9 + 18 * M));
    r -= (triple() * (mono(18 + 6 * L + 12 * M) - LaurentPoly::one()) * summand_G(L + 1, M, k))
             .shifted(HalfExp::whole(4 + 12 * M));
    r += (one_minus(24 + 6 * L + 18 * M) * triple() * summand_G(L + 2, M, k))
             .shifted(HalfExp::whole(1 + 6 * M));
    r -= one_minus(12 + 24 * M) * summand_G(L + 3, M + 1, k);
    r += one_minus(30 + 6 * L + 24 * M) * summand_G(L + 3, M, k);
    r += ((LaurentPoly::one() + mono(6)) * one_minus(6 + 12 * M) * summand_G(L + 1, M + 1, k - 1))
             .shifted(HalfExp::whole(6 + 12 * M));
    return r;
}

bool check_G_recurrence(std::int64_t L, std::int64_t M, std::int64_t k) {
    return g_recurrence_residual(L, M, k).is_zero();
}

LaurentPoly f_recurrence_residual(std::int64_t L, std::int64_t M, std::int64_t k,
                                  std::int64_t j) {
    LaurentPoly r;
    r += (one_minus(12 + 6 * L + 6 * M) * summand_F(L, M, k - 1, j - 1))
             .shifted(HalfExp::whole(9 + 18 * M));
    r += (one_minus(18 + 6 * L + 12 * M) * summand_F(L + 1, M, k - 1, j))
             .shifted(HalfExp::whole(4 + 12 * M));
    r += (one_minus(18 + 6 * L + 12 * M) * summand_F(L + 1, M, k - 1, j - 1))
             .shifted(HalfExp::whole(6 + 12 * M));
    r -= one_minus(12 + 24 * M) * summand_F(L + 3, M + 1, k, j - 1);
    r += (one_minus(24 + 6 * L + 18 * M) * summand_F(L + 2, M, k, j - 1))
             .shifted(HalfExp::whole(3 + 6 * M));
    r += (one_minus(24 + 6 * L + 18 * M) * summand_F(L + 2, M, k, j - 2))
             .shifted(HalfExp::whole(5 + 6 * M));
    r += (one_minus(24 + 6 * L + 18 * M) * summand_F(L + 2, M, k - 1, j))
             .shifted(HalfExp::whole(1 + 6 * M));
    r += one_minus(30 + 6 * L + 24 * M) * summand_F(L + 3, M, k, j - 1);
    r += ((LaurentPoly::one() + mono(6)) * one_minus(6 + 12 * M) *
          summand_F(L + 1, M + 1, k - 1, j - 1))
             .shifted(HalfExp::whole(6 + 12 * M));
    r += (one_minus(18 + 6 * L + 12 * M) * summand_F(L + 1, M, k, j - 2))
             .shifted(HalfExp::whole(8 + 12 * M));
    return r;
}

bool check_F_recurrence(std::int64_t L, std::int64_t M, std::int64_t k, std::int64_t j) {
    return f_recurrence_residual(L, M, k, j).is_zero();
}

LaurentPoly sum_recurrence_residual(SeedSide side, std::int64_t L, std::int64_t M) {
    const auto S = [&](std::int64_t l, std::int64_t m) { return seed_side(side, l, m); };
    LaurentPoly r;
    r += (one_minus(12 + 6 * L + 6 * M) * S(L, M)).shifted(HalfExp::whole(9 + 18 * M));
    r -= (triple() * (mono(18 + 6 * L + 12 * M) - LaurentPoly::one()) * S(L + 1, M))
             .shifted(HalfExp::whole(4 + 12 * M));
    r += (one_minus(24 + 6 * L + 18 * M) * triple() * S(L + 2, M))
             .shifted(HalfExp::whole(1 + 6 * M));
    r += one_minus(30 + 6 * L + 24 * M) * S(L + 3, M);
    r += ((LaurentPoly::one() + mono(6)) * one_minus(6 + 12 * M) * S(L + 1, M + 1))
             .shifted(HalfExp::whole(6 + 12 * M));
    r -= one_minus(12 + 24 * M) * S(L + 3, M + 1);
    return r;
}

bool check_sum_recurrence(SeedSide side, std::int64_t L, std::int64_t M) {
    return sum_recurrence_residual(side, L, M).is_zero();
}

LaurentPoly boundary_row(std::int64_t L, std::int64_t M) {
    if (M < 0 || L < 0) raise(errc::bad_argument, "boundary row needs L, M >= 0");
    if (M == 0) return L % 2 == 0 ? LaurentPoly::one() : LaurentPoly();
    switch (L) {
    case 0: return LaurentPoly::one();
    case 1: return qbinom(3 * M, 1, q2).shifted(HalfExp::whole(1));
    case 2:
        return qbinom(2 * M + 1, 1, q6) + qbinom(3 * M, 2, q2).shifted(HalfExp::whole(4));
    default:
        raise(errc::bad_argument, "no closed boundary row for L > 2");
    }
}

bool check_boundaries(std::int64_t L_max, std::int64_t M_max) {
    for (std::int64_t L = 0; L <= L_max; ++L)
        for (const auto side : {SeedSide::lhs, SeedSide::rhs})
            if (!(seed_side(side, L, 0) == boundary_row(L, 0))) return false;
    for (std::int64_t M = 0; M <= M_max; ++M)
        for (std::int64_t L = 0; L <= 2; ++L)
            for (const auto side : {SeedSide::lhs, SeedSide::rhs})
                if (!(seed_side(side, L, M) == boundary_row(L, M))) return false;
    return true;
}

SeedGrid reconstruct_S(std::int64_t L_max, std::int64_t M_max) {
    if (L_max < 3) raise(errc::bad_argument, "reconstruction needs L_max >= 3");
    SeedGrid grid;
    for (std::int64_t L = 0; L <= L_max; ++L) grid[{L, 0}] = boundary_row(L, 0);
    for (std::int64_t mu = 1; mu <= M_max; ++mu) {
        for (std::int64_t L = 0; L <= std::min<std::int64_t>(2, L_max); ++L)
            grid[{L, mu}] = boundary_row(L, mu);
        /* Solve the summed recurrence at (L, mu-1) for the (L+3, mu) value;
         * ascending L keeps the (L+1, mu) entry already available. */
        for (std::int64_t Lt = 3; Lt <= L_max; ++Lt) {
            const std::int64_t L = Lt - 3;
            const std::int64_t M = mu - 1;
            LaurentPoly rhs;
            rhs += (one_minus(12 + 6 * L + 6 * M) * grid[{L, M}])
                       .shifted(HalfExp::whole(9 + 18 * M));
            rhs += (triple() * one_minus(18 + 6 * L + 12 * M) * grid[{L + 1, M}])
                       .shifted(HalfExp::whole(4 + 12 * M));
            rhs += (triple() * one_minus(24 + 6 * L + 18 * M) * grid[{L + 2, M}])
                       .shifted(HalfExp::whole(1 + 6 * M));
            rhs += one_minus(30 + 6 * L + 24 * M) * grid[{L + 3, M}];
            rhs += ((LaurentPoly::one() + mono(6)) * one_minus(6 + 12 * M) * grid[{L + 1, mu}])
                       .shifted(HalfExp::whole(6 + 12 * M));
            grid[{Lt, mu}] = divide_exact(rhs, one_minus(12 + 24 * M));
        }
    }
    return grid;
}

} // namespace qtri
