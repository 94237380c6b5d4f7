#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qtri/error.hpp"
#include "qtri/halfexp.hpp"

namespace qtri {

/* Coefficients are arbitrary-precision signed integers. Everything in this
 * library is exact; there is no rounding anywhere. */
using Int = mpz_class;

/* Sparse Laurent polynomial in q with half-integer exponents. Canonical
 * form: terms sorted by ascending exponent, no stored coefficient is zero,
 * the zero polynomial is the empty term list. Values are immutable after
 * construction apart from compound assignment; all operations are pure. */
class LaurentPoly {
public:
    struct Term {
        HalfExp exp;
        Int coeff;
    };

    LaurentPoly() = default;

    static LaurentPoly constant(Int c);
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly monomial(Int c, HalfExp e);
    /* q^e with coefficient 1 */
    static LaurentPoly power(HalfExp e) { return monomial(1, e); }
    /* Normalizes: merges duplicate exponents, drops zeros. */
    static LaurentPoly from_terms(std::vector<std::pair<HalfExp, Int>> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /* Pre: !is_zero() */
    HalfExp min_exp() const;
    HalfExp max_exp() const;

    bool is_integer_exponents() const noexcept;
    Int coeff_at(HalfExp e) const;
    /* Sum of all coefficients, i.e. the value at q = 1. */
    Int eval_at_one() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& o) const noexcept;

    /* Multiply by the monomial q^e. */
    LaurentPoly shifted(HalfExp e) const;
    /* Multiply every coefficient by c. */
    LaurentPoly coeff_scaled(const Int& c) const;
    /* q -> q^k for nonzero integer k; every exponent e becomes k*e. */
    LaurentPoly substituted_power(std::int64_t k) const;
    /* q -> q^{1/2}; every exponent must currently be an integer. */
    LaurentPoly halved_exponents() const;
    /* Drop every term with exponent > order. */
    LaurentPoly truncated(HalfExp order) const;

    /* Text rendering as `c*q^(e)` terms, ascending exponent order, with e
     * printed as an integer or `k/2`. The zero polynomial prints "0". */
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/* Exact quotient of two polynomials; throws errc::non_exact_division when a
 * nonzero remainder (or a non-integral coefficient quotient) would occur. */
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/* Exact coefficient-wise division by an integer. */
LaurentPoly divide_exact_int(const LaurentPoly& num, const Int& den,
                             errc on_failure = errc::non_exact_division);

struct Mismatch {
    HalfExp exp;
    Int lhs;
    Int rhs;
};

/* Lowest exponent where a and b differ, with both coefficients (zero for a
 * missing term); nullopt when the polynomials are equal. */
std::optional<Mismatch> first_mismatch(const LaurentPoly& a, const LaurentPoly& b);

/* A Laurent polynomial together with a truncation order: terms with exponent
 * above the order have been discarded and are unknown. Models every infinite
 * product or sum in the library, cut at a finite order. */
class TruncatedSeries {
public:
    /* Truncates p at the given order. */
    TruncatedSeries(LaurentPoly p, HalfExp order);

    const LaurentPoly& poly() const noexcept { return poly_; }
    HalfExp order() const noexcept { return order_; }

    TruncatedSeries operator-() const { return TruncatedSeries(-poly_, order_); }
    /* Result order is the min of the operand orders. */
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    /* Both operands must have nonnegative valuation. */
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /* Multiply by a polynomial. A negative minimum exponent of p lowers the
     * order of the result accordingly. */
    TruncatedSeries times_poly(const LaurentPoly& p) const;
    TruncatedSeries coeff_scaled(const Int& c) const { return TruncatedSeries(poly_.coeff_scaled(c), order_); }
    TruncatedSeries truncated(HalfExp order) const;

    std::string str() const;

private:
    LaurentPoly poly_;
    HalfExp order_;
};

TruncatedSeries truncate(const LaurentPoly& p, HalfExp order);

/* Reciprocal of s up to its order. Requires valuation 0 and constant
 * coefficient +-1; otherwise throws errc::non_unit_series. */
TruncatedSeries series_inverse(const TruncatedSeries& s);

bool equal_poly(const LaurentPoly& a, const LaurentPoly& b);

/* Exact equality of the truncations up to min(a.order, b.order). */
bool equal_series(const TruncatedSeries& a, const TruncatedSeries& b);

/* As equal_series but both operands must have order >= the comparison order. */
bool equal_series_to(const TruncatedSeries& a, const TruncatedSeries& b, HalfExp order);

} // namespace qtri
