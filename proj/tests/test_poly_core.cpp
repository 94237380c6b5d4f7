#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtri/laurent.hpp"

using namespace qtri;

namespace {

/* Small helper: polynomial from (whole exponent, coefficient) pairs. */
LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> items) {
    std::vector<std::pair<HalfExp, Int>> terms;
    for (auto& [e, c] : items) terms.emplace_back(HalfExp::whole(e), Int(c));
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<std::int64_t> exp(-6, 6);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    std::vector<std::pair<HalfExp, Int>> terms;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        terms.emplace_back(HalfExp::from_twice(exp(rng)), Int(coeff(rng)));
    return LaurentPoly::from_terms(std::move(terms));
}

} // namespace

TEST_CASE("addition reaches canonical form") {
    // (1+q) + (-q) = 1
    const auto a = poly({{0, 1}, {1, 1}});
    const auto b = poly({{1, -1}});
    CHECK(a + b == LaurentPoly::one());

    // 0 + p = p
    CHECK(LaurentPoly() + a == a);

    // (1-q) + (1+q) = 2
    CHECK(poly({{0, 1}, {1, -1}}) + poly({{0, 1}, {1, 1}}) == LaurentPoly::constant(2));
}

TEST_CASE("multiplication") {
    // (1-q)(1+q) = 1-q^2
    CHECK(poly({{0, 1}, {1, -1}}) * poly({{0, 1}, {1, 1}}) == poly({{0, 1}, {2, -1}}));

    // q^(1/2) * q^(1/2) = q
    const auto h = LaurentPoly::power(HalfExp::from_twice(1));
    CHECK(h * h == poly({{1, 1}}));

    // (1+q)(1+q^2) = 1+q+q^2+q^3
    CHECK(poly({{0, 1}, {1, 1}}) * poly({{0, 1}, {2, 1}}) ==
          poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("substitute_power") {
    CHECK(poly({{0, 1}, {1, 1}}).substituted_power(6) == poly({{0, 1}, {6, 1}}));
    CHECK(poly({{1, 1}, {2, 1}}).substituted_power(-1) == poly({{-2, 1}, {-1, 1}}));
    CHECK(LaurentPoly::one().substituted_power(5) == LaurentPoly::one());
    CHECK_THROWS_AS(poly({{1, 1}}).substituted_power(0), Error);
}

TEST_CASE("substitute_power by -1 is an involution") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const auto p = random_poly(rng);
        CHECK(p.substituted_power(-1).substituted_power(-1) == p);
    }
}

TEST_CASE("shift") {
    CHECK(poly({{0, 1}, {1, 1}}).shifted(HalfExp::whole(1)) == poly({{1, 1}, {2, 1}}));
    const auto p = poly({{0, 3}, {2, -1}});
    CHECK(p.shifted(HalfExp::whole(0)) == p);
    CHECK(poly({{-1, 1}}).shifted(HalfExp::whole(1)) == LaurentPoly::one());
}

TEST_CASE("eval_at_one") {
    CHECK(poly({{0, 1}, {1, 1}, {2, 1}}).eval_at_one() == 3);
    CHECK(LaurentPoly().eval_at_one() == 0);
}

TEST_CASE("truncate keeps the boundary term") {
    const auto s = truncate(poly({{0, 1}, {1, 1}, {5, 1}}), HalfExp::whole(3));
    CHECK(s.poly() == poly({{0, 1}, {1, 1}}));
    CHECK(s.order() == HalfExp::whole(3));

    const auto z = truncate(LaurentPoly(), HalfExp::whole(10));
    CHECK(z.poly().is_zero());
    CHECK(z.order() == HalfExp::whole(10));

    CHECK(truncate(poly({{0, 1}, {3, 1}}), HalfExp::whole(3)).poly() == poly({{0, 1}, {3, 1}}));
}

TEST_CASE("series inverse") {
    // 1/(1-q) = 1+q+q^2+q^3+q^4 to order 4
    const auto inv = series_inverse(truncate(poly({{0, 1}, {1, -1}}), HalfExp::whole(4)));
    CHECK(inv.poly() == poly({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));

    CHECK(series_inverse(truncate(LaurentPoly::one(), HalfExp::whole(7))).poly() ==
          LaurentPoly::one());

    // inverse of -1 + q is -1 - q - q^2 ...
    const auto neg = series_inverse(truncate(poly({{0, -1}, {1, 1}}), HalfExp::whole(2)));
    CHECK(neg.poly() == poly({{0, -1}, {1, -1}, {2, -1}}));

    CHECK_THROWS_AS(series_inverse(truncate(poly({{0, 2}}), HalfExp::whole(3))), Error);
    CHECK_THROWS_AS(series_inverse(truncate(poly({{1, 1}}), HalfExp::whole(3))), Error);
}

TEST_CASE("series equality is up to the shared order") {
    const auto a = truncate(poly({{0, 1}, {99, 1}}), HalfExp::whole(5));
    const auto b = truncate(LaurentPoly::one(), HalfExp::whole(5));
    CHECK(equal_series(a, b));
    CHECK(equal_series_to(a, b, HalfExp::whole(5)));
    CHECK_THROWS_AS(equal_series_to(a, b, HalfExp::whole(6)), Error);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(987654);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        const auto c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("no zero coefficients are ever stored") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 300; ++i) {
        const auto p = random_poly(rng) * random_poly(rng) + random_poly(rng);
        for (const auto& t : p.terms()) CHECK(t.coeff != 0);
    }
}

TEST_CASE("minimum degree is additive for nonzero factors") {
    std::mt19937 rng(31415);
    int checked = 0;
    while (checked < 200) {
        const auto a = random_poly(rng);
        const auto b = random_poly(rng);
        if (a.is_zero() || b.is_zero()) continue;
        const auto p = a * b;
        REQUIRE(!p.is_zero());
        CHECK(p.min_exp() == a.min_exp() + b.min_exp());
        CHECK(p.max_exp() == a.max_exp() + b.max_exp());
        ++checked;
    }
}

TEST_CASE("exact division") {
    const auto a = poly({{0, 1}, {1, 2}, {3, -1}});
    const auto b = poly({{0, 1}, {2, 5}, {4, 3}});
    CHECK(divide_exact(a * b, b) == a);
    CHECK(divide_exact(LaurentPoly(), b).is_zero());
    CHECK_THROWS_AS(divide_exact(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, -1}})), Error);
    CHECK_THROWS_AS(divide_exact(poly({{0, 1}}), LaurentPoly()), Error);

    CHECK(divide_exact_int(poly({{0, 2}, {1, -4}}), 2) == poly({{0, 1}, {1, -2}}));
    CHECK_THROWS_AS(divide_exact_int(poly({{0, 1}}), 2), Error);
}

TEST_CASE("first mismatch reporting") {
    const auto a = poly({{0, 1}, {1, 1}});
    const auto b = poly({{0, 1}, {1, 1}, {2, 1}});
    CHECK(!first_mismatch(a, a).has_value());
    const auto m = first_mismatch(a, b);
    REQUIRE(m.has_value());
    CHECK(m->exp == HalfExp::whole(2));
    CHECK(m->lhs == 0);
    CHECK(m->rhs == 1);

    const auto n = first_mismatch(poly({{0, 2}}), poly({{0, 3}}));
    REQUIRE(n.has_value());
    CHECK(n->exp == HalfExp::whole(0));
    CHECK(n->lhs == 2);
    CHECK(n->rhs == 3);
}

TEST_CASE("text rendering") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(poly({{0, 1}, {1, -1}, {3, 2}}).str() == "1 - q^(1) + 2*q^(3)");
    CHECK(LaurentPoly::monomial(-3, HalfExp::from_twice(7)).str() == "-3*q^(7/2)");
    CHECK(LaurentPoly::monomial(1, HalfExp::from_twice(-1)).str() == "q^(-1/2)");
    CHECK(poly({{-2, 1}, {0, 5}}).str() == "q^(-2) + 5");
}

TEST_CASE("half exponent bookkeeping") {
    CHECK(HalfExp::whole(3).str() == "3");
    CHECK(HalfExp::from_twice(7).str() == "7/2");
    CHECK(HalfExp::from_twice(-7).str() == "-7/2");
    CHECK(HalfExp::from_twice(6).is_integer());
    CHECK(!HalfExp::from_twice(5).is_integer());

    const auto p = LaurentPoly::power(HalfExp::from_twice(3));
    CHECK(!p.is_integer_exponents());
    CHECK((p * p).is_integer_exponents());
    CHECK((p * p).halved_exponents() == poly({{0, 0}, {1, 0}}) + LaurentPoly::power(HalfExp::from_twice(3)));
    CHECK_THROWS_AS(p.halved_exponents(), Error);
}

TEST_CASE("series arithmetic respects orders") {
    const auto a = truncate(poly({{0, 1}, {1, 1}}), HalfExp::whole(8));
    const auto b = truncate(poly({{0, 1}, {1, -1}}), HalfExp::whole(5));
    CHECK((a + b).order() == HalfExp::whole(5));
    CHECK((a * b).order() == HalfExp::whole(5));
    CHECK((a * b).poly() == poly({{0, 1}, {2, -1}}));

    // multiplying by q^{-1} lowers what is known
    const auto c = a.times_poly(poly({{-1, 1}}));
    CHECK(c.order() == HalfExp::whole(7));

    CHECK_THROWS_AS(truncate(poly({{-1, 1}}), HalfExp::whole(3)) * a, Error);
}
