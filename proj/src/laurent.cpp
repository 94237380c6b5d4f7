#include "qtri/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qtri {

const char* errc_name(errc code) {
    switch (code) {
    case errc::ok: return "ok";
    case errc::negative_index_non_polynomial: return "NegativeIndexNonPolynomial";
    case errc::divergent_product: return "DivergentProduct";
    case errc::divergent_theta: return "DivergentTheta";
    case errc::non_unit_series: return "NonUnitSeries";
    case errc::odd_coefficient: return "OddCoefficient";
    case errc::negative_exponent_result: return "NegativeExponentResult";
    case errc::non_exact_division: return "NonExactDivision";
    case errc::unknown_identity: return "UnknownIdentity";
    case errc::schema_violation: return "SchemaViolation";
    case errc::window_too_small: return "WindowTooSmall";
    case errc::unknown_oracle: return "UnknownOracle";
    case errc::bad_argument: return "BadArgument";
    }
    return "unknown";
}

void raise(errc code, const std::string& what) {
    throw Error(code, std::string(errc_name(code)) + ": " + what);
}

std::string HalfExp::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({HalfExp(), std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::monomial(Int c, HalfExp e) {
    LaurentPoly p;
    if (c != 0) p.terms_.push_back({e, std::move(c)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<HalfExp, Int>> terms) {
    std::map<std::int64_t, Int> acc;
    for (auto& [e, c] : terms) acc[e.twice()] += c;
    LaurentPoly p;
    for (auto& [e2, c] : acc)
        if (c != 0) p.terms_.push_back({HalfExp::from_twice(e2), std::move(c)});
    return p;
}

HalfExp LaurentPoly::min_exp() const {
    if (is_zero()) raise(errc::bad_argument, "min_exp of zero polynomial");
    return terms_.front().exp;
}

HalfExp LaurentPoly::max_exp() const {
    if (is_zero()) raise(errc::bad_argument, "max_exp of zero polynomial");
    return terms_.back().exp;
}

bool LaurentPoly::is_integer_exponents() const noexcept {
    for (const auto& t : terms_)
        if (!t.exp.is_integer()) return false;
    return true;
}

Int LaurentPoly::coeff_at(HalfExp e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, HalfExp x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return 0;
}

Int LaurentPoly::eval_at_one() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.coeff;
    return s;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

/* Merge b into a with the given sign. */
void merge_add(std::vector<LaurentPoly::Term>& a,
               const std::vector<LaurentPoly::Term>& b, int sign) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].exp < a[i].exp) {
            out.push_back({b[j].exp, sign > 0 ? b[j].coeff : -b[j].coeff});
            ++j;
        } else {
            Int c = std::move(a[i].coeff);
            if (sign > 0) c += b[j].coeff; else c -= b[j].coeff;
            if (c != 0) out.push_back({a[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    merge_add(terms_, o.terms_, +1);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    merge_add(terms_, o.terms_, -1);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t lo = a.min_exp().twice() + b.min_exp().twice();
    const std::int64_t hi = a.max_exp().twice() + b.max_exp().twice();
    const std::int64_t span = hi - lo + 1;

    LaurentPoly r;
    if (span <= (std::int64_t{1} << 24)) {
        /* Dense accumulation over the exponent range. */
        std::vector<Int> buf(static_cast<std::size_t>(span));
        for (const auto& ta : a.terms())
            for (const auto& tb : b.terms()) {
                auto& slot = buf[static_cast<std::size_t>(ta.exp.twice() + tb.exp.twice() - lo)];
                mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
            }
        for (std::int64_t k = 0; k < span; ++k)
            if (buf[static_cast<std::size_t>(k)] != 0)
                r.terms_.push_back({HalfExp::from_twice(lo + k),
                                    std::move(buf[static_cast<std::size_t>(k)])});
    } else {
        std::map<std::int64_t, Int> acc;
        for (const auto& ta : a.terms())
            for (const auto& tb : b.terms()) {
                auto& slot = acc[ta.exp.twice() + tb.exp.twice()];
                mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
            }
        for (auto& [e2, c] : acc)
            if (c != 0) r.terms_.push_back({HalfExp::from_twice(e2), std::move(c)});
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const noexcept {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(HalfExp e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp = t.exp + e;
    return r;
}

LaurentPoly LaurentPoly::coeff_scaled(const Int& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

LaurentPoly LaurentPoly::substituted_power(std::int64_t k) const {
    if (k == 0) raise(errc::bad_argument, "substitute_power with k = 0");
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp = t.exp * k;
    if (k < 0) std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
}

LaurentPoly LaurentPoly::halved_exponents() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        if (t.exp.twice() % 2 != 0)
            raise(errc::bad_argument, "halving a non-integer exponent would leave Z[q^(1/2)]");
        t.exp = HalfExp::from_twice(t.exp.twice() / 2);
    }
    return r;
}

LaurentPoly LaurentPoly::truncated(HalfExp order) const {
    LaurentPoly r;
    for (const auto& t : terms_) {
        if (t.exp > order) break;
        r.terms_.push_back(t);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool neg = t.coeff < 0;
        Int mag = neg ? Int(-t.coeff) : t.coeff;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (t.exp.twice() == 0) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << "q^(" << t.exp.str() << ")";
        } else {
            os << mag.get_str() << "*q^(" << t.exp.str() << ")";
        }
    }
    return os.str();
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) raise(errc::non_exact_division, "division by zero polynomial");
    if (num.is_zero()) return {};

    const auto& d = den.terms();
    const std::int64_t dmin = d.front().exp.twice();
    const Int& dc = d.front().coeff;
    /* An exact quotient cannot have exponents above this bound. */
    const std::int64_t qmax = num.max_exp().twice() - den.max_exp().twice();

    std::map<std::int64_t, Int> rem;
    for (const auto& t : num.terms()) rem.emplace(t.exp.twice(), t.coeff);

    std::vector<std::pair<HalfExp, Int>> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        const std::int64_t qe = it->first - dmin;
        if (qe > qmax || !mpz_divisible_p(it->second.get_mpz_t(), dc.get_mpz_t()))
            raise(errc::non_exact_division,
                  "polynomial division left a remainder");
        Int qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), dc.get_mpz_t());
        for (const auto& t : d) {
            auto& slot = rem[qe + t.exp.twice()];
            mpz_submul(slot.get_mpz_t(), qc.get_mpz_t(), t.coeff.get_mpz_t());
            if (slot == 0) rem.erase(qe + t.exp.twice());
        }
        quot.emplace_back(HalfExp::from_twice(qe), std::move(qc));
    }
    return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly divide_exact_int(const LaurentPoly& num, const Int& den, errc on_failure) {
    if (den == 0) raise(errc::non_exact_division, "division by zero");
    std::vector<std::pair<HalfExp, Int>> out;
    out.reserve(num.term_count());
    for (const auto& t : num.terms()) {
        if (!mpz_divisible_p(t.coeff.get_mpz_t(), den.get_mpz_t()))
            raise(on_failure, "coefficient " + t.coeff.get_str() +
                                  " not divisible by " + den.get_str());
        Int c;
        mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), den.get_mpz_t());
        out.emplace_back(t.exp, std::move(c));
    }
    return LaurentPoly::from_terms(std::move(out));
}

std::optional<Mismatch> first_mismatch(const LaurentPoly& a, const LaurentPoly& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].exp < tb[j].exp))
            return Mismatch{ta[i].exp, ta[i].coeff, 0};
        if (i == ta.size() || tb[j].exp < ta[i].exp)
            return Mismatch{tb[j].exp, 0, tb[j].coeff};
        if (ta[i].coeff != tb[j].coeff)
            return Mismatch{ta[i].exp, ta[i].coeff, tb[j].coeff};
        ++i;
        ++j;
    }
    return std::nullopt;
}

TruncatedSeries::TruncatedSeries(LaurentPoly p, HalfExp order)
    : poly_(p.truncated(order)), order_(order) {}

TruncatedSeries truncate(const LaurentPoly& p, HalfExp order) {
    return TruncatedSeries(p, order);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const HalfExp order = std::min(a.order(), b.order());
    return TruncatedSeries(a.poly() + b.poly(), order);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const HalfExp order = std::min(a.order(), b.order());
    return TruncatedSeries(a.poly() - b.poly(), order);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!a.poly().is_zero() && a.poly().min_exp() < HalfExp())
        raise(errc::bad_argument, "series product needs nonnegative valuation");
    if (!b.poly().is_zero() && b.poly().min_exp() < HalfExp())
        raise(errc::bad_argument, "series product needs nonnegative valuation");
    const HalfExp order = std::min(a.order(), b.order());
    return TruncatedSeries(a.poly() * b.poly(), order);
}

TruncatedSeries TruncatedSeries::times_poly(const LaurentPoly& p) const {
    HalfExp order = order_;
    if (!p.is_zero() && p.min_exp() < HalfExp()) order = order + p.min_exp();
    return TruncatedSeries(poly_ * p, order);
}

TruncatedSeries TruncatedSeries::truncated(HalfExp order) const {
    return TruncatedSeries(poly_, std::min(order, order_));
}

std::string TruncatedSeries::str() const {
    return poly_.str() + " + O(q^(" + (order_ + HalfExp::from_twice(1)).str() + "))";
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    const auto& p = s.poly();
    if (p.is_zero() || p.min_exp() != HalfExp())
        raise(errc::non_unit_series, "series inverse needs valuation 0");
    const Int& c0 = p.terms().front().coeff;
    if (c0 != 1 && c0 != -1)
        raise(errc::non_unit_series, "series inverse needs constant term +-1");

    const std::int64_t n = s.order().twice();
    if (n < 0) raise(errc::bad_argument, "series inverse with negative order");

    /* b_0 = 1/c_0 and b_e = -(1/c_0) * sum_{k>=1} a_k b_{e-k}, over doubled
     * exponents. */
    std::vector<Int> b(static_cast<std::size_t>(n) + 1);
    b[0] = c0; /* c0 is its own inverse */
    for (std::int64_t e = 1; e <= n; ++e) {
        Int acc = 0;
        for (const auto& t : p.terms()) {
            const std::int64_t k = t.exp.twice();
            if (k == 0) continue;
            if (k > e) break;
            mpz_addmul(acc.get_mpz_t(), t.coeff.get_mpz_t(),
                       b[static_cast<std::size_t>(e - k)].get_mpz_t());
        }
        if (acc != 0) b[static_cast<std::size_t>(e)] = (c0 == 1) ? Int(-acc) : acc;
    }

    std::vector<std::pair<HalfExp, Int>> out;
    for (std::int64_t e = 0; e <= n; ++e)
        if (b[static_cast<std::size_t>(e)] != 0)
            out.emplace_back(HalfExp::from_twice(e), std::move(b[static_cast<std::size_t>(e)]));
    return TruncatedSeries(LaurentPoly::from_terms(std::move(out)), s.order());
}

bool equal_poly(const LaurentPoly& a, const LaurentPoly& b) { return a == b; }

bool equal_series(const TruncatedSeries& a, const TruncatedSeries& b) {
    const HalfExp order = std::min(a.order(), b.order());
    return a.poly().truncated(order) == b.poly().truncated(order);
}

bool equal_series_to(const TruncatedSeries& a, const TruncatedSeries& b, HalfExp order) {
    if (a.order() < order || b.order() < order)
        raise(errc::bad_argument, "series compared beyond their truncation orders");
    return a.poly().truncated(order) == b.poly().truncated(order);
}

} // namespace qtri
