#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtri/laurent.hpp"
#include "qtri/qseries.hpp"
#include "qtri/trinomials.hpp"

namespace qtri {

enum class IdentityKind { polynomial, series };

struct ParamSpec {
    std::string name;
    std::int64_t min;
    std::optional<std::int64_t> max;
    /* range used by `verify all` and when the caller gives no range */
    std::int64_t default_lo;
    std::int64_t default_hi;
};

using Binding = std::map<std::string, std::int64_t>;

struct PolyPair {
    LaurentPoly lhs, rhs;
};

struct SeriesPair {
    TruncatedSeries lhs, rhs;
};

/* One identity: a stable id, a parameter schema, and two independently
 * computable sides. Polynomial-kind sides are compared exactly; series-kind
 * sides are compared through the binding's truncation order. */
struct IdentityDescriptor {
    std::string id;
    IdentityKind kind;
    std::string description;
    std::vector<ParamSpec> params;
    std::function<LaurentPoly(const Binding&)> poly_lhs, poly_rhs;
    std::function<TruncatedSeries(const Binding&)> series_lhs, series_rhs;
};

struct InstanceReport {
    bool pass;
    std::optional<Mismatch> mismatch; /* lowest differing exponent on fail */
    double millis;
};

class Catalog {
public:
    static const Catalog& instance();

    const std::vector<IdentityDescriptor>& entries() const noexcept { return entries_; }
    const IdentityDescriptor* find(const std::string& id) const;
    /* throws unknown_identity */
    const IdentityDescriptor& at(const std::string& id) const;

    /* throws schema_violation on missing/extra names or out-of-range values */
    void validate(const IdentityDescriptor& desc, const Binding& binding) const;

    PolyPair evaluate_poly(const std::string& id, const Binding& binding) const;
    SeriesPair evaluate_series(const std::string& id, const Binding& binding) const;

    InstanceReport verify(const std::string& id, const Binding& binding) const;

private:
    Catalog();

    std::vector<IdentityDescriptor> entries_;
    std::map<std::string, std::size_t> index_;
};

/* A sequence pair (F, alpha) with F_{L,M} = sum_j alpha_j T(L, M; a_mult*j,
 * b_mult*j) on a finite window; the expansion is re-checked whenever a pair
 * is built. Feeding a pair through the iterable transform produces the next
 * rung of the hierarchy; the terminal transform lands on an S-expansion. */
struct TrinomialPair {
    HalfExp base;
    std::int64_t a_mult, b_mult;
    std::int64_t L_max, M_max;
    std::vector<std::vector<LaurentPoly>> F; /* F[L][M] */
    std::function<LaurentPoly(std::int64_t)> alpha;
};

/* The seed pair: F = the bounded m-sum side of the seed identity,
 * alpha_j = q^{3j^2+2j}, multipliers (1, 1), base q^6. */
TrinomialPair seed_trinomial_pair(std::int64_t L_max, std::int64_t M_max);

/* Base change q^2 -> q: all exponents halved. */
TrinomialPair halved_base(const TrinomialPair& p);

/* sum_{i} q^{base i^2/2} [L+M-i over L] F_{L-i, i}; needs the window to
 * cover those indices (window_too_small otherwise). */
LaurentPoly transform_T_step(const TrinomialPair& p, std::int64_t L, std::int64_t M);

/* Full transformed pair on a (sub)window, with multipliers (a+b, b) and
 * alpha'_j = q^{base (b j)^2 / 2} alpha_j; re-checks the expansion. */
TrinomialPair transform_T(const TrinomialPair& p, std::int64_t L_max, std::int64_t M_max);

/* Terminal step: sum_i q^{base i^2/2} [L+M-i over L] F_{i, L-i}. */
LaurentPoly transform_S_step(const TrinomialPair& p, std::int64_t L, std::int64_t M);

/* Direct multi-sum evaluations of the two doubly bounded hierarchies. */
std::pair<LaurentPoly, LaurentPoly> t_hierarchy_sides(std::int64_t nu, std::int64_t L,
                                                      std::int64_t M);
std::pair<LaurentPoly, LaurentPoly> s_hierarchy_sides(std::int64_t nu, std::int64_t L,
                                                      std::int64_t M);

} // namespace qtri
