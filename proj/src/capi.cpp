#include "qtri.h"

#include <string>
#include <vector>

#include "qtri/catalog.hpp"
#include "qtri/qseries.hpp"

using namespace qtri;

extern "C" {

struct qtri_catalog {
    const Catalog* catalog;
};

struct qtri_result {
    bool pass = false;
    bool has_mismatch = false;
    long long mismatch_exp2 = 0;
    std::string mismatch_lhs, mismatch_rhs;
    double millis = 0.0;
};

struct qtri_series {
    long long order = 0;
    std::vector<std::string> coeffs; /* index n = coefficient of q^n */
};

} // extern "C"

namespace {

int errc_to_capi(errc code) {
    switch (code) {
    case errc::unknown_identity: return QTRI_ERR_UNKNOWN_IDENTITY;
    case errc::schema_violation: return QTRI_ERR_SCHEMA;
    case errc::unknown_oracle: return QTRI_ERR_UNKNOWN_NAME;
    case errc::bad_argument: return QTRI_ERR_BAD_ARGUMENT;
    default: return QTRI_ERR_EVAL;
    }
}

Binding make_binding(const char* const* names, const long long* values, int n_params) {
    Binding b;
    for (int i = 0; i < n_params; ++i)
        b[names[i]] = static_cast<std::int64_t>(values[i]);
    return b;
}

/* Fill schema defaults (default_lo) for parameters the caller left out. */
void apply_defaults(const IdentityDescriptor& d, Binding& b) {
    for (const auto& p : d.params)
        if (!b.contains(p.name)) b[p.name] = p.default_lo;
}

qtri_series* series_from_poly(const LaurentPoly& poly, long long order) {
    auto* s = new qtri_series;
    s->order = order;
    s->coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (long long n = 0; n <= order; ++n)
        s->coeffs.push_back(poly.coeff_at(HalfExp::whole(n)).get_str());
    return s;
}

} // namespace

extern "C" {

const char* qtri_version(void) { return "1.0.0"; }

const char* qtri_strerror(int code) {
    switch (code) {
    case QTRI_OK: return "ok";
    case QTRI_ERR_BAD_ARGUMENT: return "bad argument";
    case QTRI_ERR_UNKNOWN_IDENTITY: return "unknown identity";
    case QTRI_ERR_SCHEMA: return "parameter outside the identity schema";
    case QTRI_ERR_UNKNOWN_NAME: return "unknown series name";
    case QTRI_ERR_EVAL: return "evaluation error";
    }
    return "unknown error";
}

qtri_catalog* qtri_catalog_new(void) {
    try {
        return new qtri_catalog{&Catalog::instance()};
    } catch (...) {
        return nullptr;
    }
}

void qtri_catalog_free(qtri_catalog* cat) { delete cat; }

int qtri_catalog_count(const qtri_catalog* cat) {
    return cat ? static_cast<int>(cat->catalog->entries().size()) : 0;
}

int qtri_catalog_find(const qtri_catalog* cat, const char* id) {
    if (!cat || !id) return -1;
    const auto& entries = cat->catalog->entries();
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {
const IdentityDescriptor* entry_at(const qtri_catalog* cat, int index) {
    if (!cat) return nullptr;
    const auto& entries = cat->catalog->entries();
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size()) return nullptr;
    return &entries[static_cast<std::size_t>(index)];
}
} // namespace

const char* qtri_catalog_id(const qtri_catalog* cat, int index) {
    const auto* d = entry_at(cat, index);
    return d ? d->id.c_str() : nullptr;
}

int qtri_catalog_kind(const qtri_catalog* cat, int index) {
    const auto* d = entry_at(cat, index);
    return (d && d->kind == IdentityKind::series) ? 1 : 0;
}

const char* qtri_catalog_description(const qtri_catalog* cat, int index) {
    const auto* d = entry_at(cat, index);
    return d ? d->description.c_str() : nullptr;
}

int qtri_catalog_param_count(const qtri_catalog* cat, int index) {
    const auto* d = entry_at(cat, index);
    return d ? static_cast<int>(d->params.size()) : 0;
}

namespace {
const ParamSpec* param_at(const qtri_catalog* cat, int index, int param) {
    const auto* d = entry_at(cat, index);
    if (!d || param < 0 || static_cast<std::size_t>(param) >= d->params.size())
        return nullptr;
    return &d->params[static_cast<std::size_t>(param)];
}
} // namespace

const char* qtri_catalog_param_name(const qtri_catalog* cat, int index, int param) {
    const auto* p = param_at(cat, index, param);
    return p ? p->name.c_str() : nullptr;
}

long long qtri_catalog_param_min(const qtri_catalog* cat, int index, int param) {
    const auto* p = param_at(cat, index, param);
    return p ? p->min : 0;
}

int qtri_catalog_param_max(const qtri_catalog* cat, int index, int param, long long* max) {
    const auto* p = param_at(cat, index, param);
    if (!p || !p->max) return 0;
    if (max) *max = *p->max;
    return 1;
}

long long qtri_catalog_param_default_lo(const qtri_catalog* cat, int index, int param) {
    const auto* p = param_at(cat, index, param);
    return p ? p->default_lo : 0;
}

long long qtri_catalog_param_default_hi(const qtri_catalog* cat, int index, int param) {
    const auto* p = param_at(cat, index, param);
    return p ? p->default_hi : 0;
}

int qtri_verify_instance(const qtri_catalog* cat, const char* id,
                         const char* const* names, const long long* values,
                         int n_params, qtri_result** out) {
    if (out) *out = nullptr;
    if (!cat || !id || !out || (n_params > 0 && (!names || !values)))
        return QTRI_ERR_BAD_ARGUMENT;
    try {
        const auto report = cat->catalog->verify(id, make_binding(names, values, n_params));
        auto* r = new qtri_result;
        r->pass = report.pass;
        r->millis = report.millis;
        if (report.mismatch) {
            r->has_mismatch = true;
            r->mismatch_exp2 = report.mismatch->exp.twice();
            r->mismatch_lhs = report.mismatch->lhs.get_str();
            r->mismatch_rhs = report.mismatch->rhs.get_str();
        }
        *out = r;
        return QTRI_OK;
    } catch (const Error& e) {
        return errc_to_capi(e.code());
    } catch (...) {
        return QTRI_ERR_EVAL;
    }
}

void qtri_result_free(qtri_result* r) { delete r; }

int qtri_result_pass(const qtri_result* r) { return r && r->pass ? 1 : 0; }

int qtri_result_has_mismatch(const qtri_result* r) { return r && r->has_mismatch ? 1 : 0; }

long long qtri_result_mismatch_exponent_twice(const qtri_result* r) {
    return r ? r->mismatch_exp2 : 0;
}

const char* qtri_result_mismatch_lhs(const qtri_result* r) {
    return r && r->has_mismatch ? r->mismatch_lhs.c_str() : nullptr;
}

const char* qtri_result_mismatch_rhs(const qtri_result* r) {
    return r && r->has_mismatch ? r->mismatch_rhs.c_str() : nullptr;
}

double qtri_result_millis(const qtri_result* r) { return r ? r->millis : 0.0; }

int qtri_series_eval(const qtri_catalog* cat, const char* name, long long order,
                     const char* const* names, const long long* values,
                     int n_params, qtri_series** out) {
    if (out) *out = nullptr;
    if (!cat || !name || !out || order < 0 || (n_params > 0 && (!names || !values)))
        return QTRI_ERR_BAD_ARGUMENT;
    try {
        const std::string full(name);
        const HalfExp ord = HalfExp::whole(order);

        if (full == "euler_product") {
            *out = series_from_poly(
                poch_infinite(plus_q(HalfExp::whole(1)), HalfExp::whole(1), ord).poly(),
                order);
            return QTRI_OK;
        }
        if (full == "kr1_product") {
            const auto prod =
                poch_infinite_multi({minus_q(HalfExp::whole(2)), minus_q(HalfExp::whole(4))},
                                    HalfExp::whole(6), ord) *
                poch_infinite(minus_q(HalfExp::whole(3)), HalfExp::whole(3), ord);
            *out = series_from_poly(prod.poly(), order);
            return QTRI_OK;
        }

        const auto dot = full.rfind('.');
        if (dot == std::string::npos) return QTRI_ERR_UNKNOWN_NAME;
        const std::string id = full.substr(0, dot);
        const std::string side = full.substr(dot + 1);
        if (side != "lhs" && side != "rhs") return QTRI_ERR_UNKNOWN_NAME;

        const auto* d = cat->catalog->find(id);
        if (!d) return QTRI_ERR_UNKNOWN_NAME;
        if (d->kind != IdentityKind::series) return QTRI_ERR_BAD_ARGUMENT;

        Binding b = make_binding(names, values, n_params);
        b["order"] = order;
        apply_defaults(*d, b);
        const auto pair = cat->catalog->evaluate_series(id, b);
        const auto& s = side == "lhs" ? pair.lhs : pair.rhs;
        if (!s.poly().is_integer_exponents()) return QTRI_ERR_EVAL;
        *out = series_from_poly(s.poly(), order);
        return QTRI_OK;
    } catch (const Error& e) {
        return errc_to_capi(e.code());
    } catch (...) {
        return QTRI_ERR_EVAL;
    }
}

void qtri_series_free(qtri_series* s) { delete s; }

long long qtri_series_order(const qtri_series* s) { return s ? s->order : -1; }

const char* qtri_series_coeff(const qtri_series* s, long long n) {
    if (!s || n < 0 || n > s->order) return nullptr;
    return s->coeffs[static_cast<std::size_t>(n)].c_str();
}

} // extern "C"
