#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "qtri.h"

namespace {

struct CatalogHandle {
    qtri_catalog* cat = qtri_catalog_new();
    ~CatalogHandle() { qtri_catalog_free(cat); }
};

} // namespace

TEST_CASE("catalog handle and introspection") {
    CatalogHandle h;
    REQUIRE(h.cat != nullptr);
    CHECK(qtri_catalog_count(h.cat) >= 24);

    const int seed = qtri_catalog_find(h.cat, "seed");
    REQUIRE(seed >= 0);
    CHECK(std::strcmp(qtri_catalog_id(h.cat, seed), "seed") == 0);
    CHECK(qtri_catalog_kind(h.cat, seed) == 0);
    CHECK(qtri_catalog_param_count(h.cat, seed) == 2);
    CHECK(std::strcmp(qtri_catalog_param_name(h.cat, seed, 0), "L") == 0);
    CHECK(qtri_catalog_param_min(h.cat, seed, 0) == 0);
    long long mx = 0;
    CHECK(qtri_catalog_param_max(h.cat, seed, 0, &mx) == 0);

    const int kr1 = qtri_catalog_find(h.cat, "kr1");
    REQUIRE(kr1 >= 0);
    CHECK(qtri_catalog_kind(h.cat, kr1) == 1);

    CHECK(qtri_catalog_find(h.cat, "no_such_identity") == -1);
    CHECK(qtri_catalog_id(h.cat, 100000) == nullptr);
}

TEST_CASE("verify through the C interface") {
    CatalogHandle h;
    const char* names[] = {"L", "M"};
    const long long values[] = {4, 2};
    qtri_result* r = nullptr;
    REQUIRE(qtri_verify_instance(h.cat, "seed", names, values, 2, &r) == QTRI_OK);
    CHECK(qtri_result_pass(r) == 1);
    CHECK(qtri_result_has_mismatch(r) == 0);
    CHECK(qtri_result_mismatch_lhs(r) == nullptr);
    CHECK(qtri_result_millis(r) >= 0.0);
    qtri_result_free(r);
}

TEST_CASE("error codes") {
    CatalogHandle h;
    qtri_result* r = nullptr;
    CHECK(qtri_verify_instance(h.cat, "nonsense", nullptr, nullptr, 0, &r) ==
          QTRI_ERR_UNKNOWN_IDENTITY);
    CHECK(r == nullptr);

    const char* names[] = {"L"};
    const long long values[] = {1};
    CHECK(qtri_verify_instance(h.cat, "seed", names, values, 1, &r) == QTRI_ERR_SCHEMA);

    const char* bad_names[] = {"L", "M"};
    const long long bad_values[] = {-1, 0};
    CHECK(qtri_verify_instance(h.cat, "seed", bad_names, bad_values, 2, &r) ==
          QTRI_ERR_SCHEMA);

    CHECK(qtri_verify_instance(nullptr, "seed", nullptr, nullptr, 0, &r) ==
          QTRI_ERR_BAD_ARGUMENT);

    qtri_series* s = nullptr;
    CHECK(qtri_series_eval(h.cat, "no_product", 5, nullptr, nullptr, 0, &s) ==
          QTRI_ERR_UNKNOWN_NAME);
    CHECK(qtri_series_eval(h.cat, "seed.lhs", 5, nullptr, nullptr, 0, &s) ==
          QTRI_ERR_BAD_ARGUMENT);

    CHECK(std::strcmp(qtri_strerror(QTRI_OK), "ok") == 0);
    CHECK(qtri_strerror(QTRI_ERR_SCHEMA) != nullptr);
}

TEST_CASE("series tables") {
    CatalogHandle h;
    qtri_series* s = nullptr;
    REQUIRE(qtri_series_eval(h.cat, "euler_product", 12, nullptr, nullptr, 0, &s) ==
            QTRI_OK);
    CHECK(qtri_series_order(s) == 12);
    CHECK(std::string(qtri_series_coeff(s, 0)) == "1");
    CHECK(std::string(qtri_series_coeff(s, 1)) == "-1");
    CHECK(std::string(qtri_series_coeff(s, 5)) == "1");
    CHECK(std::string(qtri_series_coeff(s, 12)) == "-1");
    CHECK(qtri_series_coeff(s, 13) == nullptr);
    CHECK(qtri_series_coeff(s, -1) == nullptr);
    qtri_series_free(s);

    /* identity sides; nu falls back to its schema default when omitted */
    REQUIRE(qtri_series_eval(h.cat, "andrews_gordon.rhs", 10, nullptr, nullptr, 0, &s) ==
            QTRI_OK);
    CHECK(std::string(qtri_series_coeff(s, 0)) == "1");
    qtri_series_free(s);

    const char* names[] = {"nu"};
    const long long values[] = {2};
    qtri_series* lhs = nullptr;
    qtri_series* rhs = nullptr;
    REQUIRE(qtri_series_eval(h.cat, "andrews_gordon.lhs", 30, names, values, 1, &lhs) ==
            QTRI_OK);
    REQUIRE(qtri_series_eval(h.cat, "andrews_gordon.rhs", 30, names, values, 1, &rhs) ==
            QTRI_OK);
    for (long long n = 0; n <= 30; ++n)
        CHECK(std::string(qtri_series_coeff(lhs, n)) ==
              std::string(qtri_series_coeff(rhs, n)));
    qtri_series_free(lhs);
    qtri_series_free(rhs);

    /* kr1 product coefficients count mod-6 restricted distinct partitions */
    REQUIRE(qtri_series_eval(h.cat, "kr1_product", 9, nullptr, nullptr, 0, &s) == QTRI_OK);
    const char* expected[] = {"1", "0", "1", "1", "1", "1", "2", "1", "2", "3"};
    for (long long n = 0; n <= 9; ++n)
        CHECK(std::string(qtri_series_coeff(s, n)) == expected[n]);
    qtri_series_free(s);
}

TEST_CASE("failure reporting through the C interface") {
    CatalogHandle h;
    const char* names[] = {"L", "perturb"};
    const long long values[] = {2, 1};
    qtri_result* r = nullptr;
    REQUIRE(qtri_verify_instance(h.cat, "selfcheck", names, values, 2, &r) == QTRI_OK);
    CHECK(qtri_result_pass(r) == 0);
    CHECK(qtri_result_has_mismatch(r) == 1);
    CHECK(qtri_result_mismatch_exponent_twice(r) == 0);
    CHECK(std::string(qtri_result_mismatch_lhs(r)) == "1");
    CHECK(std::string(qtri_result_mismatch_rhs(r)) == "2");
    qtri_result_free(r);
}

TEST_CASE("version string") {
    CHECK(qtri_version() != nullptr);
    CHECK(std::string(qtri_version()).find('.') != std::string::npos);
}
