#pragma once

#include <stdexcept>
#include <string>

namespace qtri {

enum class errc {
    ok = 0,
    negative_index_non_polynomial,
    divergent_product,
    divergent_theta,
    non_unit_series,
    odd_coefficient,
    negative_exponent_result,
    non_exact_division,
    unknown_identity,
    schema_violation,
    window_too_small,
    unknown_oracle,
    bad_argument,
};

const char* errc_name(errc code);

/* All library failures are reported through this exception; code() gives the
 * machine-readable reason. */
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] void raise(errc code, const std::string& what);

} // namespace qtri
