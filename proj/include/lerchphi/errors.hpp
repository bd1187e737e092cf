#pragma once

#include <stdexcept>
#include <string>

namespace lerchphi {

enum class errc {
    pole_in_range,
    pole_at_negative_integer,
    pole_at_one,
    pole_at_non_positive_integer,
    pole_hit,
    singular_sine,
    near_singular_regime,
    coth_pole,
    divergent_series,
    formula_breakdown,
    excluded_region,
    zero_b,
    improper_at_zero,
    budget_exhausted,
    non_finite,
    no_convergence,
    quadrature_failure,
};

const char* errc_name(errc c);

/// Argument outside a formula's validity region (poles, excluded regions,
/// divergent cases). CLI maps these to exit code 2.
class domain_error : public std::domain_error {
public:
    domain_error(errc code, const std::string& what)
        : std::domain_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// A numerical process failed to reach its tolerance. CLI maps these to
/// exit code 3.
class convergence_error : public std::runtime_error {
public:
    convergence_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace lerchphi
