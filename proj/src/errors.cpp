#include "lerchphi/errors.hpp"

namespace lerchphi {

const char* errc_name(errc c) {
    switch (c) {
        case errc::pole_in_range: return "PoleInRange";
        case errc::pole_at_negative_integer: return "PoleAtNegativeInteger";
        case errc::pole_at_one: return "PoleAtOne";
        case errc::pole_at_non_positive_integer: return "PoleAtNonPositiveInteger";
        case errc::pole_hit: return "PoleHit";
        case errc::singular_sine: return "SingularSine";
        case errc::near_singular_regime: return "NearSingularRegime";
        case errc::coth_pole: return "CothPole";
        case errc::divergent_series: return "DivergentSeries";
        case errc::formula_breakdown: return "FormulaBreakdown";
        case errc::excluded_region: return "ExcludedRegion";
        case errc::zero_b: return "ZeroB";
        case errc::improper_at_zero: return "ImproperAtZero";
        case errc::budget_exhausted: return "BudgetExhausted";
        case errc::non_finite: return "NonFinite";
        case errc::no_convergence: return "NoConvergence";
        case errc::quadrature_failure: return "QuadratureFailure";
    }
    return "UnknownError";
}

}  // namespace lerchphi
