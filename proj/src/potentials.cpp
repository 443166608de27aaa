#include "besselwell/potentials.hpp"

#include <cmath>
#include <stdexcept>

namespace besselwell {

bool is_well_family(Family f) {
    return f == Family::V4 || f == Family::V5 || f == Family::V6;
}

bool is_valley_family(Family f) {
    return f == Family::V1 || f == Family::V2 || f == Family::V3;
}

bool is_cubic(Family f) {
    return f == Family::CubicAbsNeg || f == Family::CubicAbs || f == Family::Cubic;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::V1: return "v1";
        case Family::V2: return "v2";
        case Family::V3: return "v3";
        case Family::V4: return "v4";
        case Family::V5: return "v5";
        case Family::V6: return "v6";
        case Family::CubicAbsNeg: return "cubic-abs-neg";
        case Family::CubicAbs: return "cubic-abs";
        case Family::Cubic: return "cubic";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "v1") return Family::V1;
    if (name == "v2") return Family::V2;
    if (name == "v3") return Family::V3;
    if (name == "v4") return Family::V4;
    if (name == "v5") return Family::V5;
    if (name == "v6") return Family::V6;
    if (name == "cubic-abs-neg") return Family::CubicAbsNeg;
    if (name == "cubic-abs") return Family::CubicAbs;
    if (name == "cubic") return Family::Cubic;
    throw std::invalid_argument("unknown potential family: " + std::string(name));
}

void validate_spec(const PotentialSpec& spec) {
    if (is_cubic(spec.family)) return;
    if (!(spec.v0 > 0.0)) throw std::invalid_argument("potential requires V0 > 0");
    if (!(spec.a > 0.0)) throw std::invalid_argument("potential requires a > 0");
}

double evaluate(const PotentialSpec& spec, double x) {
    const double v0 = spec.v0;
    const double a = spec.a;
    switch (spec.family) {
        case Family::V1: return v0 * (std::exp(2.0 * std::abs(x) / a) - 1.0);
        case Family::V2: return v0 * (std::exp(-2.0 * std::abs(x) / a) - 1.0);
        case Family::V3: return v0 * (std::exp(-2.0 * x / a) - 1.0);
        case Family::V4: return v0 * (1.0 - std::exp(2.0 * std::abs(x) / a));
        case Family::V5: return v0 * (1.0 - std::exp(-2.0 * std::abs(x) / a));
        case Family::V6: return v0 * (1.0 - std::exp(-2.0 * x / a));
        case Family::CubicAbsNeg: return -std::abs(x * x * x);
        case Family::CubicAbs: return std::abs(x * x * x);
        case Family::Cubic: return x * x * x;
    }
    return 0.0;
}

WaveParams wave_params(const PotentialSpec& spec, double energy) {
    validate_spec(spec);
    if (is_cubic(spec.family))
        throw std::domain_error("wave_params is defined for the exponential families only");
    const double q = std::sqrt(spec.v0);
    double kappa2;
    if (is_well_family(spec.family)) {
        kappa2 = spec.v0 - energy;
        if (kappa2 < 0.0)
            throw RegimeError("well family requires E <= V0 (real kappa)");
    } else {
        kappa2 = energy + spec.v0;
        if (kappa2 < 0.0)
            throw RegimeError("valley family requires E >= -V0 (real kappa)");
    }
    const double kappa = std::sqrt(kappa2);
    return WaveParams{kappa, q, kappa * spec.a, q * spec.a};
}

}  // namespace besselwell
