#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace besselwell {

/// Thrown when an energy lies outside the regime a formula is valid in
/// (e.g. E > V0 for the well family, where kappa would turn imaginary).
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class Family {
    V1,           // V0 (exp(2|x|/a) - 1)   confining well
    V2,           // V0 (exp(-2|x|/a) - 1)  valley between -V0 asymptotes
    V3,           // V0 (exp(-2x/a) - 1)    analytic: wall on the left, -V0 on the right
    V4,           // V0 (1 - exp(2|x|/a))   bottomless both sides
    V5,           // V0 (1 - exp(-2|x|/a))  well between +V0 asymptotes
    V6,           // V0 (1 - exp(-2x/a))    analytic: bottomless left, +V0 right
    CubicAbsNeg,  // -|x|^3
    CubicAbs,     // +|x|^3
    Cubic,        // x^3
};

/// Which family member plus its parameters, in units 2m/hbar^2 = 1.
/// V0 and a are ignored by the cubic members. Sign reversal of V0 is a
/// transformation applied in the scattering module, never a negative V0 here.
struct PotentialSpec {
    Family family = Family::V5;
    double v0 = 1.0;  // > 0 for the exponential families
    double a = 1.0;   // > 0
};

/// kappa/q/nu/z0 bundle used by every Bessel-side formula.
/// Well family (V4/V5/V6): kappa = sqrt(V0 - E); valley family (V1/V2/V3):
/// kappa = sqrt(E + V0). Always q = sqrt(V0), nu = kappa*a, z0 = q*a.
struct WaveParams {
    double kappa;
    double q;
    double nu;
    double z0;
};

double evaluate(const PotentialSpec& spec, double x);

WaveParams wave_params(const PotentialSpec& spec, double energy);

bool is_well_family(Family f);    // V4, V5, V6
bool is_valley_family(Family f);  // V1, V2, V3
bool is_cubic(Family f);

std::string family_name(Family f);
Family family_from_name(std::string_view name);

void validate_spec(const PotentialSpec& spec);

}  // namespace besselwell
