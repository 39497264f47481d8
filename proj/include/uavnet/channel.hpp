#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uavnet {

enum class LinkState { Los, Nlos };

/// Exponent-form path-loss constants for one environment:
/// zeta^L(r) = 10^(-a_los) * r^(-alpha_los), r in km (and likewise NLoS).
/// Equivalently PL(dB) = 10*a + 10*alpha*log10(r).
struct PathLossParams {
    double a_los;
    double a_nlos;
    double alpha_los;
    double alpha_nlos;

    /// Throws std::invalid_argument unless alpha_nlos > alpha_los > 0 and
    /// a_nlos >= a_los.
    void validate() const;
};

enum class LosModelKind { HighAltitude, LowAltitude, UltraLowAltitude };

/// LoS probability function selector. The sigmoid constants b (slope per
/// degree) and c (offset, degrees) are used by the high-altitude variant
/// only.
struct LosModel {
    LosModelKind kind = LosModelKind::HighAltitude;
    double b = 0.136;
    double c = 11.95;

    void validate() const;

    /// Distances (km) at which the probability function has a derivative
    /// kink; integrators split there. Sorted ascending.
    std::vector<double> breakpoints() const;

    /// Limit of the LoS probability as r -> infinity (0 except for the
    /// high-altitude sigmoid, whose floor is 1/(1 + c*exp(b*c))).
    double floor_probability() const;
};

/// Linear path-loss gain (dimensionless). r in km, r > 0.
double path_loss(const PathLossParams& params, double r, LinkState state);

/// LoS probability at 3D distance r (km) for a transmitter at height h (km).
/// High-altitude requires r >= h (arcsin argument); values of r below h by
/// more than 1e-12 relative throw std::invalid_argument.
double los_probability(const LosModel& model, double r, double h);

/// r1 such that zeta^NL(r1) = zeta^L(r).
double equivalent_distance_nlos(const PathLossParams& params, double r);

/// r2 such that zeta^L(r2) = zeta^NL(r).
double equivalent_distance_los(const PathLossParams& params, double r);

/// Named parameter presets ("high-altitude", "low-altitude",
/// "ultra-low-altitude").
struct EnvironmentPreset {
    std::string name;
    PathLossParams params;
    LosModel los_model;
};

const std::vector<EnvironmentPreset>& environment_presets();

/// Lookup by name; accepts the full name or the short form
/// ("high", "low", "ultra"). Throws std::invalid_argument on unknown names.
const EnvironmentPreset& environment_preset(std::string_view name);

} // namespace uavnet
