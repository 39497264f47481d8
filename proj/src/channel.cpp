#include "uavnet/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavnet {

namespace {
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
} // namespace

void PathLossParams::validate() const {
    if (!(alpha_los > 0.0) || !(alpha_nlos > alpha_los))
        throw std::invalid_argument("path-loss exponents require alpha_nlos > alpha_los > 0");
    if (!(a_nlos >= a_los))
        throw std::invalid_argument("path-loss constants require a_nlos >= a_los");
}

void LosModel::validate() const {
    if (kind == LosModelKind::HighAltitude && (!(b > 0.0) || !(c > 0.0)))
        throw std::invalid_argument("high-altitude LoS model requires b > 0 and c > 0");
}

std::vector<double> LosModel::breakpoints() const {
    switch (kind) {
    case LosModelKind::LowAltitude:
        return {0.018}; // min(0.018/r, 1) switches
    case LosModelKind::UltraLowAltitude:
        // 5*exp(-0.156/r) = 0.5 and 5*exp(-r/0.03) = 0.5
        return {0.156 / std::log(10.0), 0.03 * std::log(10.0)};
    case LosModelKind::HighAltitude:
    default:
        return {};
    }
}

double LosModel::floor_probability() const {
    if (kind == LosModelKind::HighAltitude)
        return 1.0 / (1.0 + c * std::exp(b * c));
    return 0.0;
}

double path_loss(const PathLossParams& params, double r, LinkState state) {
    if (!(r > 0.0))
        throw std::invalid_argument("path_loss: distance must be positive");
    const double a = state == LinkState::Los ? params.a_los : params.a_nlos;
    const double alpha = state == LinkState::Los ? params.alpha_los : params.alpha_nlos;
    // 10^(-a) * r^(-alpha), evaluated in log space to keep extreme
    // distances finite.
    return std::exp(-a * std::numbers::ln10 - alpha * std::log(r));
}

double los_probability(const LosModel& model, double r, double h) {
    if (!(r > 0.0))
        throw std::invalid_argument("los_probability: distance must be positive");
    switch (model.kind) {
    case LosModelKind::HighAltitude: {
        if (!(h > 0.0))
            throw std::invalid_argument("los_probability: height must be positive");
        double ratio = h / r;
        if (ratio > 1.0) {
            if (ratio > 1.0 + 1e-12)
                throw std::invalid_argument("los_probability: r < h under the high-altitude model");
            ratio = 1.0; // floating-point noise at r = h
        }
        const double theta = kDegPerRad * std::asin(ratio);
        return 1.0 / (1.0 + model.c * std::exp(-model.b * (theta - model.c)));
    }
    case LosModelKind::LowAltitude: {
        const double e = std::exp(-r / 0.063);
        return std::min(0.018 / r, 1.0) * (1.0 - e) + e;
    }
    case LosModelKind::UltraLowAltitude:
        return 0.5 - std::min(0.5, 5.0 * std::exp(-0.156 / r))
                   + std::min(0.5, 5.0 * std::exp(-r / 0.03));
    }
    throw std::logic_error("los_probability: unknown model kind");
}

double equivalent_distance_nlos(const PathLossParams& params, double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("equivalent_distance_nlos: distance must be positive");
    return std::exp((params.a_los - params.a_nlos) / params.alpha_nlos * std::numbers::ln10
                    + params.alpha_los / params.alpha_nlos * std::log(r));
}

double equivalent_distance_los(const PathLossParams& params, double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("equivalent_distance_los: distance must be positive");
    return std::exp((params.a_nlos - params.a_los) / params.alpha_los * std::numbers::ln10
                    + params.alpha_nlos / params.alpha_los * std::log(r));
}

const std::vector<EnvironmentPreset>& environment_presets() {
    static const std::vector<EnvironmentPreset> presets = {
        {"high-altitude",
         {10.38, 14.54, 2.09, 3.75},
         {LosModelKind::HighAltitude, 0.136, 11.95}},
        {"low-altitude",
         {10.34, 13.11, 2.42, 4.28},
         {LosModelKind::LowAltitude}},
        {"ultra-low-altitude",
         {10.38, 14.54, 2.09, 3.75},
         {LosModelKind::UltraLowAltitude}},
    };
    return presets;
}

const EnvironmentPreset& environment_preset(std::string_view name) {
    for (const auto& p : environment_presets()) {
        if (p.name == name)
            return p;
        // short forms: leading token before the first '-'
        const auto dash = p.name.find('-');
        if (name == std::string_view(p.name).substr(0, dash))
            return p;
    }
    if (name == "ultra" || name == "ultra-low")
        return environment_presets()[2];
    throw std::invalid_argument("unknown environment preset: " + std::string(name));
}

} // namespace uavnet
