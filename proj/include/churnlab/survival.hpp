#pragma once

#include <optional>
#include <string>
#include <vector>

namespace churnlab {

struct SurvivalSample {
    double duration = 0.0;  // non-negative time, months of tenure here
    bool event = false;     // true = churned, false = right-censored
};

struct SurvivalPoint {
    double time = 0.0;
    std::size_t at_risk = 0;   // n_j, subjects with duration >= time
    std::size_t events = 0;    // d_j
    double survival = 0.0;     // product-limit estimate
    double variance = 0.0;     // Greenwood
    double ci_low = 0.0;       // 95% band, log-transformed normal approximation
    double ci_high = 0.0;
};

struct SurvivalCurve {
    std::vector<SurvivalPoint> points;            // ordered distinct event times
    std::optional<double> median_lifetime;        // smallest t with S(t) <= 0.5
    std::size_t n_samples = 0;
    std::size_t n_events = 0;

    // right-continuous step evaluation; 1 before the first event time
    double survival_at(double time) const;
};

// Kaplan-Meier product-limit estimator. Censored observations at an event
// time leave the risk set after the events at that time.
SurvivalCurve kaplan_meier(const std::vector<SurvivalSample>& samples);

// step-function values of the curve at the requested horizons
std::vector<std::pair<double, double>> survival_summary(const SurvivalCurve& curve,
                                                        const std::vector<double>& horizons);

void save_survival_csv(const SurvivalCurve& curve, const std::string& path);

}  // namespace churnlab
