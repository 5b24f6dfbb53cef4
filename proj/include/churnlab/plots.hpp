#pragma once

#include <string>
#include <vector>

#include "churnlab/explain.hpp"
#include "churnlab/segment.hpp"
#include "churnlab/survival.hpp"

namespace churnlab {

// Static SVG emitters. Output is a pure function of the input tables with
// fixed-precision coordinates, so identical inputs give identical bytes.

// horizontal bar chart of ranked importance values
std::string svg_importance_bars(const std::vector<std::pair<std::string, double>>& ranked);

// SHAP beeswarm: one lane per feature, x = shap value, fill encodes the
// normalized feature value, deterministic per-instance lane jitter
std::string svg_beeswarm(const std::vector<BeeswarmRow>& rows,
                         const std::vector<std::string>& feature_names, std::size_t max_features = 10);

// Kaplan-Meier step curve with its confidence band
std::string svg_km_curve(const SurvivalCurve& curve);

// per-segment box plots of the R/F/M quintile scores
struct ScoreBox {
    std::string segment;
    // quartiles per metric: [min, q1, median, q3, max]
    double r[5], f[5], m[5];
};
std::string svg_rfm_boxes(const std::vector<ScoreBox>& boxes);

std::vector<ScoreBox> rfm_score_boxes(const std::vector<RfmRecord>& records);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace churnlab
