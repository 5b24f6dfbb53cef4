#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "churnlab/frame.hpp"

namespace churnlab {

struct ImputerParams {
    std::vector<std::string> median_columns;
    std::vector<std::string> iterative_columns;
    int max_rounds = 10;
    double tolerance = 1e-3;   // relative cell change that counts as converged
    double ridge_lambda = 1e-3;
};

// Ridge fit of one column on the other numeric columns, stored on the
// original feature scale so apply-time prediction is a plain dot product.
struct ColumnRegressor {
    std::string column;
    std::vector<std::string> feature_names;
    std::vector<double> coefficients;
    double intercept = 0.0;
    bool median_fallback = false;  // singular system; median used instead
};

struct ImputationPlan {
    ImputerParams params;
    std::map<std::string, double> fitted_medians;        // every imputed column
    std::vector<ColumnRegressor> regressors;             // iterative columns, fit order
    // observed value range per iterative column; predictions clamp to it so
    // imputed cells never extrapolate outside the data
    std::map<std::string, std::pair<double, double>> observed_ranges;
    int rounds_used = 0;
    std::vector<double> round_max_changes;  // convergence trace, one per round
};

// Fits the plan and returns the imputed frame. Iterative procedure:
// missing cells start at column medians; until max_rounds or the largest
// relative cell change drops below tolerance, each iterative column
// (ascending missing-count order) is refit by ridge regression on all other
// numeric columns over its observed rows, and its missing cells are
// overwritten with predictions.
std::pair<ImputationPlan, Frame> fit_impute(const Frame& frame, const ImputerParams& params);

// Replays a fitted plan without refitting.
Frame apply_impute(const ImputationPlan& plan, const Frame& frame);

enum class UnseenCategoryPolicy { Error, AllZeros };

struct EncodingMap {
    struct Entry {
        std::string column;
        std::vector<std::string> categories;       // fit-time order
        std::vector<std::string> indicator_names;  // column "__" category
    };
    std::vector<Entry> entries;
    UnseenCategoryPolicy unseen_policy = UnseenCategoryPolicy::Error;
};

// Replaces each categorical column of k categories with k {0,1} indicator
// columns; exactly one indicator per row is 1. Categories are taken from
// the schema's allowed list, preserving its order.
std::pair<EncodingMap, Frame> one_hot(const Frame& frame);

Frame apply_one_hot(const EncodingMap& map, const Frame& frame);

struct OutlierStats {
    std::vector<double> mean;
    Matrix covariance;
    double threshold = 0.0;  // chi-squared quantile at 1 - alpha
    double alpha = 0.0;
    std::size_t dof = 0;     // feature count
    bool regularized = false;
    std::vector<std::string> feature_names;
};

struct OutlierResult {
    OutlierStats stats;
    Frame retained;
    std::vector<std::size_t> flagged;    // row indices in the input frame
    std::vector<double> distances;       // squared Mahalanobis distance per input row
};

// Flags rows whose squared Mahalanobis distance from the sample mean exceeds
// the chi-squared quantile at 1 - alpha with dof = feature count. Uses all
// numeric modeling columns (indicators included, target and identifiers
// excluded). A singular covariance is regularized once by adding
// (1e-8 * trace / dof) * I.
OutlierResult mahalanobis_filter(const Frame& frame, double alpha);

struct SplitSpec {
    double test_fraction = 0.2;
    std::string stratify_on = "Churn";
    std::uint64_t seed = 0;
};

// Per-class test counts are round(class_count * test_fraction), at least 1.
// Deterministic for a fixed seed; rows keep their relative order.
std::pair<Frame, Frame> stratified_split(const Frame& frame, const SplitSpec& spec);

// Fitted preprocessing state, serialized as a versioned JSON artifact so the
// train-time transform replays bit-identically at scoring time.
struct PipelineArtifacts {
    int version = 1;
    ImputationPlan imputation;
    EncodingMap encoding;
    OutlierStats outliers;
    SplitSpec split;
};

void save_pipeline_artifacts(const PipelineArtifacts& artifacts, const std::string& path);
PipelineArtifacts load_pipeline_artifacts(const std::string& path);

}  // namespace churnlab
