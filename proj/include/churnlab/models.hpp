#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "churnlab/common.hpp"

namespace churnlab {

struct TreeNode {
    int feature = -1;         // split column; rows with x <= threshold go left
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double leaf_value = 0.0;  // raw score, leaves only
    double cover = 0.0;       // hessian sum (boosted) or sample weight
    std::size_t sample_count = 0;

    bool is_leaf() const { return left < 0; }
};

struct Tree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root

    double value(const double* row) const;
};

enum class EnsembleMode { Single, BaggedAverage, BoostedSum };

std::string ensemble_mode_name(EnsembleMode mode);
EnsembleMode ensemble_mode_from_name(const std::string& name);

struct TreeEnsemble {
    std::vector<Tree> trees;
    double base_score = 0.0;      // initial raw margin
    EnsembleMode mode = EnsembleMode::Single;
    double learning_rate = 1.0;   // shrinkage, boosted only
};

struct LinearModel {
    std::vector<double> weights;
    double intercept = 0.0;
};

struct Hyperparams {
    int max_depth = 6;
    double min_child_weight = 1.0;
    int n_rounds = 200;           // boosting rounds or forest size
    double learning_rate = 0.3;
    double lambda = 1.0;          // L2 penalty on leaf weights
    double gamma = 0.0;           // minimum split gain
    double subsample = 1.0;       // row fraction per tree, drawn without replacement
    double colsample = 1.0;       // column fraction per split
    bool colsample_sqrt = false;  // use ceil(sqrt(d)) columns per split, overrides colsample
    std::uint64_t seed = 0;

    void validate() const;
};

// L2-penalized logistic regression fit by iteratively reweighted least
// squares; converged when the largest weight change is below 1e-8 or after
// 100 iterations. The intercept is not penalized.
LinearModel train_logistic(const Matrix& x, const std::vector<double>& y, double l2);

// Greedy CART on Gini impurity decrease; leaves store the positive-class
// fraction mapped to log-odds. Ties in gain resolve to the lowest feature
// index, then the lowest threshold.
TreeEnsemble train_cart(const Matrix& x, const std::vector<double>& y, const Hyperparams& hp);

// Bagged CART forest; prediction is the mean of per-tree probabilities.
TreeEnsemble train_forest(const Matrix& x, const std::vector<double>& y, const Hyperparams& hp);

// Newton boosting on logistic loss: g = p - y, h = p(1-p), leaf weight
// -G/(H+lambda), split gain per the second-order expansion minus gamma.
// The raw margin accumulates base_score + learning_rate * sum of trees.
TreeEnsemble train_boosted(const Matrix& x, const std::vector<double>& y, const Hyperparams& hp);

std::vector<double> predict_margin(const TreeEnsemble& model, const Matrix& x);
std::vector<double> predict_proba(const TreeEnsemble& model, const Matrix& x);
std::vector<double> predict_margin(const LinearModel& model, const Matrix& x);
std::vector<double> predict_proba(const LinearModel& model, const Matrix& x);

// penalized logistic negative log-likelihood on the training scale
double logistic_loss(const Matrix& x, const std::vector<double>& y, const LinearModel& model, double l2);

// Versioned model artifact: the exchange format between the train, explain
// and score stages.
struct ModelArtifact {
    int version = 1;
    std::string model_id;  // logistic | cart | forest | boosted
    std::vector<std::string> feature_names;
    std::optional<TreeEnsemble> ensemble;
    std::optional<LinearModel> linear;

    std::vector<double> proba(const Matrix& x) const;
};

void save_model(const ModelArtifact& model, const std::string& path);
ModelArtifact load_model(const std::string& path);

}  // namespace churnlab
