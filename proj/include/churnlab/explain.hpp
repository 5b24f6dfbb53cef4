#pragma once

#include <string>
#include <vector>

#include "churnlab/models.hpp"

namespace churnlab {

// Per-instance Shapley attributions of the raw margin. For every row,
// base_value + sum of phi equals the model margin (local accuracy).
struct ShapMatrix {
    std::size_t n_rows = 0;
    std::size_t n_features = 0;
    std::vector<double> phi;  // row-major, n_rows x n_features
    double base_value = 0.0;  // cover-weighted expected margin
    std::vector<std::string> feature_names;

    double at(std::size_t row, std::size_t feature) const { return phi[row * n_features + feature]; }
};

// Exact polynomial-time TreeSHAP over the path-dependent background encoded
// by per-node cover. Supports single and boosted-sum ensembles; boosted
// attributions sum across trees scaled by the learning rate. Bagged forests
// average probabilities, not margins, so they are rejected with a pointer to
// the additive modes.
ShapMatrix tree_shap(const TreeEnsemble& ensemble, const Matrix& x,
                     const std::vector<std::string>& feature_names, int threads = 1);

struct GlobalImportance {
    std::vector<double> values;        // mean |phi| per feature, input order
    std::vector<std::size_t> ranking;  // feature indices, descending importance
};

GlobalImportance global_importance(const ShapMatrix& shap);

struct BeeswarmRow {
    std::size_t feature;   // index into feature_names
    std::size_t instance;
    double shap_value;
    double normalized_value;  // feature value scaled to [0,1]; 0.5 when constant
};

// Long-format plot data, features ordered by global importance.
std::vector<BeeswarmRow> beeswarm_export(const ShapMatrix& shap, const Matrix& x);

void save_shap_csv(const ShapMatrix& shap, const std::string& path);
void save_importance_csv(const ShapMatrix& shap, const GlobalImportance& importance, const std::string& path);
void save_beeswarm_csv(const ShapMatrix& shap, const std::vector<BeeswarmRow>& rows, const std::string& path);

}  // namespace churnlab
