#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "churnlab/models.hpp"

namespace churnlab {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
};

struct MetricSet {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double error_rate = 0.0;
    bool degenerate_precision = false;  // zero denominator, reported as 0
    bool degenerate_recall = false;
};

MetricSet metrics(const ConfusionCounts& counts);

ConfusionCounts confusion(const std::vector<double>& y_true, const std::vector<double>& proba,
                          double threshold = 0.5);

enum class LearnerKind { Logistic, Cart, Forest, Boosted };

std::string learner_kind_name(LearnerKind kind);
LearnerKind learner_kind_from_name(const std::string& name);

struct LearnerSpec {
    LearnerKind kind = LearnerKind::Boosted;
    Hyperparams hp;
    double l2 = 1.0;  // logistic only
    std::string name() const { return learner_kind_name(kind); }
};

ModelArtifact train_learner(const LearnerSpec& spec, const Matrix& x, const std::vector<double>& y,
                            const std::vector<std::string>& feature_names);

struct CrossValidation {
    std::vector<MetricSet> folds;
    MetricSet mean;
    MetricSet stddev;  // population standard deviation across folds
};

// Stratified k-fold cross-validation; every row lands in exactly one
// validation fold and folds are deterministic for a fixed seed.
CrossValidation cross_validate(const LearnerSpec& spec, const Matrix& x, const std::vector<double>& y,
                               int k, std::uint64_t seed);

struct ModelReport {
    std::string name;
    MetricSet train;
    MetricSet test;
    CrossValidation cv;
    double recall_gap = 0.0;  // train recall - test recall
};

struct Selection {
    std::string model;
    bool tie = false;
};

// Lexicographic choice: highest test recall, then smallest train-test recall
// gap, then smallest cv recall stddev, then model name order.
Selection select_model(const std::vector<ModelReport>& reports);

void save_model_report_csv(const std::vector<ModelReport>& reports, const std::string& path);
void save_model_report_json(const std::vector<ModelReport>& reports, const Selection& selection,
                            const std::string& path);

}  // namespace churnlab
