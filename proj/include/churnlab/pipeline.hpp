#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "churnlab/eval.hpp"
#include "churnlab/frame.hpp"
#include "churnlab/preprocess.hpp"
#include "churnlab/segment.hpp"

namespace churnlab {

struct RunConfig {
    int version = 1;
    std::string dataset_path;
    std::string schema_path;
    std::string out_dir = "out";
    std::uint64_t seed = 7;
    int threads = 1;

    double alpha = 0.001;  // Mahalanobis significance
    ImputerParams imputer;
    double test_fraction = 0.2;
    int cv_folds = 5;

    LearnerSpec logistic, cart, forest, boosted;

    std::string survival_duration = "Tenure";
    std::string survival_event = "Churn";
    std::vector<double> survival_horizons = {0, 6, 12, 21, 24, 36, 48, 60};

    RfmMapping rfm;
    std::optional<std::string> rules_path;

    static RunConfig defaults();
    // fails with ConfigError when the referenced input paths do not resolve
    void validate() const;
};

RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& config, const std::string& path);

struct RunManifest {
    std::string config_json;                       // resolved config snapshot
    std::size_t rows_raw = 0;
    std::size_t rows_deduplicated = 0;
    std::size_t rows_outliers_removed = 0;
    std::size_t rows_final = 0;
    std::string selected_model;
    std::map<std::string, std::string> digests;    // file -> sha256
    std::string started_at;                        // ISO-8601 UTC
    std::string finished_at;
};

void save_manifest(const RunManifest& manifest, const std::string& path);

// Stage functions; each consumes the previous stage's serialized artifacts
// from the output directory, so chaining them equals one full run.
void stage_ingest(const RunConfig& config);
void stage_preprocess(const RunConfig& config);
void stage_train(const RunConfig& config);
void stage_evaluate(const RunConfig& config);
void stage_explain(const RunConfig& config);
void stage_survival(const RunConfig& config);
void stage_segment(const RunConfig& config);
void stage_report(const RunConfig& config);

// ingest through report plus the manifest; partial outputs keep a `.partial`
// marker when a stage aborts
RunManifest run_pipeline(const RunConfig& config);

// frame bundles: <base>.csv plus <base>.schema.json sidecar
void write_frame_bundle(const Frame& frame, const std::string& base_path);
Frame read_frame_bundle(const std::string& base_path);

}  // namespace churnlab
