#pragma once

#include <cstdint>

#include "churnlab/frame.hpp"

namespace churnlab {

// Schema of the e-commerce churn table: 20 columns, one identifier, one
// binary churn target, 13 numeric behavior/demographic features and 5
// categorical ones.
std::vector<ColumnSchema> ecommerce_schema();

struct SynthConfig {
    std::size_t n_rows = 5630;
    std::uint64_t seed = 20250809;
};

// Deterministic synthetic replica of the public e-commerce churn dataset:
// matching schema, marginal ranges, missing-value counts and churn dynamics
// (front-loaded attrition over tenure, complaint-driven risk, protective
// cashback). Intended for tests and demos where the original file is not
// distributable.
Frame synth_ecommerce(const SynthConfig& config);

}  // namespace churnlab
